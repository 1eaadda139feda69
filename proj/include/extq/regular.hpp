#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "extq/graph.hpp"
#include "extq/linear.hpp"
#include "extq/quotient.hpp"

namespace extq {

/// Outcome of a regular-element check: either regular in every degree, or a
/// singular witness m with l*m = 0 and m not in l*M.
template <class K>
struct RegularityCertificate {
  LinearForm<K> form;
  bool regular = false;
  ExtElement<K> witness;  // normal form; meaningful only when singular
};

namespace detail {

/// l * (basis monomial m), in normal form, using the cached products.
template <class K>
ExtElement<K> linear_times_basis(const QuotientAlgebra<K>& A, const ExtElement<K>& l,
                                 Monomial m) {
  ExtElement<K> out(A.ambient_n());
  for (auto& [v, c] : l.terms())
    for (auto& [w, cw] : A.mult(v, m).terms()) out.add_term(w, K(c * cw));
  return out;
}

/// Columns of multiplication by l from degree d to degree d+1.
template <class K>
std::vector<std::vector<K>> mult_columns(const QuotientAlgebra<K>& A, const ExtElement<K>& l,
                                         int d) {
  std::vector<std::vector<K>> cols;
  cols.reserve(A.basis(d).size());
  for (Monomial m : A.basis(d)) cols.push_back(A.coords(linear_times_basis(A, l, m), d + 1));
  return cols;
}

}  // namespace detail

/// Exactness of M --l--> M --l--> M checked degree by degree: l is regular iff
/// in every degree the kernel of multiplication by l equals the image from one
/// degree below (the image is contained in the kernel since l*l = 0).
template <class K>
RegularityCertificate<K> is_regular(const LinearForm<K>& form, const QuotientAlgebra<K>& A) {
  if (form.is_zero()) throw UsageError("the zero form is never tested for regularity");
  if (form.ambient_n() != A.ambient_n())
    throw UsageError("form arity does not match the algebra");
  FieldCtx<K> ctx = A.field();
  RegularityCertificate<K> cert;
  cert.form = form;
  cert.witness = ExtElement<K>(A.ambient_n());
  ExtElement<K> l = A.reduce(form.element());

  size_t prev_rank = 0;
  std::vector<std::vector<K>> prev_cols;  // columns of the previous degree map
  for (int d = 0; d <= A.top_degree(); ++d) {
    std::vector<std::vector<K>> cols = detail::mult_columns(A, l, d);
    KernelResult<K> kr = column_kernel<K>(cols, A.dim(d + 1), ctx);
    if (kr.kernel.size() != prev_rank) {
      // extract a kernel element outside the image from degree d-1
      Echelon<K> image(A.dim(d), ctx);
      for (auto& c : prev_cols) image.insert(c);
      for (auto& kv : kr.kernel) {
        if (image.member(kv)) continue;
        ExtElement<K> w(A.ambient_n());
        for (size_t i = 0; i < kv.size(); ++i) w.add_term(A.basis(d)[i], kv[i]);
        cert.witness = std::move(w);
        break;
      }
      cert.regular = false;
      return cert;
    }
    prev_rank = kr.rank;
    prev_cols = std::move(cols);
  }
  cert.regular = true;
  return cert;
}

/// Quotient of A by a linear form, re-presented over one fewer variable by
/// eliminating the largest-index variable in the form's support.  `change` is
/// the coordinate change on the original variables under which the form
/// becomes a multiple of the eliminated variable.
template <class K>
struct QuotientByLinear {
  QuotientAlgebra<K> algebra;
  LinearChange<K> change;
  int eliminated_variable = 0;
  std::vector<ExtElement<K>> images;  // image of each original variable
};

namespace detail {

template <class K>
ExtElement<K> map_through(const ExtElement<K>& f, const std::vector<ExtElement<K>>& images,
                          int new_n, FieldCtx<K> ctx) {
  ExtElement<K> out(new_n);
  for (auto& [m, c] : f.terms()) {
    ExtElement<K> prod = ExtElement<K>::term(new_n, Monomial{}, c);
    for (int i : m.variables()) prod = prod * images[i - 1];
    out = out + prod;
  }
  (void)ctx;
  return out;
}

}  // namespace detail

/// No-certificate entry point: trusts the caller that the form is regular.
/// The Hilbert-series division property only holds for regular forms.
template <class K>
QuotientByLinear<K> quotient_by_linear_unchecked(const QuotientAlgebra<K>& A,
                                                 const LinearForm<K>& form) {
  if (form.is_zero()) throw UsageError("cannot quotient by the zero form");
  int n = A.ambient_n();
  if (form.ambient_n() != n) throw UsageError("form arity does not match the algebra");
  FieldCtx<K> ctx = A.field();
  int k = 0;
  for (int i = 1; i <= n; ++i)
    if (!extq::is_zero(form.coefficients[i - 1])) k = i;
  K ck_inv = inverse(form.coefficients[k - 1]);

  // variable images in the (n-1)-variable algebra: drop e_k, substitute
  // e_k = -(1/c_k) * sum of the other terms
  std::vector<ExtElement<K>> images;
  auto small_var = [&](int i) {  // original index -> new index
    return i < k ? i : i - 1;
  };
  for (int i = 1; i <= n; ++i) {
    ExtElement<K> img(n - 1);
    if (i != k) {
      img.add_term(Monomial::variable(small_var(i)), ctx.one());
    } else {
      for (int j = 1; j <= n; ++j) {
        if (j == k || extq::is_zero(form.coefficients[j - 1])) continue;
        img.add_term(Monomial::variable(small_var(j)), K(-(form.coefficients[j - 1] * ck_inv)));
      }
    }
    images.push_back(std::move(img));
  }

  std::vector<ExtElement<K>> gens;
  for (const auto& g : A.groebner().elements)
    gens.push_back(detail::map_through(g, images, n - 1, ctx));
  Ideal<K> ideal(n - 1, std::move(gens));
  MonomialOrder order(A.order().kind, n - 1);

  // coordinate change on the original variables sending the form to c_k * e_k
  Matrix<K> m(n, n, ctx);
  for (int i = 0; i < n; ++i) m.at(i, i) = ctx.one();
  for (int j = 1; j <= n; ++j)
    if (j != k) m.at(k - 1, j - 1) = K(-(form.coefficients[j - 1] * ck_inv));

  return QuotientByLinear<K>{QuotientAlgebra<K>(ideal, order, ctx),
                             LinearChange<K>(std::move(m), ctx), k, std::move(images)};
}

/// Certified entry point: refuses singular forms.
template <class K>
QuotientByLinear<K> quotient_by_linear(const QuotientAlgebra<K>& A,
                                       const RegularityCertificate<K>& cert) {
  if (!cert.regular) throw UsageError("quotient by a form without a regularity certificate");
  return quotient_by_linear_unchecked(A, cert.form);
}

/// Image of a linear form under the variable elimination of a prior quotient.
template <class K>
LinearForm<K> push_forward(const LinearForm<K>& form, const QuotientByLinear<K>& q) {
  ExtElement<K> img = detail::map_through(form.element(), q.images,
                                          form.ambient_n() - 1, FieldCtx<K>{});
  return LinearForm<K>::from_element(img);
}

struct SequenceVerdict {
  bool regular = false;
  int failing_index = 0;  // 1-based; 0 when the whole sequence is regular
};

/// Checks l_i regular on A/(l_1..l_{i-1}), re-presenting after each step.
template <class K>
SequenceVerdict is_regular_sequence(std::vector<LinearForm<K>> forms, QuotientAlgebra<K> A) {
  for (size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].is_zero() || A.ambient_n() == 0)
      return {false, static_cast<int>(i + 1)};
    RegularityCertificate<K> cert = is_regular(forms[i], A);
    if (!cert.regular) return {false, static_cast<int>(i + 1)};
    QuotientByLinear<K> q = quotient_by_linear(A, cert);
    for (size_t j = i + 1; j < forms.size(); ++j) forms[j] = push_forward(forms[j], q);
    A = std::move(q.algebra);
  }
  return {true, 0};
}

struct DepthProbe {
  int certified_lower_bound = 0;
  int probable_depth = 0;
  bool certified_complete = false;  // true when no variables remain (not Monte-Carlo)
  int failed_trials = 0;            // random attempts at the first failing step
  std::vector<LinearForm<Rational>> witnesses;  // one per step, in that step's coordinates
};

/// Greedy depth probe over the rationals: known-good witnesses first, then
/// `trials` random integer forms with coefficients in [-100, 100].  Every
/// extension is certified by is_regular; only the terminal failure is
/// probabilistic.
inline DepthProbe depth_probe(QuotientAlgebra<Rational> A, int trials, uint64_t seed) {
  DepthProbe out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-100, 100);
  while (A.ambient_n() > 0) {
    int n = A.ambient_n();
    std::vector<LinearForm<Rational>> attempts;
    LinearForm<Rational> preferred(n);  // e1 + e4 + e7 + ...
    for (int i = 1; i <= n; i += 3) preferred.coefficients[i - 1] = 1;
    attempts.push_back(preferred);
    int produced = 0;
    while (produced < trials) {
      LinearForm<Rational> f(n);
      for (int i = 0; i < n; ++i) f.coefficients[i] = coeff(rng);
      if (f.is_zero()) continue;
      attempts.push_back(std::move(f));
      ++produced;
    }
    std::optional<RegularityCertificate<Rational>> found;
    int failures = 0;
    for (auto& f : attempts) {
      RegularityCertificate<Rational> cert = is_regular(f, A);
      if (cert.regular) {
        found = std::move(cert);
        break;
      }
      ++failures;
    }
    if (!found) {
      out.failed_trials = failures;
      out.probable_depth = out.certified_lower_bound;
      return out;
    }
    out.witnesses.push_back(found->form);
    ++out.certified_lower_bound;
    A = quotient_by_linear(A, *found).algebra;
  }
  out.certified_complete = true;
  out.probable_depth = out.certified_lower_bound;
  return out;
}

struct LGVerdict {
  int extra = 0;     // number of appended free variables
  int vertices = 0;  // graph size searched
  int edges = 0;     // edge count forced by the series
  std::vector<Graph> candidates;
};

struct LGSearchResult {
  std::vector<LGVerdict> per_d;
  bool not_g_quadratic = false;      // no graph matches with zero extra variables
  bool obstructed_throughout = false;  // no graph matches at any tested d
};

/// Searches for quadratic monomial models of the series h after tensoring with
/// d extra exterior variables, 0 <= d <= d_max.  A quadratic monomial ideal in
/// an exterior algebra is an edge ideal, so the search space is graphs with
/// the matching vertex and edge counts.
inline LGSearchResult lg_obstruction_search(const HilbertSeries& h, int d_max) {
  if (h[0] != 1) throw UsageError("series must have constant coefficient 1");
  LGSearchResult out;
  out.obstructed_throughout = true;
  HilbertSeries target = h;
  HilbertSeries step(std::vector<long long>{1, 1});
  for (int d = 0; d <= d_max; ++d) {
    LGVerdict v;
    v.extra = d;
    v.vertices = static_cast<int>(target[1]);
    if (v.vertices > kGraphEnumerationLimit)
      throw UsageError("series requires graphs beyond the enumeration limit");
    long long e = static_cast<long long>(v.vertices) * (v.vertices - 1) / 2 - target[2];
    v.edges = static_cast<int>(e);
    if (e >= 0)
      v.candidates = search_by_series(v.vertices, v.vertices, v.edges, target, false);
    if (!v.candidates.empty()) out.obstructed_throughout = false;
    if (d == 0 && v.candidates.empty()) out.not_g_quadratic = true;
    out.per_d.push_back(std::move(v));
    target = target * step;
  }
  return out;
}

}  // namespace extq
