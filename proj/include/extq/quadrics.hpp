#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "extq/element.hpp"
#include "extq/ideal.hpp"
#include "extq/matrix.hpp"
#include "extq/order.hpp"

namespace extq {

/// Skew-symmetric matrix of a quadric: entry (i, j) is the coefficient of
/// e_{i+1}e_{j+1} for i < j, negated below the diagonal, zero on it.
template <class K>
class AlternatingMatrix {
 public:
  AlternatingMatrix(int n, FieldCtx<K> ctx = {}) : n_(n), m_(n, n, ctx) {}

  int n() const { return n_; }
  const K& at(int i, int j) const { return m_.at(i, j); }

  void set_upper(int i, int j, K v) {
    if (i >= j) throw UsageError("set_upper expects i < j");
    m_.at(j, i) = -v;
    m_.at(i, j) = std::move(v);
  }

  size_t rank(FieldCtx<K> ctx = {}) const { return m_.rank(ctx); }
  const Matrix<K>& matrix() const { return m_; }

 private:
  int n_;
  Matrix<K> m_;
};

template <class K>
AlternatingMatrix<K> to_alternating(const ExtElement<K>& q, FieldCtx<K> ctx = {}) {
  if (q.is_homogeneous() && !q.is_zero() && q.degree() != 2)
    throw UsageError("quadric expected");
  if (!q.is_homogeneous()) throw UsageError("quadric expected");
  AlternatingMatrix<K> A(q.ambient_n(), ctx);
  for (auto& [m, c] : q.terms()) {
    auto vars = m.variables();
    A.set_upper(vars[0] - 1, vars[1] - 1, c);
  }
  return A;
}

/// Rank of the quadric's alternating matrix; always even.
template <class K>
size_t rank(const ExtElement<K>& q, FieldCtx<K> ctx = {}) {
  return to_alternating(q, ctx).rank(ctx);
}

namespace detail {

template <class K>
K pfaffian_rec(const AlternatingMatrix<K>& A, std::vector<int>& idx, FieldCtx<K> ctx) {
  size_t k = idx.size();
  if (k == 0) return ctx.one();
  K out = ctx.zero();
  int first = idx[0];
  int sign = 1;
  for (size_t j = 1; j < k; ++j, sign = -sign) {
    const K& a = A.at(first, idx[j]);
    if (!extq::is_zero(a)) {
      std::vector<int> rest;
      rest.reserve(k - 2);
      for (size_t t = 1; t < k; ++t)
        if (t != j) rest.push_back(idx[t]);
      K sub = pfaffian_rec(A, rest, ctx);
      out += apply_sign(K(a * sub), sign);
    }
  }
  return out;
}

}  // namespace detail

/// Pfaffian by expansion along the first row; Pf(A)^2 = det(A).
template <class K>
K pfaffian(const AlternatingMatrix<K>& A, FieldCtx<K> ctx = {}) {
  if (A.n() % 2 != 0) throw UsageError("Pfaffian needs an even-size matrix");
  std::vector<int> idx(A.n());
  std::iota(idx.begin(), idx.end(), 0);
  return detail::pfaffian_rec(A, idx, ctx);
}

/// q = sum of alpha_s * (e_{i_s} + l_{s,1}) * (e_{j_s} + l_{s,2}) with strictly
/// decreasing leading monomials; the factor count is rank(q)/2.
template <class K>
struct QuadricDecomposition {
  struct Factor {
    K alpha;
    ExtElement<K> left, right;  // e_i + lower terms, e_j + lower terms
  };
  MonomialOrder order;
  std::vector<Factor> factors;
  int ambient_n = 0;

  ExtElement<K> recompose() const {
    ExtElement<K> out(ambient_n);
    for (auto& f : factors) out = out + (f.left * f.right).scaled(f.alpha);
    return out;
  }
};

/// Greedy leading-term peeling: split off the rank-2 piece carried by the two
/// variables of the leading monomial, subtract, repeat.
template <class K>
QuadricDecomposition<K> decompose(const ExtElement<K>& q, const MonomialOrder& order,
                                  FieldCtx<K> ctx = {}) {
  if (!q.is_homogeneous() || (!q.is_zero() && q.degree() != 2))
    throw UsageError("quadric expected");
  QuadricDecomposition<K> out;
  out.order = order;
  out.ambient_n = q.ambient_n();
  ExtElement<K> rest = q;
  while (!rest.is_zero()) {
    Monomial lt = rest.leading_monomial(order);
    K alpha = rest.coefficient(lt);
    auto vars = lt.variables();
    int i = vars[0], j = vars[1];
    // terms e_i ^ w_i (i present, j absent) and u_j ^ e_j (j present, i absent)
    ExtElement<K> l2(q.ambient_n()), l1(q.ambient_n());
    K inv = inverse(alpha);
    for (auto& [m, c] : rest.terms()) {
      if (m == lt) continue;
      auto mv = m.variables();
      bool has_i = Monomial::variable(i).divides(m);
      bool has_j = Monomial::variable(j).divides(m);
      int k = mv[0] == i || mv[0] == j ? mv[1] : mv[0];
      if (has_i) l2.add_term(Monomial::variable(k), apply_sign(K(c * inv), k > i ? 1 : -1));
      if (has_j) l1.add_term(Monomial::variable(k), apply_sign(K(c * inv), k < j ? 1 : -1));
    }
    ExtElement<K> left =
        ExtElement<K>::term(q.ambient_n(), Monomial::variable(i), ctx.one()) + l1;
    ExtElement<K> right =
        ExtElement<K>::term(q.ambient_n(), Monomial::variable(j), ctx.one()) + l2;
    rest = rest - (left * right).scaled(alpha);
    out.factors.push_back({alpha, std::move(left), std::move(right)});
  }
  return out;
}

/// Where the pencil q1 + lambda*q2 of 4-variable quadrics drops to rank <= 2:
/// the roots of the quadratic Pf(A1 + lambda*A2).  Rational roots carry a
/// certified witness; irrational or complex roots are described by the exact
/// quadratic and its discriminant (existence over an algebraically closed
/// field is unconditional).  The lambda = infinity endpoint (q2 itself) is
/// reported separately.
struct PencilResult {
  std::vector<Rational> pfaffian_poly;  // c0 + c1*lambda + c2*lambda^2
  bool identically_deficient = false;
  std::vector<Rational> rational_roots;
  bool q2_deficient = false;  // rank(q2) <= 2, the lambda = infinity endpoint
  std::optional<Rational> witness_lambda;
  std::optional<ExtElement<Rational>> witness;  // q1 + lambda*q2, rank <= 2
  std::optional<Rational> discriminant;         // when no rational root exists
};

inline PencilResult rank2_in_pencil(const ExtElement<Rational>& q1,
                                    const ExtElement<Rational>& q2) {
  if (q1.ambient_n() != 4 || q2.ambient_n() != 4)
    throw UsageError("pencil search expects quadrics in 4 variables");
  for (auto* q : {&q1, &q2})
    if (q->is_zero() || !q->is_homogeneous() || q->degree() != 2)
      throw UsageError("pencil search expects nonzero quadrics");
  // linear independence
  {
    Echelon<Rational> ech(6);
    auto coords = [](const ExtElement<Rational>& q) {
      std::vector<Rational> v(6, Rational(0));
      int c = 0;
      for (Monomial m : monomials_of_degree(4, 2)) v[c++] = q.coefficient(m);
      return v;
    };
    ech.insert(coords(q1));
    if (!ech.insert(coords(q2))) throw UsageError("pencil quadrics must be independent");
  }
  auto pf_at = [&](const Rational& lam) {
    return pfaffian(to_alternating<Rational>(q1 + q2.scaled(lam)));
  };
  Rational p0 = pf_at(Rational(0)), p1 = pf_at(Rational(1)), pm1 = pf_at(Rational(-1));
  Rational c0 = p0;
  Rational c1 = (p1 - pm1) / 2;
  Rational c2 = (p1 + pm1) / 2 - p0;

  PencilResult out;
  out.pfaffian_poly = {c0, c1, c2};
  out.q2_deficient = is_zero(pfaffian(to_alternating<Rational>(q2)));
  if (is_zero(c0) && is_zero(c1) && is_zero(c2)) {
    out.identically_deficient = true;
    out.witness_lambda = Rational(0);
    out.witness = q1;
    return out;
  }
  if (is_zero(c2)) {
    if (!is_zero(c1)) out.rational_roots.push_back(Rational(-c0 / c1));
    // c1 = 0, c0 != 0: constant nonzero Pfaffian, no finite root
  } else {
    Rational disc = c1 * c1 - Rational(4) * c0 * c2;
    disc.canonicalize();
    bool square = sgn(disc) >= 0 && mpz_perfect_square_p(disc.get_num().get_mpz_t()) &&
                  mpz_perfect_square_p(disc.get_den().get_mpz_t());
    if (square) {
      mpz_class rn, rd;
      mpz_sqrt(rn.get_mpz_t(), disc.get_num().get_mpz_t());
      mpz_sqrt(rd.get_mpz_t(), disc.get_den().get_mpz_t());
      Rational root(rn, rd);
      out.rational_roots.push_back((-c1 + root) / (Rational(2) * c2));
      if (!is_zero(root)) out.rational_roots.push_back((-c1 - root) / (Rational(2) * c2));
    } else {
      out.discriminant = disc;
    }
  }
  if (!out.rational_roots.empty()) {
    std::sort(out.rational_roots.begin(), out.rational_roots.end());
    out.witness_lambda = out.rational_roots.front();
    out.witness = q1 + q2.scaled(*out.witness_lambda);
    if (rank(*out.witness) > 2) throw UsageError("internal: pencil witness failed rank check");
  } else if (out.q2_deficient) {
    out.witness = q2;
  }
  return out;
}

template <class K>
struct MinRankSample {
  size_t min_rank = 0;
  std::vector<K> witness_coefficients;  // over the span's generators
};

/// Minimum quadric rank seen over the single generators, the pairwise sums
/// and differences, and `samples` random small-integer combinations.  A low
/// rank found is certified by the rank computation; a high minimum is
/// sampling evidence only.
template <class K>
MinRankSample<K> min_rank_sample(const std::vector<ExtElement<K>>& span, size_t samples,
                                 uint64_t seed, FieldCtx<K> ctx = {}) {
  if (span.empty()) throw UsageError("empty span");
  int t = static_cast<int>(span.size());
  int n = span[0].ambient_n();
  MinRankSample<K> out;
  out.min_rank = static_cast<size_t>(n) + 2;

  auto consider = [&](const std::vector<K>& coeffs) {
    ExtElement<K> q(n);
    for (int i = 0; i < t; ++i)
      if (!extq::is_zero(coeffs[i])) q = q + span[i].scaled(coeffs[i]);
    if (q.is_zero()) return;
    size_t r = rank(q, ctx);
    if (r < out.min_rank) {
      out.min_rank = r;
      out.witness_coefficients = coeffs;
    }
  };

  std::vector<K> coeffs(t, ctx.zero());
  for (int i = 0; i < t; ++i) {
    coeffs.assign(t, ctx.zero());
    coeffs[i] = ctx.one();
    consider(coeffs);
    for (int j = i + 1; j < t; ++j) {
      coeffs.assign(t, ctx.zero());
      coeffs[i] = ctx.one();
      coeffs[j] = ctx.one();
      consider(coeffs);
      coeffs[j] = K(-ctx.one());
      consider(coeffs);
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(-10, 10);
  size_t done = 0;
  while (done < samples) {
    bool nonzero = false;
    for (int i = 0; i < t; ++i) {
      coeffs[i] = ctx.from_long(small(rng));
      if (!extq::is_zero(coeffs[i])) nonzero = true;
    }
    if (!nonzero) continue;
    consider(coeffs);
    ++done;
  }
  return out;
}

/// t quadrics with independent uniform integer coefficients in [-bound, bound].
inline Ideal<Rational> generic_quadrics(int n, int t, uint64_t seed, long long bound = 50) {
  if (bound < 1) throw UsageError("coefficient bound must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> coeff(-bound, bound);
  std::vector<ExtElement<Rational>> gens;
  for (int k = 0; k < t; ++k) {
    ExtElement<Rational> q(n);
    for (Monomial m : monomials_of_degree(n, 2))
      q.add_term(m, Rational(static_cast<long>(coeff(rng))));
    gens.push_back(std::move(q));
  }
  return Ideal<Rational>(n, std::move(gens));
}

/// The inequality deciding whether t generic quadrics in n variables span a
/// space avoiding all quadrics of rank below 2r: t <= (n-2r+1)(n-2r+2)/2.
inline bool rank_bound(long long n, long long r, long long t) {
  return t <= (n - 2 * r + 1) * (n - 2 * r + 2) / 2;
}

}  // namespace extq
