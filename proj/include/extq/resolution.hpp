#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "extq/matrix.hpp"
#include "extq/quotient.hpp"

namespace extq {

/// Graded Betti numbers of a module within explicit homological and internal
/// degree bounds.  Entries outside the bounds are unknown, not zero.
struct BettiTable {
  std::string ring;
  std::string module;
  std::string field;
  int i_max = 0;
  int j_max = 0;
  std::map<std::pair<int, int>, long long> entries;

  long long beta(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  void set(int i, int j, long long v) {
    if (v != 0) entries[{i, j}] = v;
  }

  long long total(int i) const {
    long long s = 0;
    for (auto& [ij, v] : entries)
      if (ij.first == i) s += v;
    return s;
  }

  std::vector<std::pair<int, int>> off_diagonal() const {
    std::vector<std::pair<int, int>> out;
    for (auto& [ij, v] : entries)
      if (ij.first != ij.second && v != 0) out.push_back(ij);
    return out;
  }

  /// Largest j - i over nonzero entries within the bounds.
  int regularity_bound() const {
    int r = 0;
    for (auto& [ij, v] : entries) r = std::max(r, ij.second - ij.first);
    return r;
  }

  /// Grid with rows j - i (Macaulay layout) and columns i.
  std::string to_string() const {
    std::ostringstream os;
    os << "ring " << ring << ", module " << module << ", field " << field << ", i <= " << i_max
       << ", j <= " << j_max << "\n";
    int rmax = regularity_bound();
    os << "  j-i |";
    for (int i = 0; i <= i_max; ++i) os << "\t" << i;
    os << "\n";
    for (int r = 0; r <= rmax; ++r) {
      os << "  " << r << "   |";
      for (int i = 0; i <= i_max; ++i) {
        long long b = beta(i, i + r);
        os << "\t" << (b ? std::to_string(b) : ".");
      }
      os << "\n";
    }
    return os.str();
  }
};

namespace detail {

/// Degree-j coordinate layout of a free module with the given generator
/// degrees over the quotient A: one block per generator.
template <class K>
struct FreeBasis {
  std::vector<int> offset;
  int total = 0;

  FreeBasis(const QuotientAlgebra<K>& A, const std::vector<int>& gen_degrees, int j) {
    offset.reserve(gen_degrees.size());
    for (int d : gen_degrees) {
      offset.push_back(total);
      total += A.dim(j - d);
    }
  }
};

template <class K>
std::vector<K> module_coords(const QuotientAlgebra<K>& A, const std::vector<int>& gen_degrees,
                             const FreeBasis<K>& fb, const std::vector<ExtElement<K>>& elem,
                             int j) {
  std::vector<K> v(fb.total, A.field().zero());
  for (size_t s = 0; s < gen_degrees.size(); ++s) {
    if (elem[s].is_zero()) continue;
    int d = j - gen_degrees[s];
    std::vector<K> block = A.coords(elem[s], d);
    for (size_t k = 0; k < block.size(); ++k) v[fb.offset[s] + k] = block[k];
  }
  return v;
}

template <class K>
std::vector<ExtElement<K>> module_scale_mono(const QuotientAlgebra<K>& A, Monomial m,
                                             const std::vector<ExtElement<K>>& elem) {
  std::vector<ExtElement<K>> out;
  out.reserve(elem.size());
  for (auto& f : elem) out.push_back(A.mult(m, f));
  return out;
}

}  // namespace detail

/// Minimal graded free resolution of the cyclic module A/(gens), computed
/// degree by degree through homological degree i_max and internal degree
/// j_max.  Each syzygy level is complete in every internal degree it reports:
/// kernels are found by exact elimination and minimal generators split off by
/// rank against the multiples of lower-degree generators.
template <class K>
BettiTable resolve_cyclic(const QuotientAlgebra<K>& A, const std::vector<ExtElement<K>>& gens,
                          int i_max, int j_max, const std::string& module_desc = "quotient") {
  if (i_max < 0 || j_max < 0) throw UsageError("resolution bounds must be nonnegative");
  FieldCtx<K> ctx = A.field();
  BettiTable table;
  table.ring = A.groebner().elements.empty()
                   ? "exterior algebra on " + std::to_string(A.ambient_n()) + " variables"
                   : "quotient of the exterior algebra on " + std::to_string(A.ambient_n()) +
                         " variables";
  table.module = module_desc;
  table.field = ctx.name();
  table.i_max = i_max;
  table.j_max = j_max;
  table.set(0, 0, 1);
  if (i_max == 0) return table;

  using Elem = std::vector<ExtElement<K>>;  // one entry per generator of the codomain

  // Level 1: minimal generators of the submodule (gens) of F_0 = A.
  std::vector<int> prev_degs{0};  // F_0
  std::vector<int> cur_degs;      // F_1
  std::vector<Elem> cur_cols;     // columns of F_1 -> F_0
  {
    std::map<int, std::vector<ExtElement<K>>> by_degree;
    for (auto& g : gens) {
      ExtElement<K> r = A.reduce(g);
      if (r.is_zero()) continue;
      if (!r.is_homogeneous()) throw UsageError("module generators must be homogeneous");
      by_degree[r.degree()].push_back(std::move(r));
    }
    int d_top = by_degree.empty() ? 0 : by_degree.rbegin()->first;
    for (int j = 1; j <= std::min(j_max, d_top); ++j) {
      if (A.dim(j) == 0) break;
      Echelon<K> ech(A.dim(j), ctx);
      for (size_t s = 0; s < cur_cols.size(); ++s)
        for (Monomial m : A.basis(j - cur_degs[s]))
          ech.insert(A.coords(A.mult(m, cur_cols[s][0]), j));
      long long fresh = 0;
      auto it = by_degree.find(j);
      if (it != by_degree.end())
        for (auto& g : it->second)
          if (ech.insert(A.coords(g, j))) {
            cur_degs.push_back(j);
            cur_cols.push_back({g});
            ++fresh;
          }
      table.set(1, j, fresh);
    }
  }

  // Levels 2..i_max: syzygies of the previous map.
  for (int level = 2; level <= i_max && !cur_cols.empty(); ++level) {
    std::vector<int> next_degs;
    std::vector<Elem> next_cols;  // entries per generator of F_{level-1}
    int dom_top = *std::max_element(cur_degs.begin(), cur_degs.end()) + A.top_degree();
    int j_lo = *std::min_element(cur_degs.begin(), cur_degs.end());
    for (int j = j_lo; j <= std::min(j_max, dom_top); ++j) {
      // Domain basis of (F_level-1)_j: pairs (column s, standard monomial m).
      std::vector<std::pair<int, Monomial>> dom;
      for (size_t s = 0; s < cur_cols.size(); ++s)
        for (Monomial m : A.basis(j - cur_degs[s])) dom.push_back({static_cast<int>(s), m});
      if (dom.empty()) continue;
      detail::FreeBasis<K> cod(A, prev_degs, j);

      std::vector<std::vector<K>> columns;
      columns.reserve(dom.size());
      for (auto& [s, m] : dom) {
        Elem img = detail::module_scale_mono(A, m, cur_cols[s]);
        columns.push_back(detail::module_coords(A, prev_degs, cod, img, j));
      }
      KernelResult<K> kr = column_kernel<K>(columns, cod.total, ctx);
      if (kr.kernel.empty()) continue;

      // Split off the part already generated by lower-degree syzygies.
      detail::FreeBasis<K> domfb(A, cur_degs, j);
      Echelon<K> span(domfb.total, ctx);
      for (size_t s = 0; s < next_cols.size(); ++s)
        for (Monomial m : A.basis(j - next_degs[s])) {
          Elem mult = detail::module_scale_mono(A, m, next_cols[s]);
          span.insert(detail::module_coords(A, cur_degs, domfb, mult, j));
        }
      long long fresh = 0;
      for (auto& kv : kr.kernel) {
        // kernel coordinates are indexed by dom; re-express in the block layout
        std::vector<K> v(domfb.total, ctx.zero());
        Elem elem(cur_cols.size(), ExtElement<K>(A.ambient_n()));
        for (size_t k = 0; k < dom.size(); ++k) {
          if (extq::is_zero(kv[k])) continue;
          auto [s, m] = dom[k];
          elem[s].add_term(m, kv[k]);
        }
        for (size_t s = 0; s < cur_cols.size(); ++s) {
          if (elem[s].is_zero()) continue;
          std::vector<K> block = A.coords(elem[s], j - cur_degs[s]);
          for (size_t t = 0; t < block.size(); ++t) v[domfb.offset[s] + t] = block[t];
        }
        if (span.insert(std::move(v))) {
          next_degs.push_back(j);
          next_cols.push_back(std::move(elem));
          ++fresh;
        }
      }
      table.set(level, j, fresh);
    }
    prev_degs = std::move(cur_degs);
    cur_degs = std::move(next_degs);
    cur_cols = std::move(next_cols);
  }
  return table;
}

/// Graded Betti numbers of E/I over the full exterior algebra.
template <class K>
BettiTable betti_over_E(const Ideal<K>& ideal, int i_max, int j_max, FieldCtx<K> ctx = {}) {
  MonomialOrder order(OrderKind::degrevlex, ideal.ambient_n);
  QuotientAlgebra<K> A(Ideal<K>(ideal.ambient_n, {}), order, ctx);
  return resolve_cyclic(A, ideal.generators, i_max, j_max, "cyclic quotient by the ideal");
}

/// Betti numbers of the residue field over R = E/I, with every internal degree
/// complete through the natural bound i_max + top degree of R.  Empty
/// off-diagonal through i_max is bounded Koszulness evidence, not a proof.
template <class K>
BettiTable koszul_betti_bounded(const Ideal<K>& ideal, const MonomialOrder& order, int i_max,
                                FieldCtx<K> ctx = {}) {
  QuotientAlgebra<K> A(ideal, order, ctx);
  std::vector<ExtElement<K>> vars;
  for (int i = 1; i <= A.ambient_n(); ++i)
    vars.push_back(ExtElement<K>::term(A.ambient_n(), Monomial::variable(i), ctx.one()));
  int j_max = i_max + A.top_degree() * std::max(1, i_max);
  BettiTable t = resolve_cyclic(A, vars, i_max, j_max, "residue field");
  t.j_max = j_max;
  return t;
}

/// Degreewise Euler characteristic of a minimal resolution of the residue
/// field: sum_i (-1)^i beta_{i,j} must match the coefficients of 1/h(t).
/// Requires the table to be complete through internal degree j_max.
inline bool euler_identity_check(const BettiTable& table, const HilbertSeries& h, int j_max) {
  if (table.i_max < j_max || table.j_max < j_max)
    throw UsageError("Betti table does not cover the requested internal degrees");
  if (h[0] != 1) throw UsageError("series must have constant coefficient 1");
  std::vector<Rational> inv(j_max + 1, Rational(0));
  inv[0] = 1;
  for (int k = 1; k <= j_max; ++k) {
    Rational s(0);
    for (int j = 1; j <= k; ++j) s += Rational(static_cast<long>(h[j])) * inv[k - j];
    inv[k] = -s;
  }
  for (int j = 0; j <= j_max; ++j) {
    Rational euler(0);
    for (int i = 0; i <= j; ++i) {
      long long b = table.beta(i, j);
      euler += Rational(static_cast<long>(i % 2 == 0 ? b : -b));
    }
    if (euler != inv[j]) return false;
  }
  return true;
}

}  // namespace extq
