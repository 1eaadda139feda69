#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "extq/groebner.hpp"
#include "extq/hilbert.hpp"

namespace extq {

/// Finite-dimensional quotient E/I presented by a reduced Groebner basis.
/// Elements are kept in normal form; the standard monomials of the initial
/// ideal give a vector-space basis in each degree.
template <class K>
class QuotientAlgebra {
 public:
  QuotientAlgebra(const Ideal<K>& ideal, MonomialOrder order, FieldCtx<K> ctx = {})
      : ctx_(ctx), n_(ideal.ambient_n), gb_(buchberger(ideal, order)) {
    if (n_ > kHilbertEnumerationLimit)
      throw UsageError("quotient basis enumeration limited to " +
                       std::to_string(kHilbertEnumerationLimit) + " variables");
    basis_.resize(n_ + 1);
    index_.resize(n_ + 1);
    for (uint64_t b = 0; b < (uint64_t{1} << n_); ++b) {
      Monomial m(b);
      if (gb_.initial.contains(m)) continue;
      int d = m.degree();
      index_[d][b] = static_cast<int>(basis_[d].size());
      basis_[d].push_back(m);
    }
    while (!basis_.empty() && basis_.back().empty()) {
      basis_.pop_back();
      index_.pop_back();
    }
  }

  int ambient_n() const { return n_; }
  const GroebnerBasis<K>& groebner() const { return gb_; }
  const MonomialOrder& order() const { return gb_.order; }
  FieldCtx<K> field() const { return ctx_; }

  int top_degree() const { return static_cast<int>(basis_.size()) - 1; }
  int dim(int d) const {
    return (d < 0 || d > top_degree()) ? 0 : static_cast<int>(basis_[d].size());
  }
  const std::vector<Monomial>& basis(int d) const {
    static const std::vector<Monomial> empty;
    return (d < 0 || d > top_degree()) ? empty : basis_[d];
  }

  HilbertSeries hilbert() const {
    std::vector<long long> c;
    for (auto& b : basis_) c.push_back(static_cast<long long>(b.size()));
    return HilbertSeries(std::move(c));
  }

  ExtElement<K> reduce(const ExtElement<K>& f) const {
    return normal_form(f, gb_.elements, gb_.order);
  }

  /// Index of a standard monomial within its degree; -1 for non-standard.
  int index_of(Monomial m) const {
    int d = m.degree();
    if (d > top_degree()) return -1;
    auto it = index_[d].find(m.bits);
    return it == index_[d].end() ? -1 : it->second;
  }

  /// Coordinates of a normal-form homogeneous element in the degree-d basis.
  std::vector<K> coords(const ExtElement<K>& f, int d) const {
    std::vector<K> v(dim(d), ctx_.zero());
    for (auto& [m, c] : f.terms()) {
      if (m.degree() != d) throw UsageError("element is not homogeneous of the given degree");
      int i = index_of(m);
      if (i < 0) throw UsageError("element is not in normal form");
      v[i] = c;
    }
    return v;
  }

  /// Product of two standard monomials, reduced; cached.
  const ExtElement<K>& mult(Monomial a, Monomial b) const {
    auto key = std::make_pair(a.bits, b.bits);
    auto it = table_.find(key);
    if (it != table_.end()) return it->second;
    MonoProduct p = mono_mul(a, b);
    ExtElement<K> prod(n_);
    if (!p.zero) prod.add_term(p.product, apply_sign(ctx_.one(), p.sign));
    return table_.emplace(key, reduce(prod)).first->second;
  }

  /// m times a normal-form element, again in normal form.
  ExtElement<K> mult(Monomial m, const ExtElement<K>& f) const {
    ExtElement<K> out(n_);
    for (auto& [u, c] : f.terms()) {
      for (auto& [w, cw] : mult(m, u).terms()) out.add_term(w, K(c * cw));
    }
    return out;
  }

 private:
  FieldCtx<K> ctx_;
  int n_;
  GroebnerBasis<K> gb_;
  std::vector<std::vector<Monomial>> basis_;                   // by degree
  std::vector<std::unordered_map<uint64_t, int>> index_;       // bits -> position
  mutable std::map<std::pair<uint64_t, uint64_t>, ExtElement<K>> table_;
};

}  // namespace extq
