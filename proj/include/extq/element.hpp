#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "extq/monomial.hpp"
#include "extq/order.hpp"
#include "extq/scalar.hpp"

namespace extq {

/// Element of the exterior algebra on `ambient_n` variables: a finite map from
/// canonical monomials to nonzero scalars.  Immutable in spirit; the mutating
/// helpers are for construction only.
template <class K>
class ExtElement {
 public:
  ExtElement() = default;
  explicit ExtElement(int n) : n_(n) {
    if (n < 0 || n > kMaxVariables) throw UsageError("variable count out of range");
  }

  static ExtElement term(int n, Monomial m, K c) {
    ExtElement f(n);
    f.add_term(m, std::move(c));
    return f;
  }

  int ambient_n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, K>& terms() const { return terms_; }

  void add_term(Monomial m, K c) {
    if (extq::is_zero(c)) return;
    if (m.degree() > 0 && (63 - std::countl_zero(m.bits | 1)) >= n_)
      throw UsageError("monomial variable exceeds ambient variable count");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, std::move(c));
    } else {
      it->second += c;
      if (extq::is_zero(it->second)) terms_.erase(it);
    }
  }

  K coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K{} : it->second;
  }

  /// Homogeneous iff all monomials share one degree; degree of 0 is -1.
  bool is_homogeneous() const {
    int d = -1;
    for (auto& [m, c] : terms_) {
      if (d < 0) d = m.degree();
      else if (m.degree() != d) return false;
    }
    return true;
  }
  int degree() const {
    int d = -1;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  std::vector<Monomial> support() const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (auto& [m, c] : terms_) out.push_back(m);
    return out;
  }

  Monomial leading_monomial(const MonomialOrder& order) const {
    if (terms_.empty()) throw UsageError("zero element has no leading monomial");
    Monomial best = terms_.begin()->first;
    for (auto& [m, c] : terms_)
      if (order.less(best, m)) best = m;
    return best;
  }
  const K& leading_coefficient(const MonomialOrder& order) const {
    return terms_.at(leading_monomial(order));
  }

  friend bool operator==(const ExtElement& a, const ExtElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  ExtElement operator-() const {
    ExtElement out(n_);
    for (auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }

  friend ExtElement operator+(const ExtElement& a, const ExtElement& b) {
    check_ambient(a, b);
    ExtElement out = a;
    for (auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
  }
  friend ExtElement operator-(const ExtElement& a, const ExtElement& b) { return a + (-b); }

  ExtElement scaled(const K& c) const {
    ExtElement out(n_);
    if (extq::is_zero(c)) return out;
    for (auto& [m, k] : terms_) out.terms_.emplace(m, K(k * c));
    return out;
  }

  /// Skew-commutative product, the bilinear extension of mono_mul.
  friend ExtElement operator*(const ExtElement& a, const ExtElement& b) {
    check_ambient(a, b);
    ExtElement out(a.n_);
    for (auto& [u, cu] : a.terms_)
      for (auto& [v, cv] : b.terms_) {
        MonoProduct p = mono_mul(u, v);
        if (p.zero) continue;
        out.add_term(p.product, apply_sign(K(cu * cv), p.sign));
      }
    return out;
  }

  ExtElement monic(const MonomialOrder& order) const {
    if (is_zero()) return *this;
    return scaled(inverse(leading_coefficient(order)));
  }

 private:
  static void check_ambient(const ExtElement& a, const ExtElement& b) {
    if (a.n_ != b.n_) throw UsageError("mismatched ambient variable counts");
  }

  int n_ = 0;
  std::map<Monomial, K> terms_;
};

/// Degree-one element stored as its coefficient vector; losslessly
/// interchangeable with an ExtElement of degree <= 1.
template <class K>
struct LinearForm {
  std::vector<K> coefficients;

  LinearForm() = default;
  explicit LinearForm(int n) : coefficients(n) {}

  int ambient_n() const { return static_cast<int>(coefficients.size()); }

  bool is_zero() const {
    for (auto& c : coefficients)
      if (!extq::is_zero(c)) return false;
    return true;
  }

  ExtElement<K> element() const {
    ExtElement<K> f(ambient_n());
    for (int i = 0; i < ambient_n(); ++i) f.add_term(Monomial::variable(i + 1), coefficients[i]);
    return f;
  }

  static LinearForm from_element(const ExtElement<K>& f) {
    LinearForm out(f.ambient_n());
    for (auto& [m, c] : f.terms()) {
      if (m.degree() != 1) throw UsageError("element is not a linear form");
      out.coefficients[m.variables()[0] - 1] = c;
    }
    return out;
  }

  friend bool operator==(const LinearForm& a, const LinearForm& b) = default;
};

/// Coefficientwise image of a rational element in the target field.
template <class K>
ExtElement<K> convert_element(const ExtElement<Rational>& f, FieldCtx<K> ctx = {}) {
  ExtElement<K> out(f.ambient_n());
  for (auto& [m, c] : f.terms()) out.add_term(m, convert_scalar<K>(c, ctx));
  return out;
}

template <class K>
std::string to_string(const ExtElement<K>& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  // print high degree first, then ascending bits, for readable output
  std::vector<std::pair<Monomial, K>> ts(f.terms().begin(), f.terms().end());
  std::stable_sort(ts.begin(), ts.end(), [](auto& a, auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
    return a.first.bits < b.first.bits;
  });
  for (auto& [m, c] : ts) {
    std::string cs = to_string(c);
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs.erase(0, 1);
    s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    if (m.is_one()) {
      s += cs;
    } else if (cs == "1") {
      s += to_string(m);
    } else {
      s += cs + "*" + to_string(m);
    }
  }
  return s;
}

}  // namespace extq
