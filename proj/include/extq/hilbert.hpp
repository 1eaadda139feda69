#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extq/groebner.hpp"
#include "extq/monomial_ideal.hpp"
#include "extq/scalar.hpp"

namespace extq {

/// Hilbert series of a finite-dimensional graded algebra: a polynomial with
/// nonnegative integer coefficients indexed by degree.
struct HilbertSeries {
  std::vector<long long> coefficients;  // trailing zeros trimmed

  HilbertSeries() = default;
  explicit HilbertSeries(std::vector<long long> c) : coefficients(std::move(c)) { trim(); }

  void trim() {
    while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
  }

  long long operator[](size_t d) const {
    return d < coefficients.size() ? coefficients[d] : 0;
  }
  int top_degree() const { return static_cast<int>(coefficients.size()) - 1; }

  long long total() const {
    long long s = 0;
    for (long long c : coefficients) s += c;
    return s;
  }

  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) = default;

  friend HilbertSeries operator*(const HilbertSeries& a, const HilbertSeries& b) {
    std::vector<long long> c(a.coefficients.size() + b.coefficients.size(), 0);
    for (size_t i = 0; i < a.coefficients.size(); ++i)
      for (size_t j = 0; j < b.coefficients.size(); ++j)
        c[i + j] += a.coefficients[i] * b.coefficients[j];
    return HilbertSeries(std::move(c));
  }

  /// Exact division; nullopt when the divisor does not divide.
  std::optional<HilbertSeries> divided_by(const HilbertSeries& d) const {
    if (d.coefficients.empty() || d.coefficients[0] == 0) return std::nullopt;
    if (coefficients.empty()) return HilbertSeries{};
    if (coefficients.size() < d.coefficients.size()) return std::nullopt;
    std::vector<long long> q(coefficients.size() - d.coefficients.size() + 1, 0);
    std::vector<long long> r = coefficients;
    for (size_t i = 0; i < q.size(); ++i) {
      if (r[i] % d.coefficients[0] != 0) return std::nullopt;
      q[i] = r[i] / d.coefficients[0];
      for (size_t j = 0; j < d.coefficients.size(); ++j) r[i + j] -= q[i] * d.coefficients[j];
    }
    for (long long x : r)
      if (x != 0) return std::nullopt;
    return HilbertSeries(std::move(q));
  }

  std::string to_string() const {
    if (coefficients.empty()) return "0";
    std::string s;
    for (size_t d = 0; d < coefficients.size(); ++d) {
      long long c = coefficients[d];
      if (c == 0) continue;
      if (!s.empty()) s += c > 0 ? " + " : " - ";
      else if (c < 0) s += "-";
      long long a = c > 0 ? c : -c;
      if (d == 0) {
        s += std::to_string(a);
      } else {
        if (a != 1) s += std::to_string(a) + "*";
        s += "t";
        if (d > 1) s += "^" + std::to_string(d);
      }
    }
    return s.empty() ? "0" : s;
  }

  static HilbertSeries one_plus_t_power(int k) {
    HilbertSeries h(std::vector<long long>{1});
    HilbertSeries f(std::vector<long long>{1, 1});
    for (int i = 0; i < k; ++i) h = h * f;
    return h;
  }
};

/// HS of the full exterior algebra on n variables: (1+t)^n.
inline HilbertSeries ambient_hilbert(int n) {
  if (n < 0) throw UsageError("negative variable count");
  return HilbertSeries::one_plus_t_power(n);
}

constexpr int kHilbertEnumerationLimit = 24;

/// Standard-monomial count per degree for E/(M).
inline HilbertSeries hilbert_series(const MonomialIdeal& in) {
  int n = in.ambient_n;
  if (n > kHilbertEnumerationLimit)
    throw UsageError("Hilbert enumeration limited to " +
                     std::to_string(kHilbertEnumerationLimit) +
                     " variables; restrict the ambient algebra");
  std::vector<long long> c(n + 1, 0);
  for (uint64_t b = 0; b < (uint64_t{1} << n); ++b) {
    Monomial m(b);
    if (!in.contains(m)) ++c[m.degree()];
  }
  return HilbertSeries(std::move(c));
}

/// HS(E/I) through the initial ideal; order-independent by initial-ideal
/// invariance of Hilbert functions.
template <class K>
HilbertSeries hilbert_series(const Ideal<K>& ideal, const MonomialOrder& order) {
  return hilbert_series(initial_ideal(ideal, order));
}

/// Truncated power series with exact rational coefficients.
struct PowerSeries {
  std::vector<Rational> coefficients;
  int truncation = 0;  // coefficients run through degree `truncation`

  std::string to_string() const {
    std::string s;
    for (size_t i = 0; i < coefficients.size(); ++i) {
      if (i) s += ", ";
      s += extq::to_string(coefficients[i]);
    }
    return s + "  (through degree " + std::to_string(truncation) + ")";
  }
};

struct FrobergResult {
  PowerSeries series;                       // 1 / h(-t) through degree N
  std::optional<int> first_negative_index;  // least degree with a negative coefficient
};

/// Koszul-necessary Poincare series test: expands 1/h(-t); a negative
/// coefficient rules Koszulness out.
inline FrobergResult froberg_inverse(const HilbertSeries& h, int N) {
  if (h[0] != 1) throw UsageError("series must have constant coefficient 1");
  FrobergResult out;
  out.series.truncation = N;
  out.series.coefficients.assign(N + 1, Rational(0));
  // g(t) = h(-t); solve g * p = 1 degree by degree
  auto g = [&](int k) { return Rational(static_cast<long>(k % 2 == 0 ? h[k] : -h[k])); };
  out.series.coefficients[0] = 1;
  for (int k = 1; k <= N; ++k) {
    Rational s(0);
    for (int j = 1; j <= k; ++j) s += g(j) * out.series.coefficients[k - j];
    out.series.coefficients[k] = -s;
    if (!out.first_negative_index && sgn(out.series.coefficients[k]) < 0)
      out.first_negative_index = k;
  }
  return out;
}

inline HilbertSeries parse_hilbert(const std::string& csv) {
  std::vector<long long> c;
  std::string cur;
  for (char ch : csv + ",") {
    if (ch == ',') {
      if (!cur.empty()) c.push_back(std::stoll(cur));
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  return HilbertSeries(std::move(c));
}

}  // namespace extq
