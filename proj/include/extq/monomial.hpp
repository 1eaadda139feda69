#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "extq/scalar.hpp"

namespace extq {

constexpr int kMaxVariables = 62;

/// Squarefree exterior monomial: bit i set means variable e_{i+1} occurs.
/// The canonical form of e_{i_1} ∧ ... ∧ e_{i_t} with i_1 < ... < i_t is the
/// bit set {i_1-1, ..., i_t-1}.
struct Monomial {
  uint64_t bits = 0;

  constexpr Monomial() = default;
  constexpr explicit Monomial(uint64_t b) : bits(b) {}

  int degree() const { return std::popcount(bits); }
  bool is_one() const { return bits == 0; }

  /// Divisibility in the exterior algebra: u | m iff u's variables occur in m.
  bool divides(const Monomial& m) const { return (bits & m.bits) == bits; }

  auto operator<=>(const Monomial& o) const = default;

  /// Variable indices (1-based), ascending.
  std::vector<int> variables() const {
    std::vector<int> out;
    uint64_t b = bits;
    while (b) {
      out.push_back(std::countr_zero(b) + 1);
      b &= b - 1;
    }
    return out;
  }

  static Monomial variable(int i) { return Monomial(uint64_t{1} << (i - 1)); }
};

/// Sign of the wedge product of two sorted monomials: (-1)^k where k counts
/// pairs (a, b) with a in u, b in v and a > b.  Assumes disjoint supports.
inline int wedge_sign(Monomial u, Monomial v) {
  int k = 0;
  uint64_t b = u.bits;
  while (b) {
    int a = std::countr_zero(b);
    k += std::popcount(v.bits & ((uint64_t{1} << a) - 1));
    b &= b - 1;
  }
  return (k & 1) ? -1 : 1;
}

struct MonoProduct {
  bool zero = true;
  int sign = 1;
  Monomial product;
};

/// Canonical product e_u ∧ e_v: zero when supports meet, otherwise the sorted
/// union with the inversion-count sign.
inline MonoProduct mono_mul(Monomial u, Monomial v) {
  if (u.bits & v.bits) return {};
  return {false, wedge_sign(u, v), Monomial(u.bits | v.bits)};
}

inline std::string to_string(Monomial m) {
  if (m.is_one()) return "1";
  std::string s;
  for (int i : m.variables()) {
    if (!s.empty()) s += "*";
    s += "e" + std::to_string(i);
  }
  return s;
}

/// All monomials of the given degree over n variables, ascending by bits.
inline std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  if (d < 0 || d > n) return out;
  if (d == 0) {
    out.push_back(Monomial{});
    return out;
  }
  // Gosper's hack over the first k = d bits.
  uint64_t v = (uint64_t{1} << d) - 1;
  uint64_t limit = uint64_t{1} << n;
  while (v < limit) {
    out.push_back(Monomial(v));
    uint64_t c = v & -v, r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
  return out;
}

}  // namespace extq
