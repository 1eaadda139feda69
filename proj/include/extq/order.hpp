#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "extq/monomial.hpp"

namespace extq {

enum class OrderKind { lex, deglex, degrevlex };

inline std::string to_string(OrderKind k) {
  switch (k) {
    case OrderKind::lex: return "lex";
    case OrderKind::deglex: return "deglex";
    case OrderKind::degrevlex: return "degrevlex";
  }
  return "?";
}

/// Total multiplicative order on squarefree monomials.  `priority[i]` is the
/// rank of variable e_{i+1}: rank 0 is the largest variable.  The identity
/// permutation gives e_1 > e_2 > ... > e_n.
struct MonomialOrder {
  OrderKind kind = OrderKind::degrevlex;
  std::vector<int> priority;

  MonomialOrder() = default;
  MonomialOrder(OrderKind k, int n) : kind(k), priority(n) {
    std::iota(priority.begin(), priority.end(), 0);
  }
  MonomialOrder(OrderKind k, std::vector<int> prio) : kind(k), priority(std::move(prio)) {}

  int n() const { return static_cast<int>(priority.size()); }

  uint64_t permuted(Monomial m) const {
    uint64_t out = 0, b = m.bits;
    while (b) {
      int i = std::countr_zero(b);
      out |= uint64_t{1} << priority[i];
      b &= b - 1;
    }
    return out;
  }

  /// <0, 0, >0 as u <, =, > v.
  int compare(Monomial u, Monomial v) const {
    uint64_t pu = permuted(u), pv = permuted(v);
    if (pu == pv) return 0;
    if (kind != OrderKind::lex) {
      int du = std::popcount(pu), dv = std::popcount(pv);
      if (du != dv) return du < dv ? -1 : 1;
    }
    uint64_t diff = pu ^ pv;
    if (kind == OrderKind::degrevlex) {
      // the monomial containing the least variable among the differing ones loses
      int hi = 63 - std::countl_zero(diff);
      return (pv >> hi) & 1 ? 1 : -1;
    }
    // lex tie-break: the monomial containing the greatest differing variable wins
    uint64_t low = diff & (~diff + 1);
    return (pu & low) ? 1 : -1;
  }

  bool less(Monomial u, Monomial v) const { return compare(u, v) < 0; }

  std::string to_string() const {
    std::string s = extq::to_string(kind);
    bool identity = true;
    for (int i = 0; i < n(); ++i)
      if (priority[i] != i) identity = false;
    if (!identity) {
      // list variables from largest to smallest
      std::vector<int> by_rank(n());
      for (int i = 0; i < n(); ++i) by_rank[priority[i]] = i + 1;
      s += ":";
      for (int i = 0; i < n(); ++i) {
        if (i) s += ",";
        s += std::to_string(by_rank[i]);
      }
    }
    return s;
  }
};

/// The 3·n! stock orders used for exhaustive sweeps.
inline std::vector<MonomialOrder> stock_orders(int n) {
  std::vector<int> vars(n);
  std::iota(vars.begin(), vars.end(), 0);
  std::vector<MonomialOrder> out;
  std::vector<int> perm = vars;
  do {
    // perm lists variables from largest to smallest
    std::vector<int> prio(n);
    for (int r = 0; r < n; ++r) prio[perm[r]] = r;
    for (OrderKind k : {OrderKind::lex, OrderKind::deglex, OrderKind::degrevlex})
      out.emplace_back(k, prio);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace extq
