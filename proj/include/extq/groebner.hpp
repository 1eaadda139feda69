#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <vector>

#include "extq/ideal.hpp"
#include "extq/monomial_ideal.hpp"
#include "extq/order.hpp"

namespace extq {

/// One reduction step: for a monomial m of f divisible by LT(g), subtract the
/// scalar multiple of w·g (w the complementary monomial) that cancels m.
template <class K>
ExtElement<K> reduce_term_once(const ExtElement<K>& f, Monomial m, const ExtElement<K>& g,
                               const MonomialOrder& order) {
  Monomial lt = g.leading_monomial(order);
  Monomial w(m.bits & ~lt.bits);
  // w·g, term by term
  ExtElement<K> wg(f.ambient_n());
  for (auto& [u, c] : g.terms()) {
    MonoProduct p = mono_mul(w, u);
    if (p.zero) continue;
    wg.add_term(p.product, apply_sign(c, p.sign));
  }
  K cm = f.coefficient(m);
  K target = wg.coefficient(m);  // = sign(w, lt) * lc(g), never zero
  return f - wg.scaled(K(cm / target));
}

/// Full normal form: no monomial of the result is divisible by any LT(g).
/// Ties among divisors are broken by list position, earliest wins.
template <class K>
ExtElement<K> normal_form(ExtElement<K> f, const std::vector<ExtElement<K>>& divisors,
                          const MonomialOrder& order) {
  bool changed = true;
  while (changed && !f.is_zero()) {
    changed = false;
    // scan monomials from largest to smallest under the order
    std::vector<Monomial> supp = f.support();
    std::sort(supp.begin(), supp.end(),
              [&](Monomial a, Monomial b) { return order.less(b, a); });
    for (Monomial m : supp) {
      for (const auto& g : divisors) {
        if (g.is_zero()) continue;
        if (!g.leading_monomial(order).divides(m)) continue;
        f = reduce_term_once(f, m, g, order);
        changed = true;
        break;
      }
      if (changed) break;
    }
  }
  return f;
}

template <class K>
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<ExtElement<K>> elements;  // monic, reduced, sorted by leading monomial
  MonomialIdeal initial;

  bool contains(const ExtElement<K>& f) const {
    return normal_form(f, elements, order).is_zero();
  }
};

struct BuchbergerOptions {
  /// When false the exterior-specific e_i·g completion is skipped; kept only
  /// for the regression test demonstrating its necessity.
  bool annihilator_pairs = true;
};

namespace detail {

template <class K>
ExtElement<K> mono_times(Monomial w, const ExtElement<K>& g) {
  ExtElement<K> out(g.ambient_n());
  for (auto& [u, c] : g.terms()) {
    MonoProduct p = mono_mul(w, u);
    if (p.zero) continue;
    out.add_term(p.product, apply_sign(c, p.sign));
  }
  return out;
}

template <class K>
ExtElement<K> s_polynomial(const ExtElement<K>& f, const ExtElement<K>& g,
                           const MonomialOrder& order) {
  Monomial u = f.leading_monomial(order), v = g.leading_monomial(order);
  Monomial lcm(u.bits | v.bits);
  Monomial a(lcm.bits & ~u.bits), b(lcm.bits & ~v.bits);
  // scale so the lcm terms are monic on both sides
  ExtElement<K> left = mono_times(a, f);
  ExtElement<K> right = mono_times(b, g);
  K cl = left.coefficient(lcm), cr = right.coefficient(lcm);
  return left.scaled(inverse(cl)) - right.scaled(inverse(cr));
}

}  // namespace detail

/// Buchberger completion adapted to the exterior algebra: besides S-pairs it
/// processes the annihilator products e_i·g for every variable e_i dividing
/// LT(g); both must reduce to zero for the basis to be complete.
template <class K>
GroebnerBasis<K> buchberger(const Ideal<K>& ideal, const MonomialOrder& order,
                            const BuchbergerOptions& opts = {}) {
  if (order.n() != ideal.ambient_n) throw UsageError("order arity does not match ideal");
  std::vector<ExtElement<K>> basis;
  struct Task {
    int deg;       // degree of the lcm, for normal (smallest-first) selection
    int i, j;      // j >= 0: S-pair (i, j); j < 0: annihilator e_{-j} · basis[i]
  };
  std::deque<Task> queue;

  auto push_tasks = [&](int idx) {
    Monomial lt = basis[idx].leading_monomial(order);
    for (int k = 0; k < idx; ++k) {
      Monomial lk = basis[k].leading_monomial(order);
      queue.push_back({Monomial(lt.bits | lk.bits).degree(), k, idx});
    }
    if (opts.annihilator_pairs)
      for (int v : lt.variables()) queue.push_back({lt.degree() + 1, idx, -v});
  };

  for (const auto& g : ideal.generators) {
    ExtElement<K> r = normal_form(g, basis, order);
    if (r.is_zero()) continue;
    basis.push_back(r.monic(order));
    push_tasks(static_cast<int>(basis.size()) - 1);
  }

  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(),
                               [](const Task& a, const Task& b) { return a.deg < b.deg; });
    Task t = *it;
    queue.erase(it);
    ExtElement<K> s(ideal.ambient_n);
    if (t.j >= 0) {
      s = detail::s_polynomial(basis[t.i], basis[t.j], order);
    } else {
      s = detail::mono_times(Monomial::variable(-t.j), basis[t.i]);
    }
    ExtElement<K> r = normal_form(std::move(s), basis, order);
    if (r.is_zero()) continue;
    basis.push_back(r.monic(order));
    push_tasks(static_cast<int>(basis.size()) - 1);
  }

  // Minimalize: drop elements whose leading term is divisible by another's.
  std::vector<ExtElement<K>> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    Monomial lt = basis[i].leading_monomial(order);
    bool redundant = false;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      Monomial lj = basis[j].leading_monomial(order);
      if (lj.divides(lt) && (lj != lt || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Tail-reduce each element against the others to reach the reduced basis.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<ExtElement<K>> others;
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      ExtElement<K> r = normal_form(minimal[i], others, order).monic(order);
      if (!(r == minimal[i])) {
        minimal[i] = std::move(r);
        changed = true;
      }
    }
  }

  std::sort(minimal.begin(), minimal.end(), [&](const auto& a, const auto& b) {
    return order.less(a.leading_monomial(order), b.leading_monomial(order));
  });

  GroebnerBasis<K> gb;
  gb.order = order;
  gb.elements = std::move(minimal);
  std::vector<Monomial> lts;
  for (const auto& g : gb.elements) lts.push_back(g.leading_monomial(order));
  gb.initial = MonomialIdeal::from_generators(ideal.ambient_n, std::move(lts));
  return gb;
}

template <class K>
MonomialIdeal initial_ideal(const Ideal<K>& ideal, const MonomialOrder& order) {
  return buchberger(ideal, order).initial;
}

/// True iff every element of the reduced Groebner basis is a quadric.
template <class K>
bool is_quadratic_gb(const Ideal<K>& ideal, const MonomialOrder& order) {
  GroebnerBasis<K> gb = buchberger(ideal, order);
  for (const auto& g : gb.elements)
    if (g.degree() != 2) return false;
  return true;
}

}  // namespace extq
