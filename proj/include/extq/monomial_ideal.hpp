#pragma once

#include <algorithm>
#include <vector>

#include "extq/monomial.hpp"

namespace extq {

/// Monomial ideal stored by its minimal generators (an antichain under
/// divisibility, sorted by bit pattern for determinism).
struct MonomialIdeal {
  int ambient_n = 0;
  std::vector<Monomial> minimal_generators;

  MonomialIdeal() = default;

  static MonomialIdeal from_generators(int n, std::vector<Monomial> gens) {
    MonomialIdeal out;
    out.ambient_n = n;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (const Monomial& g : gens) {
      bool redundant = false;
      for (const Monomial& h : gens)
        if (h != g && h.divides(g)) {
          redundant = true;
          break;
        }
      if (!redundant) out.minimal_generators.push_back(g);
    }
    return out;
  }

  bool contains(Monomial m) const {
    for (const Monomial& g : minimal_generators)
      if (g.divides(m)) return true;
    return false;
  }

  bool is_zero() const { return minimal_generators.empty(); }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) = default;
};

}  // namespace extq
