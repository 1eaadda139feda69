#pragma once

#include <vector>

#include "extq/element.hpp"

namespace extq {

/// Graded ideal given by homogeneous generators.  Zero generators are dropped;
/// inhomogeneous generators are rejected.  Homogeneous left ideals of the
/// exterior algebra are two-sided, so no chirality is tracked.
template <class K>
struct Ideal {
  int ambient_n = 0;
  std::vector<ExtElement<K>> generators;

  Ideal() = default;
  Ideal(int n, std::vector<ExtElement<K>> gens) : ambient_n(n) {
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      if (g.ambient_n() != n) throw UsageError("generator has wrong ambient variable count");
      if (!g.is_homogeneous()) throw UsageError("ideal generators must be homogeneous");
      generators.push_back(std::move(g));
    }
  }

  bool is_zero() const { return generators.empty(); }
};

template <class K>
Ideal<K> convert_ideal(const Ideal<Rational>& ideal, FieldCtx<K> ctx = {}) {
  std::vector<ExtElement<K>> gens;
  for (auto& g : ideal.generators) gens.push_back(convert_element<K>(g, ctx));
  return Ideal<K>(ideal.ambient_n, std::move(gens));
}

}  // namespace extq
