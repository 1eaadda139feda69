#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "extq/hilbert.hpp"
#include "extq/matrix.hpp"

namespace extq {

constexpr int kQuadraticScanDimLimit = 12;

struct QuadraticScanResult {
  bool certificate = false;  // no quadratic Groebner basis exists in these coordinates
  std::vector<std::vector<Monomial>> candidates;  // surviving leading-term sets
  HilbertSeries target;
  uint64_t bases_examined = 0;
};

/// Order-free test for a quadratic Groebner basis in the given coordinates.
/// Under any monomial order the leading monomials of a row-reduced basis of
/// I_2 form a greedy-maximal independent column set of the coefficient
/// matrix, and every such column basis arises from some total order on the
/// support monomials.  A quadratic GB would make that set generate the whole
/// initial ideal, so its quotient must reproduce HF(E/I); column bases that
/// fail the Hilbert comparison are ruled out.  When every basis fails, no
/// quadratic GB exists for any order (sound negative); survivors are reported
/// as inconclusive candidates.  The shard [begin, end) indexes the subset
/// enumeration so drivers can partition the work.
template <class K>
QuadraticScanResult fixed_coordinate_quadratic_scan(const Ideal<K>& ideal, FieldCtx<K> ctx = {},
                                                    uint64_t shard_begin = 0,
                                                    uint64_t shard_end = ~uint64_t{0}) {
  for (const auto& g : ideal.generators)
    if (g.degree() != 2) throw UsageError("scan requires an ideal generated by quadrics");

  QuadraticScanResult out;
  out.target = hilbert_series(ideal, MonomialOrder(OrderKind::degrevlex, ideal.ambient_n));

  // support monomials of I_2, ascending by bits, and the coefficient matrix
  std::vector<Monomial> support;
  for (const auto& g : ideal.generators)
    for (auto& [m, c] : g.terms()) support.push_back(m);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  int s = static_cast<int>(support.size());

  std::vector<std::vector<K>> rows;
  for (const auto& g : ideal.generators) {
    std::vector<K> row(s, ctx.zero());
    for (int c = 0; c < s; ++c) row[c] = g.coefficient(support[c]);
    rows.push_back(std::move(row));
  }
  Echelon<K> full(s, ctx);
  for (auto& r : rows) full.insert(r);
  int rank = static_cast<int>(full.rank());
  if (rank > kQuadraticScanDimLimit)
    throw UsageError("degree-2 part has dimension above " +
                     std::to_string(kQuadraticScanDimLimit) + "; scan refused");
  if (rank == 0) {
    out.candidates.push_back({});
    out.bases_examined = 1;
    return out;
  }

  auto is_column_basis = [&](const std::vector<int>& cols) {
    Echelon<K> ech(rank, ctx);
    size_t r = 0;
    for (auto& row : rows) {
      std::vector<K> v(rank, ctx.zero());
      for (int j = 0; j < rank; ++j) v[j] = row[cols[j]];
      if (ech.insert(std::move(v))) ++r;
    }
    return static_cast<int>(r) == rank;
  };

  std::vector<int> comb(rank);
  std::iota(comb.begin(), comb.end(), 0);
  uint64_t index = 0;
  while (true) {
    if (index >= shard_end) break;
    if (index >= shard_begin && is_column_basis(comb)) {
      ++out.bases_examined;
      std::vector<Monomial> lead;
      for (int c : comb) lead.push_back(support[c]);
      if (hilbert_series(MonomialIdeal::from_generators(ideal.ambient_n, lead)) == out.target)
        out.candidates.push_back(std::move(lead));
    }
    ++index;
    int i = rank - 1;
    while (i >= 0 && comb[i] == s - rank + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < rank; ++j) comb[j] = comb[j - 1] + 1;
  }
  out.certificate = out.candidates.empty();
  return out;
}

}  // namespace extq
