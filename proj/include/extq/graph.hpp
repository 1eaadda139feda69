#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "extq/hilbert.hpp"
#include "extq/ideal.hpp"

namespace extq {

/// Finite simple undirected graph on vertices 1..v.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted, distinct

  Graph() = default;
  Graph(int v, std::vector<std::pair<int, int>> e) : vertex_count(v) {
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : e) {
      if (a == b) throw UsageError("loops are not allowed");
      if (a > b) std::swap(a, b);
      if (a < 1 || b > v) throw UsageError("edge endpoint out of range");
      if (!seen.insert({a, b}).second) throw UsageError("duplicate edge");
    }
    edges.assign(seen.begin(), seen.end());
  }

  int edge_count() const { return static_cast<int>(edges.size()); }

  /// Adjacency bitmask per vertex (0-based bit positions).
  std::vector<uint64_t> adjacency() const {
    std::vector<uint64_t> adj(vertex_count, 0);
    for (auto [a, b] : edges) {
      adj[a - 1] |= uint64_t{1} << (b - 1);
      adj[b - 1] |= uint64_t{1} << (a - 1);
    }
    return adj;
  }

  int max_degree() const {
    std::vector<int> deg(vertex_count + 1, 0);
    for (auto [a, b] : edges) {
      ++deg[a];
      ++deg[b];
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  }

  Graph disjoint_union(const Graph& o) const {
    std::vector<std::pair<int, int>> e = edges;
    for (auto [a, b] : o.edges) e.push_back({a + vertex_count, b + vertex_count});
    return Graph(vertex_count + o.vertex_count, std::move(e));
  }

  /// Drops isolated vertices and relabels the rest, preserving order.
  Graph without_isolated_vertices() const {
    std::vector<int> relabel(vertex_count + 1, 0);
    std::vector<bool> used(vertex_count + 1, false);
    for (auto [a, b] : edges) used[a] = used[b] = true;
    int next = 0;
    for (int i = 1; i <= vertex_count; ++i)
      if (used[i]) relabel[i] = ++next;
    std::vector<std::pair<int, int>> e;
    for (auto [a, b] : edges) e.push_back({relabel[a], relabel[b]});
    return Graph(next, std::move(e));
  }

  friend bool operator==(const Graph& a, const Graph& b) = default;
  friend bool operator<(const Graph& a, const Graph& b) {
    if (a.vertex_count != b.vertex_count) return a.vertex_count < b.vertex_count;
    return a.edges < b.edges;
  }
};

/// Exterior edge ideal: one quadratic monomial per edge.
template <class K>
Ideal<K> edge_ideal(const Graph& g, FieldCtx<K> ctx = {}) {
  std::vector<ExtElement<K>> gens;
  for (auto [a, b] : g.edges) {
    Monomial m(Monomial::variable(a).bits | Monomial::variable(b).bits);
    gens.push_back(ExtElement<K>::term(g.vertex_count, m, ctx.one()));
  }
  return Ideal<K>(g.vertex_count, std::move(gens));
}

constexpr int kIndependencePolynomialLimit = 40;

/// Number of independent sets by size; equals HS(E/I_E(G)).  Small graphs use
/// a full subset table, larger ones the branch-and-reduce recursion.
inline HilbertSeries independence_polynomial(const Graph& g) {
  int v = g.vertex_count;
  if (v > kIndependencePolynomialLimit)
    throw UsageError("independence polynomial limited to 40 vertices");
  std::vector<uint64_t> adj = g.adjacency();
  std::vector<long long> counts(v + 1, 0);
  if (v <= 20) {
    std::vector<uint8_t> indep(uint64_t{1} << v);
    indep[0] = 1;
    ++counts[0];
    for (uint64_t s = 1; s < (uint64_t{1} << v); ++s) {
      int i = std::countr_zero(s);
      uint64_t rest = s & (s - 1);
      indep[s] = indep[rest] && (adj[i] & s) == 0;
      if (indep[s]) ++counts[std::popcount(s)];
    }
  } else {
    // I(G) = I(G - x) + t * I(G - N[x]); memoized on the remaining vertex set
    std::map<uint64_t, std::vector<long long>> memo;
    std::function<std::vector<long long>(uint64_t)> rec = [&](uint64_t rem) {
      if (rem == 0) return std::vector<long long>{1};
      auto it = memo.find(rem);
      if (it != memo.end()) return it->second;
      int x = std::countr_zero(rem);
      std::vector<long long> without = rec(rem & ~(uint64_t{1} << x));
      std::vector<long long> with = rec(rem & ~((uint64_t{1} << x) | adj[x]));
      std::vector<long long> res(std::max(without.size(), with.size() + 1), 0);
      for (size_t i = 0; i < without.size(); ++i) res[i] += without[i];
      for (size_t i = 0; i < with.size(); ++i) res[i + 1] += with[i];
      memo[rem] = res;
      return res;
    };
    counts = rec((uint64_t{1} << v) - 1);
  }
  return HilbertSeries(std::move(counts));
}

constexpr int kGraphEnumerationLimit = 10;

namespace detail {

inline std::vector<std::pair<int, int>> vertex_pairs(int v) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= v; ++a)
    for (int b = a + 1; b <= v; ++b) pairs.push_back({a, b});
  return pairs;
}

inline uint64_t edge_mask(const Graph& g) {
  uint64_t mask = 0;
  int idx = 0;
  for (int a = 1; a <= g.vertex_count; ++a)
    for (int b = a + 1; b <= g.vertex_count; ++b, ++idx)
      if (std::binary_search(g.edges.begin(), g.edges.end(), std::make_pair(a, b)))
        mask |= uint64_t{1} << idx;
  return mask;
}

}  // namespace detail

/// Minimum edge mask over all vertex relabelings; equal masks mean isomorphic.
inline uint64_t canonical_form(const Graph& g) {
  int v = g.vertex_count;
  if (v > kGraphEnumerationLimit) throw UsageError("canonical form limited to 10 vertices");
  std::vector<int> perm(v);
  std::iota(perm.begin(), perm.end(), 0);
  // pair index lookup
  std::vector<std::vector<int>> pidx(v, std::vector<int>(v, -1));
  int idx = 0;
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b, ++idx) pidx[a][b] = pidx[b][a] = idx;
  uint64_t best = ~uint64_t{0};
  do {
    uint64_t mask = 0;
    for (auto [a, b] : g.edges) mask |= uint64_t{1} << pidx[perm[a - 1]][perm[b - 1]];
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline Graph graph_from_mask(int v, uint64_t mask) {
  std::vector<std::pair<int, int>> edges;
  auto pairs = detail::vertex_pairs(v);
  for (size_t i = 0; i < pairs.size(); ++i)
    if ((mask >> i) & 1) edges.push_back(pairs[i]);
  return Graph(v, std::move(edges));
}

/// Streams every labelled graph with v vertices and e edges to `visit`
/// (return false to stop).  With dedup, exactly one representative per
/// isomorphism class is delivered.  The shard [begin, end) indexes the
/// underlying edge-set combinations so drivers can partition work.
inline void enumerate_graphs(int v, int e, bool dedup,
                             const std::function<bool(const Graph&)>& visit,
                             uint64_t shard_begin = 0, uint64_t shard_end = ~uint64_t{0}) {
  if (v > kGraphEnumerationLimit) throw UsageError("graph enumeration limited to 10 vertices");
  auto pairs = detail::vertex_pairs(v);
  int m = static_cast<int>(pairs.size());
  if (e < 0 || e > m) return;
  std::set<uint64_t> seen;
  std::vector<int> comb(e);
  std::iota(comb.begin(), comb.end(), 0);
  uint64_t index = 0;
  bool more = e >= 0;
  while (more) {
    if (index >= shard_end) break;
    if (index >= shard_begin) {
      std::vector<std::pair<int, int>> edges;
      edges.reserve(e);
      for (int c : comb) edges.push_back(pairs[c]);
      Graph g(v, std::move(edges));
      bool deliver = true;
      if (dedup) deliver = seen.insert(canonical_form(g)).second;
      if (deliver && !visit(g)) return;
    }
    ++index;
    // next combination
    int i = e - 1;
    while (i >= 0 && comb[i] == m - e + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < e; ++j) comb[j] = comb[j - 1] + 1;
  }
}

/// All isomorphism classes with the requested independence polynomial.
/// With ignore_isolated, classes are taken modulo isolated vertices.
inline std::vector<Graph> search_by_series(int v_min, int v_max, int e,
                                           const HilbertSeries& target, bool ignore_isolated) {
  std::map<uint64_t, Graph> classes;
  for (int v = v_min; v <= v_max; ++v) {
    enumerate_graphs(v, e, false, [&](const Graph& g) {
      if (independence_polynomial(g) == target) {
        Graph rep = ignore_isolated ? g.without_isolated_vertices() : g;
        uint64_t key = canonical_form(rep);
        if (ignore_isolated) key = (uint64_t(rep.vertex_count) << 50) ^ key;
        classes.emplace(key, rep);
      }
      return true;
    });
  }
  std::vector<Graph> out;
  for (auto& [k, g] : classes) out.push_back(g);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Named graphs: "path:n", "cycle:n", "triangle", and "+" for disjoint unions.
inline Graph preset_graph(const std::string& name) {
  auto single = [](const std::string& s) -> Graph {
    auto colon = s.find(':');
    std::string head = s.substr(0, colon);
    auto arg = [&]() {
      if (colon == std::string::npos) throw UsageError("preset needs a size: " + s);
      return std::stoi(s.substr(colon + 1));
    };
    if (head == "path") {
      int n = arg();
      if (n < 1) throw UsageError("path needs at least one vertex");
      std::vector<std::pair<int, int>> e;
      for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
      return Graph(n, std::move(e));
    }
    if (head == "cycle") {
      int n = arg();
      if (n < 3) throw UsageError("cycle needs at least three vertices");
      std::vector<std::pair<int, int>> e;
      for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
      e.push_back({1, n});
      return Graph(n, std::move(e));
    }
    if (head == "triangle") return Graph(3, {{1, 2}, {1, 3}, {2, 3}});
    if (head == "edgeless") {
      return Graph(arg(), {});
    }
    throw UsageError("unknown graph preset: " + s);
  };
  Graph out;
  std::string cur;
  bool first = true;
  for (char ch : name + "+") {
    if (ch == '+') {
      if (cur.empty()) throw UsageError("empty component in graph preset");
      Graph g = single(cur);
      out = first ? g : out.disjoint_union(g);
      first = false;
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (first) throw UsageError("empty graph preset");
  return out;
}

/// Graph file format: a line "v <count>", then lines "edge <i> <j>".
inline Graph parse_graph_file(std::istream& in) {
  int v = -1;
  std::vector<std::pair<int, int>> edges;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok.empty() || tok[0] == '#') continue;
    if (tok == "v") {
      if (!(ls >> v)) throw UsageError("malformed vertex count line");
    } else if (tok == "edge") {
      int a, b;
      if (!(ls >> a >> b)) throw UsageError("malformed edge line");
      edges.push_back({a, b});
    } else {
      throw UsageError("unknown directive in graph file: " + tok);
    }
  }
  if (v < 0) throw UsageError("graph file is missing the vertex count");
  return Graph(v, std::move(edges));
}

}  // namespace extq
