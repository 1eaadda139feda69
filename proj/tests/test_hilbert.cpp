#include <doctest.h>

#include "extq/graph.hpp"
#include "extq/parse.hpp"
#include "properties.hpp"

using namespace extq;

TEST_CASE("series arithmetic and division") {
  HilbertSeries a = parse_hilbert("1,3") * parse_hilbert("1,3");
  CHECK(a == parse_hilbert("1,6,9"));
  auto q = parse_hilbert("1,7,15,10,1").divided_by(parse_hilbert("1,1"));
  REQUIRE(q);
  CHECK(*q == parse_hilbert("1,6,9,1"));
  CHECK(!parse_hilbert("1,7,15,10,1").divided_by(parse_hilbert("1,2")));
  CHECK(ambient_hilbert(4) == parse_hilbert("1,4,6,4,1"));
}

TEST_CASE("seven-vertex path quotient, two independent routes") {
  Graph p7 = preset_graph("path:7");
  HilbertSeries via_gb =
      hilbert_series(edge_ideal<Rational>(p7), MonomialOrder(OrderKind::degrevlex, 7));
  HilbertSeries via_graph = independence_polynomial(p7);
  CHECK(via_gb == parse_hilbert("1,7,15,10,1"));
  CHECK(via_graph == via_gb);
}

TEST_CASE("independence polynomial agrees with the edge ideal series") {
  std::mt19937_64 rng(404);
  for (int k = 0; k < 60; ++k) {
    int v = 2 + int(rng() % 6);
    std::vector<std::pair<int, int>> all;
    for (int a = 1; a <= v; ++a)
      for (int b = a + 1; b <= v; ++b) all.push_back({a, b});
    std::vector<std::pair<int, int>> edges;
    for (auto& e : all)
      if (rng() % 2) edges.push_back(e);
    Graph g{v, edges};
    CHECK(independence_polynomial(g) ==
          hilbert_series(edge_ideal<Rational>(g), MonomialOrder(OrderKind::deglex, v)));
  }
}

TEST_CASE("independence polynomial is multiplicative over disjoint unions") {
  Graph t = preset_graph("triangle"), p4 = preset_graph("path:4");
  CHECK(independence_polynomial(t.disjoint_union(p4)) ==
        independence_polynomial(t) * independence_polynomial(p4));
}

TEST_CASE("inverse series expansion flags the first negative coefficient") {
  FrobergResult fr = froberg_inverse(parse_hilbert("1,4,5"), 6);
  std::vector<Rational> want{1, 4, 11, 24, 41, 44, -29};
  CHECK(fr.series.coefficients == want);
  REQUIRE(fr.first_negative_index);
  CHECK(*fr.first_negative_index == 6);

  // (1+t)^n inverts to an everywhere-positive series
  FrobergResult ok = froberg_inverse(ambient_hilbert(3), 12);
  CHECK(!ok.first_negative_index);
}

TEST_CASE("redundant quartics leave an edge-ideal series untouched") {
  // the quartic generators are multiples of e4*e5, so this is the edge ideal
  // of two triangles plus an isolated vertex
  std::vector<std::string> gens = {"e1*e2", "e1*e3", "e2*e3", "e4*e5",
                                   "e4*e6", "e5*e6", "e1*e4*e5*e7", "e2*e4*e5*e7"};
  std::vector<ExtElement<Rational>> parsed;
  for (auto& s : gens) parsed.push_back(parse_element(s, 7));
  HilbertSeries hs =
      hilbert_series(Ideal<Rational>(7, parsed), MonomialOrder(OrderKind::degrevlex, 7));
  CHECK(hs == parse_hilbert("1,3") * parse_hilbert("1,3") * parse_hilbert("1,1"));
  CHECK(hs == independence_polynomial(
                  preset_graph("triangle+triangle").disjoint_union(preset_graph("edgeless:1"))));
}

TEST_CASE("a straddling quadric shrinks the initial-ideal quotient") {
  // I' = (uw, vw, xy, xz, yz, uv+wx+yc): its initial ideal gains three cubic
  // generators, pushing the quotient strictly below (1+3t)^2(1+t)
  std::vector<std::string> gens = {"e1*e3", "e2*e3", "e4*e5",
                                   "e4*e6", "e5*e6", "e1*e2 + e3*e4 + e5*e7"};
  std::vector<ExtElement<Rational>> parsed;
  for (auto& s : gens) parsed.push_back(parse_element(s, 7));
  HilbertSeries hs =
      hilbert_series(Ideal<Rational>(7, parsed), MonomialOrder(OrderKind::degrevlex, 7));
  CHECK(hs == parse_hilbert("1,7,15,6"));
}

TEST_CASE("hilbert series is independent of the monomial order") {
  CHECK(props::hf_order_invariance(301));
}
