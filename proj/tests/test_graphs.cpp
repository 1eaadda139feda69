#include <doctest.h>

#include <sstream>

#include "extq/graph.hpp"
#include "extq/parse.hpp"

using namespace extq;

TEST_CASE("construction validates edges") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), UsageError);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), UsageError);
  CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), UsageError);
  Graph g(3, {{2, 1}, {2, 3}});
  CHECK(g.edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  CHECK(g.max_degree() == 2);
}

TEST_CASE("presets and files") {
  Graph p4 = preset_graph("path:4");
  CHECK(p4.vertex_count == 4);
  CHECK(p4.edge_count() == 3);
  Graph c5 = preset_graph("cycle:5");
  CHECK(c5.edge_count() == 5);
  Graph two = preset_graph("triangle+triangle");
  CHECK(two.vertex_count == 6);
  CHECK(two.edge_count() == 6);
  CHECK_THROWS_AS(preset_graph("blob:3"), UsageError);

  std::istringstream in("# comment\nv 4\nedge 1 2\nedge 3 4\n");
  Graph f = parse_graph_file(in);
  CHECK(f.vertex_count == 4);
  CHECK(f.edges == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
}

TEST_CASE("canonical form separates and identifies isomorphism classes") {
  Graph a(4, {{1, 2}, {2, 3}, {3, 4}});
  Graph b(4, {{2, 4}, {1, 4}, {1, 3}});  // a relabelled path
  CHECK(canonical_form(a) == canonical_form(b));
  Graph star(4, {{1, 2}, {1, 3}, {1, 4}});
  CHECK(canonical_form(a) != canonical_form(star));
}

TEST_CASE("independence polynomial matches hand counts") {
  CHECK(independence_polynomial(preset_graph("triangle")) == parse_hilbert("1,3"));
  CHECK(independence_polynomial(preset_graph("path:4")) == parse_hilbert("1,4,3"));
  CHECK(independence_polynomial(preset_graph("cycle:5")) == parse_hilbert("1,5,5"));
  CHECK(independence_polynomial(preset_graph("edgeless:3")) == parse_hilbert("1,3,3,1"));
}

TEST_CASE("labelled enumeration visits every edge subset") {
  int count = 0;
  enumerate_graphs(6, 6, false, [&](const Graph&) {
    ++count;
    return true;
  });
  CHECK(count == 5005);  // C(15, 6)
}

TEST_CASE("no six-vertex graph has the series of the path quotient") {
  CHECK(search_by_series(6, 6, 6, parse_hilbert("1,6,9,1"), false).empty());
}

TEST_CASE("series search finds the square of a triangle series") {
  auto found = search_by_series(6, 6, 6, parse_hilbert("1,6,9"), false);
  REQUIRE(!found.empty());
  bool saw_two_triangles = false;
  for (auto& g : found)
    saw_two_triangles =
        saw_two_triangles || canonical_form(g) == canonical_form(preset_graph("triangle+triangle"));
  CHECK(saw_two_triangles);
}
