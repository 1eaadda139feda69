#include <doctest.h>

#include "extq/graph.hpp"
#include "extq/parse.hpp"
#include "properties.hpp"

using namespace extq;

namespace {
QuotientAlgebra<Rational> path_quotient(int n) {
  return QuotientAlgebra<Rational>(edge_ideal<Rational>(preset_graph("path:" + std::to_string(n))),
                                   MonomialOrder(OrderKind::degrevlex, n));
}
}  // namespace

TEST_CASE("alternating sum of path vertices is regular") {
  QuotientAlgebra<Rational> A = path_quotient(7);
  auto good = LinearForm<Rational>::from_element(parse_element("e1+e4+e7", 7));
  RegularityCertificate<Rational> cert = is_regular(good, A);
  CHECK(cert.regular);

  auto bad = LinearForm<Rational>::from_element(parse_element("e1", 7));
  RegularityCertificate<Rational> c2 = is_regular(bad, A);
  CHECK(!c2.regular);
  CHECK(!c2.witness.is_zero());
  CHECK(A.reduce(bad.element() * c2.witness).is_zero());
}

TEST_CASE("quotient by a regular form divides the series and drops a variable") {
  QuotientAlgebra<Rational> A = path_quotient(7);
  auto l = LinearForm<Rational>::from_element(parse_element("e1+e4+e7", 7));
  RegularityCertificate<Rational> cert = is_regular(l, A);
  REQUIRE(cert.regular);
  QuotientByLinear<Rational> q = quotient_by_linear(A, cert);
  CHECK(q.eliminated_variable == 7);
  CHECK(q.algebra.ambient_n() == 6);
  CHECK(q.algebra.hilbert() == parse_hilbert("1,6,9,1"));
  // e6*e7 becomes e6*(e1+e4) up to sign after eliminating e7
  CHECK(q.algebra.groebner().contains(parse_element("e6*(e1+e4)", 6)));
  CHECK_THROWS_AS(quotient_by_linear(A, is_regular(LinearForm<Rational>::from_element(
                                                       parse_element("e1", 7)),
                                                   A)),
                  UsageError);
}

TEST_CASE("sequence verdict reports the failing index") {
  QuotientAlgebra<Rational> A = path_quotient(7);
  std::vector<LinearForm<Rational>> seq{
      LinearForm<Rational>::from_element(parse_element("e1+e4+e7", 7))};
  SequenceVerdict v1 = is_regular_sequence(seq, A);
  CHECK(v1.regular);
  seq.push_back(LinearForm<Rational>::from_element(parse_element("e1", 7)));
  SequenceVerdict v2 = is_regular_sequence(seq, A);
  CHECK(!v2.regular);
  CHECK(v2.failing_index == 2);  // 1-based position of the first failing form
}

TEST_CASE("depth probe on small paths") {
  DepthProbe d7 = depth_probe(path_quotient(7), 8, 777);
  CHECK(d7.certified_lower_bound >= 1);
  auto divided = HilbertSeries::one_plus_t_power(d7.certified_lower_bound);
  CHECK(path_quotient(7).hilbert().divided_by(divided));

  DepthProbe d3 = depth_probe(path_quotient(3), 8, 778);
  CHECK(d3.certified_lower_bound == 0);
  CHECK(d3.probable_depth == 0);
}

TEST_CASE("full exterior algebra has certified depth n") {
  QuotientAlgebra<Rational> E(Ideal<Rational>(3, {}), MonomialOrder(OrderKind::degrevlex, 3));
  DepthProbe d = depth_probe(E, 8, 779);
  CHECK(d.certified_complete);
  CHECK(d.certified_lower_bound == 3);
}

TEST_CASE("quadratic-monomial models of a series reduce to a graph search") {
  LGSearchResult res = lg_obstruction_search(parse_hilbert("1,6,9"), 1);
  REQUIRE(res.per_d.size() == 2);
  CHECK(res.per_d[0].vertices == 6);
  CHECK(res.per_d[0].edges == 6);
  CHECK(!res.per_d[0].candidates.empty());
  CHECK(!res.not_g_quadratic);

  LGSearchResult none = lg_obstruction_search(parse_hilbert("1,6,9,1"), 0);
  CHECK(none.not_g_quadratic);
  CHECK(none.obstructed_throughout);
}

TEST_CASE("regular forms divide the series; rejected forms carry witnesses") {
  CHECK(props::regularity_transfer(501));
}
