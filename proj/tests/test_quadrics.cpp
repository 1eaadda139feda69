#include <doctest.h>

#include "extq/parse.hpp"
#include "properties.hpp"

using namespace extq;

TEST_CASE("alternating matrix and rank") {
  auto q = parse_element("e1*e2 + e3*e4", 4);
  AlternatingMatrix<Rational> A = to_alternating(q);
  CHECK(A.matrix().at(0, 1) == Rational(1));
  CHECK(A.matrix().at(1, 0) == Rational(-1));
  CHECK(rank(q) == 4);
  CHECK(rank(parse_element("e1*e2", 4)) == 2);
  CHECK(rank(parse_element("(e1-e4)*(e2+e3)", 4)) == 2);
  CHECK_THROWS_AS(to_alternating(parse_element("e1*e2*e3", 4)), UsageError);
}

TEST_CASE("pfaffian on hand-checked instances") {
  CHECK(pfaffian(to_alternating(parse_element("e1*e2 + e3*e4", 4))) == Rational(1));
  CHECK(pfaffian(to_alternating(parse_element("e1*e3 + e2*e4", 4))) == Rational(-1));
  CHECK(pfaffian(to_alternating(parse_element("3*e1*e2", 4))) == Rational(0));
  CHECK(pfaffian(to_alternating(parse_element("e1*e2 + e3*e4 + e5*e6", 6))) == Rational(1));
}

TEST_CASE("rank-two pencil of the two-triangle generators") {
  auto q1 = parse_element("e1*e2 + e3*e4", 4);
  auto q2 = parse_element("e1*e3 + e2*e4", 4);
  PencilResult pr = rank2_in_pencil(q1, q2);
  bool has_one = false;
  for (auto& r : pr.rational_roots) has_one = has_one || r == Rational(1);
  CHECK(has_one);
  REQUIRE(pr.witness);
  REQUIRE(pr.witness_lambda);
  CHECK(rank(*pr.witness) == 2);
  CHECK(*pr.witness == q1 + q2.scaled(*pr.witness_lambda));
}

TEST_CASE("pencil with no rational rank drop reports the discriminant") {
  // Pf(q1 + x q2) = 1 + x^2, no real roots
  auto q1 = parse_element("e1*e2 + e3*e4", 4);
  auto q2 = parse_element("e1*e3 - e2*e4", 4);
  PencilResult pr = rank2_in_pencil(q1, q2);
  CHECK(pr.rational_roots.empty());
  CHECK(!pr.witness);
  REQUIRE(pr.discriminant);
  CHECK(sgn(*pr.discriminant) < 0);
}

TEST_CASE("dimension-count bound for avoiding low rank") {
  CHECK(rank_bound(6, 2, 6));
  CHECK(!rank_bound(6, 2, 7));
  CHECK(rank_bound(4, 2, 1));
  CHECK(!rank_bound(4, 2, 2));
}

TEST_CASE("seeded quadrics are reproducible and generically independent") {
  Ideal<Rational> a = generic_quadrics(6, 6, 42);
  Ideal<Rational> b = generic_quadrics(6, 6, 42);
  CHECK(a.generators == b.generators);
  CHECK(!(generic_quadrics(6, 6, 43).generators == a.generators));
}

TEST_CASE("sampled minimum rank finds planted low-rank members") {
  auto q1 = parse_element("e1*e2 + e3*e4", 4);
  auto q2 = parse_element("e1*e2 - e3*e4", 4);  // q1 - q2 = 2 e3e4, rank 2
  std::vector<ExtElement<Rational>> span{q1, q2};
  MinRankSample<Rational> mr = min_rank_sample(span, 200, 7);
  CHECK(mr.min_rank == 2);
}

TEST_CASE("pfaffian squared equals the determinant") {
  CHECK(props::pfaffian_squared(601));
}
TEST_CASE("quadric rank is even and coordinate free") {
  CHECK(props::rank_parity(602));
}
TEST_CASE("greedy factorization recomposes with rank/2 factors") {
  CHECK(props::decomposition_roundtrip(603));
}
