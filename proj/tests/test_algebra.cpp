#include <doctest.h>

#include "extq/parse.hpp"
#include "properties.hpp"

using namespace extq;

TEST_CASE("monomial multiplication signs") {
  Monomial e1 = Monomial::variable(1), e2 = Monomial::variable(2);
  MonoProduct p = mono_mul(e1, e2);
  CHECK(!p.zero);
  CHECK(p.product.bits == 0b11);
  CHECK(p.sign == 1);
  p = mono_mul(e2, e1);
  CHECK(p.product.bits == 0b11);
  CHECK(p.sign == -1);
  CHECK(mono_mul(e1, e1).zero);
  // e1e3 * e2e4: one inversion (3 before 2), so the sign flips
  p = mono_mul(Monomial(0b101), Monomial(0b1010));
  CHECK(p.product.bits == 0b1111);
  CHECK(p.sign == -1);
}

TEST_CASE("parser matches exterior semantics") {
  auto q = parse_element("e1*e2 + e3*e4", 4);
  CHECK(q.term_count() == 2);
  CHECK(q.coefficient(Monomial(0b11)) == Rational(1));
  CHECK(q.coefficient(Monomial(0b1100)) == Rational(1));

  auto expanded = parse_element("(e1-e4)*(e2+e3)", 4);
  CHECK(expanded == parse_element("e1*e2 + e1*e3 + e2*e4 + e3*e4", 4));

  CHECK(parse_element("e1*e1", 4).is_zero());
  CHECK(parse_element("1/2*e1*e2 - 1/2*e2*e1", 4) == parse_element("e1*e2", 4));
  CHECK_THROWS_AS(parse_element("e5", 4), UsageError);
  CHECK_THROWS_AS(parse_element("e1 +", 4), UsageError);
  CHECK_THROWS_AS(parse_element("1/0*e1", 4), UsageError);
}

TEST_CASE("leading terms follow the order") {
  MonomialOrder lex(OrderKind::lex, 4);
  MonomialOrder drl(OrderKind::degrevlex, 4);
  auto f = parse_element("e1*e2 + e3*e4 + e1*e2*e3", 4);
  CHECK(f.leading_monomial(lex).bits == 0b0111);
  CHECK(f.leading_monomial(drl).bits == 0b0111);
  auto g = parse_element("e1*e2 + e3*e4", 4);
  CHECK(g.leading_monomial(lex).bits == 0b0011);
  CHECK(g.leading_monomial(drl).bits == 0b0011);
}

TEST_CASE("field conversion to a prime field") {
  FieldCtx<Fp> fp{5};
  CHECK(convert_scalar<Fp>(Rational(7), fp).value() == 2);
  CHECK(convert_scalar<Fp>(Rational(1, 2), fp).value() == 3);  // 2*3 = 6 = 1 mod 5
  CHECK_THROWS_AS(convert_scalar<Fp>(Rational(1, 5), fp), UsageError);
}

TEST_CASE("product associativity on random elements") {
  CHECK(props::associativity(101));
}
TEST_CASE("graded skew commutativity on random elements") {
  CHECK(props::skew_commutativity(102));
}
TEST_CASE("odd-degree squares vanish on random elements") {
  CHECK(props::square_zero(103));
}
TEST_CASE("print then parse is the identity on random elements") {
  CHECK(props::print_parse_roundtrip(104));
}
