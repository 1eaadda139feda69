#include <doctest.h>

#include <set>

#include "extq/parse.hpp"
#include "properties.hpp"

using namespace extq;

TEST_CASE("order axioms and variable ranking") {
  for (const MonomialOrder& o : stock_orders(3)) {
    Monomial one{};
    for (uint64_t a = 1; a < 8; ++a) CHECK(o.less(one, Monomial(a)));
    // compatibility with multiplication by a disjoint monomial
    for (uint64_t a = 0; a < 8; ++a)
      for (uint64_t b = 0; b < 8; ++b)
        for (uint64_t c = 0; c < 8; ++c) {
          if ((a & c) || (b & c) || a == b) continue;
          CHECK(o.less(Monomial(a), Monomial(b)) ==
                o.less(Monomial(a | c), Monomial(b | c)));
        }
  }
  CHECK(stock_orders(3).size() == 18);  // 3 kinds times 3! permutations
  CHECK(stock_orders(4).size() == 72);
}

TEST_CASE("degrevlex tie break") {
  MonomialOrder drl(OrderKind::degrevlex, 4);
  // among degree-2 monomials, the one using later variables is smaller
  CHECK(drl.less(Monomial(0b1100), Monomial(0b0011)));  // e3e4 < e1e2
  CHECK(drl.less(Monomial(0b1010), Monomial(0b0110)));  // e2e4 < e2e3
}

TEST_CASE("annihilator pairs are required for correctness") {
  // e1 * (e1e2 + e3e4) = e1e3e4 lies in the ideal but no S-pair produces it.
  Ideal<Rational> I(4, {parse_element("e1*e2 + e3*e4", 4)});
  MonomialOrder drl(OrderKind::degrevlex, 4);
  GroebnerBasis<Rational> full = buchberger(I, drl);
  CHECK(full.contains(parse_element("e1*e3*e4", 4)));
  BuchbergerOptions plain;
  plain.annihilator_pairs = false;
  GroebnerBasis<Rational> partial = buchberger(I, drl, plain);
  CHECK(!partial.contains(parse_element("e1*e3*e4", 4)));
}

TEST_CASE("reduced basis of a principal quadric") {
  Ideal<Rational> I(4, {parse_element("e1*e2 + e3*e4", 4)});
  GroebnerBasis<Rational> gb = buchberger(I, MonomialOrder(OrderKind::degrevlex, 4));
  // the generator plus the two annihilator cubes e1e3e4, e2e3e4
  CHECK(gb.elements.size() == 3);
  std::set<Monomial> lts(gb.initial.minimal_generators.begin(),
                         gb.initial.minimal_generators.end());
  CHECK(lts == std::set<Monomial>{Monomial(0b0011), Monomial(0b1101), Monomial(0b1110)});
}

TEST_CASE("membership soundness") {
  Ideal<Rational> I(5, {parse_element("e1*e2", 5), parse_element("e2*e3 + e4*e5", 5)});
  GroebnerBasis<Rational> gb = buchberger(I, MonomialOrder(OrderKind::deglex, 5));
  auto combo = parse_element("(e1+e4)*(e2*e3+e4*e5) + 3*e1*e2*e5", 5);
  CHECK(gb.contains(combo));
  CHECK(!gb.contains(parse_element("e1*e3", 5)));
}

TEST_CASE("buchberger is idempotent on random ideals") {
  CHECK(props::gb_idempotence(201));
}
