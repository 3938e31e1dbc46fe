#include <gtest/gtest.h>

#include <random>

#include "diffchow/groebner.hpp"
#include "diffchow/polyalg.hpp"
#include "test_util.hpp"

using namespace diffchow;
using namespace diffchow::testing;

namespace {

BlockOrder lex(std::vector<Var> vars) { return {{{OrderBlock::Kind::Lex, std::move(vars)}}}; }

}  // namespace

TEST(Groebner, CircleAndLine) {
  const auto gb = groebner_basis({P("y1^2 + y2^2 - 1"), P("y1 - y2")}, lex({y(1), y(2)}));
  ASSERT_EQ(gb.size(), 2u);
  EXPECT_EQ(gb[0], P("y2^2 - 1/2"));
  EXPECT_EQ(gb[1], P("y1 - y2"));
}

TEST(Groebner, UnitIdeal) {
  const auto gb = groebner_basis({P("y1*y2 - 1"), P("y1")}, lex({y(1), y(2)}));
  ASSERT_EQ(gb.size(), 1u);
  EXPECT_EQ(gb[0], P("1"));
}

TEST(Groebner, EliminatesLinearForms) {
  BlockOrder o{{{OrderBlock::Kind::Grevlex, {y(1)}},
                {OrderBlock::Kind::Lex, {u(1, 0), u(0, 0), u(1, 1), u(0, 1)}}}};
  const auto gb = groebner_basis({P("u0_0 + u0_1*y1"), P("u1_0 + u1_1*y1")}, o);
  bool found = false;
  for (const auto& g : gb)
    if (!g.contains(y(1))) {
      EXPECT_EQ(g.primitive(), P("u0_0*u1_1 - u0_1*u1_0").primitive());
      found = true;
    }
  EXPECT_TRUE(found);
}

// Ideal membership cross-check: generators reduce to zero modulo the basis and
// random combinations too.
TEST(Groebner, MembershipRandom) {
  std::mt19937 rng(77);
  const std::vector<Var> vars{y(1), y(2), y(3)};
  for (int round = 0; round < 15; ++round) {
    std::vector<Poly> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_poly(rng, vars, 3, 2, 3) + P("y1"));
    for (const auto& ord : {lex({y(3), y(2), y(1)}), BlockOrder{{{OrderBlock::Kind::Grevlex, vars}}}}) {
      const auto gb = groebner_basis(gens, ord);
      for (const auto& g : gens) EXPECT_TRUE(normal_form(g, gb, ord).is_zero());
      Poly comb = gens[0] * random_poly(rng, vars, 2, 1) + gens[1] * random_poly(rng, vars, 2, 2);
      EXPECT_TRUE(normal_form(comb, gb, ord).is_zero());
    }
  }
}

TEST(Groebner, RationalFunctionCoefficients) {
  const auto gb = groebner_basis({P("x*y1 - 1"), P("y2 - y1^2")}, lex({y(2), y(1)}));
  ASSERT_EQ(gb.size(), 2u);
  EXPECT_EQ(gb[0], P("y1 - 1/x"));
  EXPECT_EQ(gb[1], P("y2 - 1/(x^2)"));
}
