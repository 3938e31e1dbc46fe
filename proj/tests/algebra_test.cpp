#include <gtest/gtest.h>

#include <random>

#include "diffchow/algebra.hpp"
#include "diffchow/errors.hpp"
#include "diffchow/polyalg.hpp"
#include "test_util.hpp"

using namespace diffchow;
using namespace diffchow::testing;

TEST(Coeff, RationalFunctionArithmetic) {
  const Coeff x = Coeff::x();
  const Coeff a = (x + Coeff(1)) / (x * x - Coeff(1));  // 1/(x-1)
  EXPECT_EQ(a.numerator(), UPoly(Rational(1)));
  EXPECT_EQ(a.denominator(), UPoly(std::vector<Rational>{-1, 1}));
  EXPECT_EQ(a * (x - Coeff(1)), Coeff(1));
  EXPECT_EQ(x.shifted(1), x + Coeff(1));
  EXPECT_EQ(a.shifted(1), x.inverse());
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Coeff, ShiftIsFieldAutomorphism) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-4, 4);
  auto rnd = [&] {
    UPoly n(std::vector<Rational>{d(rng), d(rng), d(rng)});
    UPoly m(std::vector<Rational>{d(rng) == 0 ? 1 : d(rng), 1});
    return n.is_zero() ? Coeff(1) : Coeff(n, m);
  };
  for (int i = 0; i < 50; ++i) {
    const Coeff a = rnd(), b = rnd();
    EXPECT_EQ((a + b).shifted(2), a.shifted(2) + b.shifted(2));
    EXPECT_EQ((a * b).shifted(3), a.shifted(3) * b.shifted(3));
    EXPECT_EQ(a.shifted(1).is_zero(), a.is_zero());
  }
}

TEST(Poly, Arithmetic) {
  EXPECT_TRUE(arith(ArithOp::Add, P("y1"), P("-y1")).is_zero());
  EXPECT_EQ(arith(ArithOp::Mul, P("y1^2+1"), P("1")), P("y1^2+1"));
  const Poly lhs = P("u0_0 + u0_1*y1") * P("u1_0 + u1_1*y1");
  const Poly rhs = P("u0_0*u1_0 + (u0_0*u1_1 + u0_1*u1_0)*y1 + u0_1*u1_1*y1^2");
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(arith(ArithOp::Pow, P("y1+1"), P("3")), P("y1^3 + 3*y1^2 + 3*y1 + 1"));
  EXPECT_EQ(arith(ArithOp::Neg, P("y1-2"), Poly()), P("2-y1"));
}

TEST(Poly, Transform) {
  EXPECT_EQ(P("y1^2+1").transform(1), P("y1@1^2+1"));
  EXPECT_EQ(P("x*y1").transform(1), P("(x+1)*y1@1"));
  EXPECT_EQ(P("x*y1 + y2@3").transform(0), P("x*y1 + y2@3"));
}

TEST(Poly, TransformIsRingMorphism) {
  std::mt19937 rng(11);
  const std::vector<Var> vars{y(1), y(1, 1), y(2), u(0, 0), u(0, 1, 2)};
  for (int i = 0; i < 40; ++i) {
    const Poly p = random_poly(rng, vars, 4, 3), q = random_poly(rng, vars, 4, 3);
    const Poly px = p * P("x + 2");
    EXPECT_EQ((px * q).transform(2), px.transform(2) * q.transform(2));
    EXPECT_EQ((px + q).transform(1), px.transform(1) + q.transform(1));
  }
}

TEST(Algebra, OrderStats) {
  const auto a = order_stats(P("y1@2*y1 + y2"), 1);
  EXPECT_EQ(a.ord, 2);
  EXPECT_EQ(a.lord, 0);
  EXPECT_EQ(a.eord, 2);
  EXPECT_TRUE(order_stats(P("y1@2*y1 + y2"), 3).absent());
  EXPECT_EQ(order_stats(P("y1@2*y1 + y2"), 3).lord, kMinusInfinity);
  const auto c = order_stats(P("y2@3"), 2);
  EXPECT_EQ(c.ord, 3);
  EXPECT_EQ(c.lord, 3);
  EXPECT_EQ(c.eord, 0);
  EXPECT_THROW(order_stats(Poly(), 1), InvalidArgument);
}

TEST(Algebra, OrderStatsRespectTransform) {
  std::mt19937 rng(3);
  const std::vector<Var> vars{y(1), y(1, 1), y(1, 3), y(2, 2)};
  for (int i = 0; i < 40; ++i) {
    const Poly p = random_poly(rng, vars, 3, 2);
    if (p.is_zero()) continue;
    for (std::uint32_t j : {1u, 2u}) {
      const auto s = order_stats(p, j);
      if (s.absent()) continue;
      EXPECT_EQ(order_stats(p.transform(1), j).ord, s.ord + 1);
    }
  }
}

TEST(Algebra, Partial) {
  EXPECT_EQ(P("u0_0^2+u0_1^2").partial(u(0, 0)), P("2*u0_0"));
  EXPECT_EQ(P("y1@1*y1").partial(y(1, 1)), P("y1"));
  EXPECT_TRUE(P("7").partial(y(1)).is_zero());
}

TEST(Algebra, PartialLeibniz) {
  std::mt19937 rng(5);
  const std::vector<Var> vars{y(1), y(1, 1), y(2), u(0, 0)};
  for (int i = 0; i < 40; ++i) {
    const Poly p = random_poly(rng, vars, 4, 3), q = random_poly(rng, vars, 4, 3);
    for (Var v : vars) {
      EXPECT_EQ((p * q).partial(v), p.partial(v) * q + p * q.partial(v));
      EXPECT_EQ((p + q).partial(v), p.partial(v) + q.partial(v));
    }
  }
}

TEST(Algebra, Substitute) {
  EXPECT_EQ(P("y1@1 - y1").substitute({{y(1), P("y2")}}), P("y2@1 - y2"));
  EXPECT_EQ(P("y1@1 - y1").substitute({}), P("y1@1 - y1"));
  const Poly F = substitute_fraction(P("y1^2+1"), {{y(1), P("-u0_0")}}, P("u0_1"));
  EXPECT_EQ(F, P("u0_0^2+u0_1^2"));
}

TEST(Algebra, SubstituteRenamingRoundTrip) {
  std::mt19937 rng(9);
  const std::vector<Var> vars{y(1), y(1, 2), y(2), y(2, 1)};
  for (int i = 0; i < 30; ++i) {
    const Poly p = random_poly(rng, vars, 5, 3);
    const Poly q = p.substitute({{y(1), Poly(y(3))}, {y(2), Poly(y(4))}});
    EXPECT_EQ(q.substitute({{y(3), Poly(y(1))}, {y(4), Poly(y(2))}}), p);
  }
}

TEST(Algebra, Homogeneity) {
  auto h = is_transformally_homogeneous(P("u0_0^2+u0_1^2"), {u(0, 0), u(0, 1)});
  EXPECT_TRUE(h.homogeneous);
  EXPECT_EQ(h.multiplier, Monomial(Var::lambda(0), 2));
  EXPECT_FALSE(is_transformally_homogeneous(P("y1+1"), {y(1)}).homogeneous);
  h = is_transformally_homogeneous(P("y1@1*y1"), {y(1)});
  EXPECT_TRUE(h.homogeneous);
  EXPECT_EQ(h.multiplier, Monomial({{Var::lambda(1), 1}, {Var::lambda(0), 1}}));
}

// Euler identities sum_j v_j^(k) dp/dv_j^(k) = r_k p with r_k >= 0 agree with
// the lambda test on random inputs.
TEST(Algebra, HomogeneityAgreesWithEuler) {
  std::mt19937 rng(21);
  const std::vector<Var> vars{y(1), y(1, 1), y(2), y(2, 1)};
  for (int i = 0; i < 200; ++i) {
    Poly p = random_poly(rng, vars, 3, 3, 2);
    if (i % 3 == 0) p = P("y1*y2@1 - y2*y1@1") * random_poly(rng, {y(1), y(2)}, 1, 2, 2);
    if (p.is_zero()) continue;
    bool euler = true;
    for (std::uint32_t k = 0; k <= 1 && euler; ++k) {
      Poly s;
      for (std::uint32_t j : {1u, 2u}) s += Poly(y(j, k)) * p.partial(y(j, k));
      // s must be an integer multiple of p
      bool found = false;
      for (long r = 0; r <= 6 && !found; ++r) found = (s == p.scaled(Coeff(r)));
      euler = found;
    }
    EXPECT_EQ(is_transformally_homogeneous(p, {y(1), y(2)}).homogeneous, euler) << p.to_string();
  }
}

TEST(Algebra, Denomination) {
  EXPECT_EQ(denomination(P("y1@1^2*y1^3 + 1")), Monomial({{y(1), 3}, {y(1, 1), 2}}));
  EXPECT_EQ(denomination(P("y1^2+1")), Monomial(y(1), 2));
  EXPECT_EQ(denomination(P("y1@2")), Monomial(y(1, 2), 1));
  EXPECT_EQ(denomination(P("y1^2+1")).degree(), 2u);
  EXPECT_THROW(denomination(P("y1+y2")), InvalidArgument);
}

TEST(PolyAlg, GcdAndSquarefree) {
  const Poly a = P("y1^2 - y2^2"), b = P("y1^2 + 2*y1*y2 + y2^2");
  EXPECT_EQ(gcd(a, b), P("y1 + y2"));
  EXPECT_EQ(squarefree_part(P("(y1+1)^3*(y2-y1)^2*3")), (P("(y1+1)*(y2-y1)")).primitive());
  EXPECT_EQ(squarefree_part(P("(u0_0^2+u0_1^2)^2*u0_1^3")), P("(u0_0^2+u0_1^2)*u0_1"));
  EXPECT_EQ(*exact_divide(a, P("y1-y2")), P("y1+y2"));
  EXPECT_FALSE(exact_divide(a, P("y1-2")).has_value());
}

TEST(PolyAlg, GcdRandomProducts) {
  std::mt19937 rng(17);
  const std::vector<Var> vars{y(1), y(2), u(0, 0)};
  for (int i = 0; i < 30; ++i) {
    const Poly g = random_poly(rng, vars, 2, 2, 3) + P("y1");
    const Poly p = random_poly(rng, vars, 2, 2, 3) + P("1");
    const Poly q = random_poly(rng, vars, 2, 2, 3) + P("y2");
    const Poly d = gcd(g * p, g * q);
    EXPECT_TRUE(exact_divide(d, g.primitive()).has_value()) << d.to_string() << " / " << g.to_string();
    EXPECT_TRUE(exact_divide(g * p, d).has_value());
    EXPECT_TRUE(exact_divide(g * q, d).has_value());
  }
}

TEST(PolyAlg, ResultantOfLinearForms) {
  const Poly r = resultant(P("u0_0 + u0_1*y1"), P("u1_0 + u1_1*y1"), y(1));
  // det [[u0_1, u0_0], [u1_1, u1_0]]
  EXPECT_EQ(r, P("u0_1*u1_0 - u0_0*u1_1"));
}

TEST(PolyAlg, PseudoDivisionIdentity) {
  std::mt19937 rng(23);
  const std::vector<Var> vars{y(1), y(2), u(0, 0)};
  for (int i = 0; i < 50; ++i) {
    const Poly f = random_poly(rng, vars, 5, 4);
    const Poly g = random_poly(rng, vars, 3, 3) + P("y1*y2");
    if (g.degree(y(1)) == 0) continue;
    const auto pd = pseudo_divide(f, g, y(1));
    EXPECT_EQ(pd.multiplier * f, pd.quotient * g + pd.remainder);
    EXPECT_TRUE(pd.remainder.is_zero() || pd.remainder.degree(y(1)) < g.degree(y(1)));
  }
}

TEST(Parser, Grammar) {
  EXPECT_EQ(P("y1^2 + 1"), Poly(y(1)).pow(2) + Poly(1));
  EXPECT_EQ(P("y1@1 - y1"), Poly(y(1, 1)) - Poly(y(1)));
  EXPECT_EQ(P("x*y1@2 + (x+1)"), Poly(Coeff::x()) * Poly(y(1, 2)) + Poly(Coeff::x() + Coeff(1)));
  EXPECT_EQ(P("3/4*y1"), Poly(y(1)).scaled(Coeff(Rational(3, 4))));
  EXPECT_EQ(P("-y1^2"), -Poly(y(1)).pow(2));
  EXPECT_EQ(P("(y1+1)@2"), P("y1@2+1"));
}

TEST(Parser, Errors) {
  try {
    parse_poly("y1 + * y2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 6u);
  }
  ParseOptions q;
  q.allow_x = false;
  EXPECT_THROW(parse_poly("x*y1", q), ParseError);
  ParseOptions decl;
  decl.declared = std::set<Var>{y(1)};
  EXPECT_THROW(parse_poly("y1 + y2", decl), ParseError);
  EXPECT_THROW(parse_poly("foo + 1"), ParseError);
  EXPECT_THROW(parse_poly("y1/y2"), ParseError);
  EXPECT_THROW(parse_poly("(y1 + 1"), ParseError);
  EXPECT_THROW(parse_poly(""), ParseError);
}

TEST(Parser, PrintRoundTrip) {
  std::mt19937 rng(31);
  const std::vector<Var> vars{y(1), y(1, 1), y(2, 3), u(0, 0), u(1, 2, 1)};
  for (int i = 0; i < 100; ++i) {
    Poly p = random_poly(rng, vars, 5, 3, 7);
    if (i % 2) p = p * P("(x^2 - 3*x + 1/2)/(x+1)") + P("2/3*y1");
    EXPECT_EQ(parse_poly(p.to_string()), p) << p.to_string();
  }
}
