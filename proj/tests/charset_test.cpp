#include <gtest/gtest.h>

#include "diffchow/charset.hpp"
#include "diffchow/errors.hpp"
#include "diffchow/polyalg.hpp"
#include "test_util.hpp"

using namespace diffchow;
using namespace diffchow::testing;

TEST(CharSet, ExampleN1) {
  const auto res = char_set({P("y1^2+1"), P("y1@1-y1")}, Ranking::orderly({y(1)}));
  ASSERT_EQ(res.chain.size(), 2u);
  EXPECT_EQ(res.chain[0], P("y1^2+1"));
  EXPECT_EQ(res.chain[1], P("y1@1-y1"));
  EXPECT_EQ(res.dim, 0);
  EXPECT_EQ(res.order, 0);
}

TEST(CharSet, ExampleN2) {
  const auto res = char_set({P("y1@1-y1"), P("y2^2-y1"), P("y2@1+y2")}, Ranking::orderly({y(1), y(2)}));
  ASSERT_EQ(res.chain.size(), 3u);
  EXPECT_EQ(res.dim, 0);
  EXPECT_EQ(res.order, 1);
  EXPECT_EQ(res.poly_h, 1);
}

TEST(CharSet, Trivial) {
  const auto res = char_set({P("y1")}, Ranking::orderly({y(1)}));
  ASSERT_EQ(res.chain.size(), 1u);
  EXPECT_EQ(res.chain[0], P("y1"));
  EXPECT_EQ(res.dim, 0);
  EXPECT_EQ(res.order, 0);
}

TEST(CharSet, Inconsistent) {
  EXPECT_THROW(char_set({P("y1"), P("y1+1")}, Ranking::orderly({y(1)})), InconsistentSystem);
  EXPECT_THROW(char_set({P("y1@1-y1"), P("y1^2+1"), P("y1@1+y1")}, Ranking::orderly({y(1)})), InconsistentSystem);
}

// Dimension and order do not depend on the ranking for the example ideals.
TEST(CharSet, RankingIndependence) {
  const std::vector<Poly> n2{P("y1@1-y1"), P("y2^2-y1"), P("y2@1+y2")};
  for (const auto& r : {Ranking::orderly({y(1), y(2)}), Ranking::elimination({y(1), y(2)}),
                        Ranking::elimination({y(2), y(1)})}) {
    const auto res = char_set(n2, r);
    EXPECT_EQ(res.dim, 0) << r.to_string();
    EXPECT_EQ(res.order, 1) << r.to_string() << " " << res.chain.to_string();
    for (const auto& f : n2) EXPECT_TRUE(diff_prem(f, res.chain).is_zero());
  }
}

// For d > 0 the elimination order is the relative order; the largest one over
// the parametric sets is the orderly order.
TEST(CharSet, RelativeOrderMaximum) {
  const std::vector<Poly> lin{P("y1@1 - y2")};
  EXPECT_EQ(char_set(lin, Ranking::orderly({y(1), y(2)})).order, 1);
  int best = 0;
  for (const auto& r : {Ranking::elimination({y(1), y(2)}), Ranking::elimination({y(2), y(1)})}) {
    const auto res = char_set(lin, r);
    EXPECT_EQ(res.dim, 1) << r.to_string();
    best = std::max(best, relative_order(res.chain, res.parametric_set));
  }
  EXPECT_EQ(best, 1);
}

TEST(CharSet, DimensionPolynomial) {
  EXPECT_EQ(dimension_polynomial(0, 1, 5), 1);
  EXPECT_EQ(dimension_polynomial(1, 0, 3), 4);
  EXPECT_EQ(dimension_polynomial(2, 3, 10), 25);
}

TEST(CharSet, SatMember) {
  const Chain c({P("y1^2+1"), P("y1@1-y1")}, Ranking::orderly({y(1)}));
  EXPECT_TRUE(sat_member(P("y1@2-y1"), c));
  EXPECT_FALSE(sat_member(P("y1+1"), c));
  EXPECT_TRUE(sat_member(Poly(), c));
}

TEST(CharSet, RelativeOrder) {
  const Chain c({P("y1^2+1"), P("y1@1-y1")}, Ranking::elimination({y(1)}));
  EXPECT_EQ(relative_order(c, {}), 0);
  const Chain h({P("u0_1*y1+u0_0")}, Ranking::elimination({u(0, 0), u(0, 1), y(1)}));
  EXPECT_EQ(relative_order(h, {u(0, 0), u(0, 1)}), 0);
  const Chain n2({P("y1@1-y1"), P("y2^2-y1"), P("y2@1+y2")}, Ranking::elimination({y(1), y(2)}));
  EXPECT_EQ(relative_order(n2, {}), 1);
  const Chain bad({P("u0_1*y1+u0_0")}, Ranking::elimination({y(1), u(0, 0), u(0, 1)}),
                  Chain::Validation::Triangular);
  EXPECT_THROW(relative_order(bad, {u(0, 0), u(0, 1)}), InvalidArgument);
}

// Every input element reduces to zero against the output chain, and the chain
// members lie in the ideal up to initials: checked via the output chain
// reducing to zero against the char set recomputed from input plus chain.
TEST(CharSet, InputReducesToZero) {
  const Ranking r = Ranking::orderly({y(1), y(2)});
  const std::vector<std::vector<Poly>> systems{
      {P("y1*y2 - 1"), P("y2@1 - y1")},
      {P("y1^2 - y2"), P("y2@1 - y2^2"), P("y1@1 - y1^2")},
      {P("y1@1 + y2"), P("y2@1 - y1")},
  };
  for (const auto& S : systems) {
    for (bool par : {false, true}) {
      CharSetOptions o;
      o.parallel = par;
      const auto res = char_set(S, r, o);
      for (const auto& f : S) EXPECT_TRUE(diff_prem(f, res.chain).is_zero()) << f << " vs " << res.chain.to_string();
    }
  }
}

TEST(CharSet, ParallelMatchesSequential) {
  const Ranking r = Ranking::orderly({y(1), y(2)});
  const std::vector<Poly> S{P("y1^2 - y2"), P("y2@1 - y2^2"), P("y1@1 - y1^2"), P("y1*y2 - y2")};
  CharSetOptions par;
  par.parallel = true;
  const auto a = char_set(S, r), b = char_set(S, r, par);
  EXPECT_EQ(a.chain.elements(), b.chain.elements());
}

// Codimension-one ideals: the lowest member under two rankings agree up to a
// field factor.
TEST(CharSet, CodimOneLowestMemberUnique) {
  const std::vector<Poly> S{P("u0_0^2+u0_1^2"), P("u0_1*u0_0@1-u0_0*u0_1@1")};
  const auto a = char_set(S, Ranking::elimination({u(0, 1), u(0, 0)}));
  const auto b = char_set(S, Ranking::orderly({u(0, 1), u(0, 0)}));
  EXPECT_EQ(a.chain[0].primitive(), b.chain[0].primitive());
  EXPECT_EQ(a.chain[0].primitive(), P("u0_0^2+u0_1^2"));
}
