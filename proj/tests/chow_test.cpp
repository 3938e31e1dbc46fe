#include <gtest/gtest.h>

#include "diffchow/chow.hpp"
#include "diffchow/errors.hpp"
#include "diffchow/generic.hpp"
#include "diffchow/polyalg.hpp"
#include "test_util.hpp"

using namespace diffchow;
using namespace diffchow::testing;

namespace {

const Ranking kY1 = orderly_ranking(1);
const Ranking kY2 = orderly_ranking(2);

bool unit_equal(const Poly& a, const Poly& b) { return a.primitive() == b.primitive(); }

// Hyperplane and its first transform solved for (y1, y2) by Cramer's rule,
// using y1' = y1 and y2' = -y2; substituted into y2^2 - y1.
Poly n2_oracle() {
  const Poly delta = P("-u0_1*u0_2@1 - u0_2*u0_1@1");
  const Poly n1 = P("u0_0*u0_2@1 + u0_2*u0_0@1");
  const Poly n2 = P("u0_0*u0_1@1 - u0_1*u0_0@1");
  return n2 * n2 - n1 * delta;
}

Chain n2_chain() { return Chain({P("y1@1-y1"), P("y2^2-y1"), P("y2@1+y2")}, kY2); }

}  // namespace

TEST(Chow, UnivariateExample) {
  const ChowData cd = chow_form(Chain({P("y1^2+1"), P("y1@1-y1")}, kY1));
  EXPECT_EQ(cd.F, P("u0_0^2+u0_1^2"));
  ASSERT_EQ(cd.companions.size(), 1u);
  EXPECT_EQ(cd.companions[0], P("u0_1*u0_0@1 - u0_0*u0_1@1"));
  EXPECT_EQ(cd.h, 0);
  EXPECT_EQ(cd.d, 0);
  EXPECT_EQ(cd.degree, 2);
  EXPECT_EQ(cd.certification, Certification::UnivariateOracle);
}

TEST(Chow, ContrastPairSharesF) {
  const ChowData a = chow_form(Chain({P("y1^2+1"), P("y1@1-y1")}, kY1));
  const ChowData b = chow_form(Chain({P("y1^2+1"), P("y1@1+y1")}, kY1));
  EXPECT_EQ(a.F, b.F);
  ASSERT_EQ(b.companions.size(), 1u);
  EXPECT_EQ(b.companions[0], P("u0_1*u0_0@1 + u0_0*u0_1@1"));
  EXPECT_NE(a.companions, b.companions);
}

TEST(Chow, CoordinateHyperplane) {
  const ChowData cd = chow_form(Chain({P("y1")}, kY1));
  EXPECT_EQ(cd.F, P("u0_0"));
  EXPECT_TRUE(cd.companions.empty());
  EXPECT_EQ(difference_degree(cd), 1);
  const OrderProfile prof = verify_order_profile(cd);
  ASSERT_EQ(prof.absent.size(), 1u);
  EXPECT_EQ(prof.absent[0], u(0, 1));
  const RecoveredPoint pt = recover_point(cd);
  EXPECT_TRUE(pt.numerators[0].is_zero());
  EXPECT_TRUE(pt.verified);
  const Chain ext = extend_charset(cd);
  ASSERT_EQ(ext.size(), 2u);
}

TEST(Chow, AffineLine) {
  const ChowData cd = chow_form(Chain({}, kY1));
  EXPECT_EQ(cd.d, 1);
  EXPECT_TRUE(unit_equal(cd.F, P("u0_0*u1_1 - u0_1*u1_0")));
  EXPECT_EQ(verify_block_symmetry(cd, 0, 1), -1);
  EXPECT_EQ(verify_block_symmetry(cd, 1, 1), 1);
  const EulerReport e = euler_check(cd);
  ASSERT_EQ(e.per_block.size(), 2u);
  EXPECT_EQ(e.per_block[0], std::vector<int>{1});
  EXPECT_EQ(e.per_block[1], std::vector<int>{1});
  EXPECT_TRUE(recover_point(cd).verified);
  EXPECT_NO_THROW(extend_charset(cd));
}

TEST(Chow, TwoVariableExample) {
  const ChowData cd = chow_form(n2_chain());
  EXPECT_TRUE(unit_equal(cd.F, n2_oracle()));
  EXPECT_EQ(cd.h, 1);
  EXPECT_EQ(cd.F.size(), 7u);
  const OrderProfile prof = verify_order_profile(cd);
  EXPECT_EQ(prof.h, 1);
  EXPECT_TRUE(prof.absent.empty());
  const RecoveredPoint pt = recover_point(cd);
  EXPECT_EQ(pt.residues.size(), 3u);
  EXPECT_TRUE(pt.verified);
  // Companion: the 3x3 determinant of the hyperplane and two transforms
  // with y2 sign-flipped in the middle row.
  ASSERT_GE(cd.companions.size(), 1u);
  const Poly det = determinant({{P("u0_0"), P("u0_1"), P("u0_2")},
                                {P("u0_0@1"), P("u0_1@1"), P("-u0_2@1")},
                                {P("u0_0@2"), P("u0_1@2"), P("u0_2@2")}});
  bool found = false;
  for (const auto& c : cd.companions) found = found || unit_equal(c, det);
  EXPECT_TRUE(found);
  const Chain ext = extend_charset(cd);
  EXPECT_EQ(ext.size(), cd.companions.size() + 3);
}

TEST(Chow, UnivariateClosedForm) {
  const ChowData a = chow_form_univariate(P("y1^2+1"), {P("y1@1-y1")});
  EXPECT_EQ(a.F, P("u0_0^2+u0_1^2"));
  EXPECT_EQ(a.companions[0], P("u0_1*u0_0@1 - u0_0*u0_1@1"));
  const ChowData b = chow_form_univariate(P("y1"), {});
  EXPECT_EQ(b.F, P("u0_0"));
  EXPECT_THROW(chow_form_univariate(P("3"), {}), InvalidArgument);
  EXPECT_THROW(chow_form_univariate(P("y1*y2"), {}), InvalidArgument);
}

TEST(Chow, ClosedFormOverRationalFunctions) {
  // y1 - x has a single solution; the companion set is empty.
  const ChowData cd = chow_form(Chain({P("y1 - x")}, kY1));
  EXPECT_EQ(cd.F, P("u0_0 + x*u0_1"));
  EXPECT_EQ(cd.certification, Certification::UnivariateOracle);
}

TEST(Chow, TransformScalesVariety) {
  const ChowData cd = chow_form(Chain({P("y1^2+1"), P("y1@1-y1")}, kY1));
  const ChowData t = transform_chow(cd, {{Coeff(2)}});
  EXPECT_EQ(t.F, P("u0_0^2+4*u0_1^2"));
  const ChowData direct = chow_form(Chain({P("y1^2+4"), P("y1@1-y1")}, kY1));
  EXPECT_EQ(t.F, direct.F);
  EXPECT_EQ(t.companions, direct.companions);
  EXPECT_EQ(t.source.elements(), direct.source.elements());
  const ChowData id = transform_chow(cd, {{Coeff(1)}});
  EXPECT_EQ(id.F, cd.F);
  EXPECT_THROW(transform_chow(cd, {{Coeff(0)}}), InvalidArgument);
}

TEST(Chow, InvertMatrix) {
  const auto inv = invert_matrix({{Coeff(2), Coeff(1)}, {Coeff(1), Coeff(1)}});
  EXPECT_EQ(inv[0][0], Coeff(1));
  EXPECT_EQ(inv[0][1], Coeff(-1));
  EXPECT_EQ(inv[1][0], Coeff(-1));
  EXPECT_EQ(inv[1][1], Coeff(2));
  EXPECT_THROW(invert_matrix({{Coeff(1), Coeff(2)}, {Coeff(2), Coeff(4)}}), InvalidArgument);
}

TEST(Chow, VanishingOverQuadraticExtension) {
  const ChowData cd = chow_form(Chain({P("y1^2+1"), P("y1@1-y1")}, kY1));
  const UPoly m({Rational(1), Rational(0), Rational(1)});  // a^2 + 1
  const AlgebraicNumber one(m, Rational(1)), i = AlgebraicNumber::generator(m);
  std::map<Var, AlgebraicNumber> at{{u(0, 0), one}, {u(0, 1), i}, {u(0, 0, 1), one}, {u(0, 1, 1), i}};
  EXPECT_TRUE(vanishing_test(cd, at));
  std::map<Var, AlgebraicNumber> zero{{u(0, 0), AlgebraicNumber(m, Rational(0))},
                                      {u(0, 1), AlgebraicNumber(m, Rational(0))},
                                      {u(0, 0, 1), AlgebraicNumber(m, Rational(0))},
                                      {u(0, 1, 1), AlgebraicNumber(m, Rational(0))}};
  EXPECT_TRUE(vanishing_test(cd, zero));
  at.insert_or_assign(u(0, 1), AlgebraicNumber(m, Rational(3)));
  EXPECT_FALSE(vanishing_test(cd, at));
  at.erase(u(0, 1, 1));
  at.insert_or_assign(u(0, 1), i);
  EXPECT_THROW(vanishing_test(cd, at), InvalidArgument);
}

TEST(Chow, ChecksRejectBrokenData) {
  ChowData cd = chow_form(Chain({}, kY1));
  ChowData bad = cd;
  bad.F = P("u0_0*u1_1 + u0_1^2*u1_0");
  EXPECT_THROW(euler_check(bad), InvariantViolation);
  EXPECT_THROW(verify_block_symmetry(bad, 0, 1), InvariantViolation);
  bad.F = P("u0_0*u1_1@1 - u0_1*u1_0");
  EXPECT_THROW(verify_order_profile(bad), InvariantViolation);
  bad = chow_form(Chain({P("y1")}, kY1));
  bad.F = P("u0_1");
  EXPECT_THROW(verify_order_profile(bad), InvariantViolation);
  EXPECT_THROW(verify_block_symmetry(cd, 0, 2), InvalidArgument);
}

TEST(Chow, VerifyAllPasses) {
  for (const auto& cd : {chow_form(Chain({P("y1^2+1"), P("y1@1+y1")}, kY1)), chow_form(Chain({}, kY1))}) {
    for (const auto& r : verify_all(cd)) EXPECT_TRUE(r.ok) << r.name << ": " << r.detail;
  }
}

TEST(Chow, ElementaryInputChecks) {
  EXPECT_THROW(chow_form(Chain({P("y1")}, Ranking::orderly({Var::y(2)}))), InvalidArgument);
  EXPECT_THROW(chow_form(Chain({P("1")}, kY1)), Error);
}

TEST(Chow, TwoVariableTransformMatchesRecomputation) {
  const ChowData cd = chow_form(n2_chain());
  const std::vector<std::vector<Coeff>> A{{Coeff(2), Coeff(1)}, {Coeff(1), Coeff(1)}};
  const ChowData t = transform_chow(cd, A);
  const ChowData direct = chow_form(t.source);
  EXPECT_EQ(t.F, direct.F);
  EXPECT_EQ(t.h, cd.h);
  EXPECT_EQ(t.degree, cd.degree);
  for (const auto& r : verify_all(t)) EXPECT_TRUE(r.ok) << r.name << ": " << r.detail;
}

TEST(Chow, TwoVariableVerifyAll) {
  const ChowData cd = chow_form(n2_chain());
  for (const auto& r : verify_all(cd)) EXPECT_TRUE(r.ok) << r.name << ": " << r.detail;
}

TEST(Chow, ResultantRouteCertifies) {
  ChowOptions opts;
  opts.cross_check_resultants = true;
  const ChowData cd = chow_form(n2_chain(), opts);
  EXPECT_EQ(cd.certification, Certification::RoutesAgree);
  const ChowData line = chow_form(Chain({}, kY1), opts);
  EXPECT_EQ(line.certification, Certification::RoutesAgree);
}
