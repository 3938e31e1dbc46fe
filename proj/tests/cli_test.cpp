#include <gtest/gtest.h>

#include "diffchow/cli.hpp"
#include "diffchow/errors.hpp"
#include "diffchow/parser.hpp"
#include "test_util.hpp"

using namespace diffchow;
using namespace diffchow::testing;

namespace {

const char* kN1 =
    "# comment line\n"
    "field Qx\n"
    "vars y1\n"
    "ranking orderly\n"
    "poly g = y1^2 + 1   # trailing comment\n"
    "poly y1@1 - y1\n";

const char* kN2 =
    "field Q\n"
    "vars y1 y2\n"
    "poly y1@1 - y1\n"
    "poly y2^2 - y1\n"
    "poly y2@1 + y2\n";

CommandOptions cmd(const std::string& name) {
  CommandOptions o;
  o.command = name;
  return o;
}

}  // namespace

TEST(Cli, ParsesSession) {
  const Session s = parse_session(kN1);
  EXPECT_EQ(s.field, Field::Qx);
  ASSERT_EQ(s.vars.size(), 1u);
  ASSERT_EQ(s.polys.size(), 2u);
  EXPECT_EQ(s.polys[0], P("y1^2+1"));
  EXPECT_EQ(s.poly_names[0], "g");
  EXPECT_EQ(s.poly_names[1], "");
  EXPECT_EQ(s.ranking.kind(), Ranking::Kind::Orderly);
}

TEST(Cli, LetBindingsAndOverrides) {
  const Session s = parse_session(
      "vars y1 y2\nparams u0_0\nlet a = y1 + u0_0\npoly b = a^2 - y2\nranking elim:y2<y1\n", Field::Qx,
      std::string("orderly:y2<y1"));
  EXPECT_EQ(s.field, Field::Qx);
  ASSERT_EQ(s.polys.size(), 1u);
  EXPECT_EQ(s.polys[0], P("(y1 + u0_0)^2 - y2"));
  EXPECT_EQ(s.ranking.kind(), Ranking::Kind::Orderly);
  EXPECT_TRUE(s.ranking.less(Var::y(2), Var::y(1)));
  EXPECT_EQ(s.names.count("a"), 1u);
}

TEST(Cli, SessionErrors) {
  EXPECT_THROW(parse_session("vars y1\nbogus 1\n"), UsageError);
  EXPECT_THROW(parse_session("poly y1\n"), ParseError);  // undeclared
  EXPECT_THROW(parse_session("vars y1\npoly y1 + x\n"), ParseError);  // x needs Qx
  EXPECT_THROW(parse_session("vars y1\npoly u0_1*y1\n"), ParseError);  // undeclared parameter
  EXPECT_THROW(parse_session("vars y1 y1\n"), UsageError);
  EXPECT_THROW(parse_session("vars u0_0\n"), UsageError);
  EXPECT_THROW(parse_session("field R\nvars y1\n"), UsageError);
  EXPECT_THROW(parse_session("vars y1 y2\nranking elim:y1\n"), UsageError);
  EXPECT_THROW(parse_session("vars y1\nlet y2 = y1\n"), UsageError);
  EXPECT_THROW(parse_session("field Q\n"), UsageError);
  try {
    parse_session("vars y1\npoly y1 + * 2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    EXPECT_EQ(e.column(), 11u);
  }
}

TEST(Cli, MatrixParsing) {
  const auto A = parse_matrix("1,1;0,1", Field::Q);
  ASSERT_EQ(A.size(), 2u);
  EXPECT_EQ(A[0][1], Coeff(1));
  EXPECT_EQ(A[1][0], Coeff(0));
  EXPECT_EQ(parse_matrix("x+1", Field::Qx)[0][0], Coeff::x() + Coeff(1));
  EXPECT_THROW(parse_matrix("1,2;3", Field::Q), UsageError);
  EXPECT_THROW(parse_matrix("y1", Field::Q), UsageError);
  EXPECT_THROW(parse_matrix("x", Field::Q), UsageError);
}

TEST(Cli, DimensionPolynomialFormat) {
  EXPECT_EQ(format_dimension_polynomial(0, 1), "1");
  EXPECT_EQ(format_dimension_polynomial(1, 0), "t+1");
  EXPECT_EQ(format_dimension_polynomial(2, 3), "2*t+5");
}

TEST(Cli, DimordOnTwoVariableExample) {
  const Outcome o = run_command(parse_session(kN2), cmd("dimord"));
  ASSERT_EQ(o.text.size(), 1u);
  EXPECT_EQ(o.text[0], "dim=0 order=1 phi(t)=1");
}

TEST(Cli, ChowPrintsFormAndCompanion) {
  const Outcome o = run_command(parse_session(kN1), cmd("chow"));
  EXPECT_EQ(o.exit_code, 0);
  ASSERT_GE(o.text.size(), 2u);
  EXPECT_EQ(parse_poly(o.text[0].substr(4)), P("u0_0^2+u0_1^2"));
  EXPECT_EQ(parse_poly(o.text[1].substr(o.text[1].find('=') + 2)), P("u0_1*u0_0@1 - u0_0*u0_1@1"));
}

TEST(Cli, ReduceWithNamedTarget) {
  const Session s = parse_session("vars y1 y2\nranking elim:y2<y1\npoly y2@1^2 - 2\npoly y1 - y2@1\npoly f = y1@3^2\n");
  CommandOptions o = cmd("reduce");
  o.target = "f";
  const Outcome out = run_command(s, o);
  EXPECT_EQ(out.text[0], "remainder = 2");
  o.target = "y1^2 + 1";
  const Session chain_only = parse_session("vars y1 y2\nranking elim:y2<y1\npoly y2@1^2 - 2\npoly y1 - y2@1\n");
  EXPECT_EQ(run_command(chain_only, o).text[0], "remainder = 3");
  EXPECT_EQ(run_safely("vars y1 y2\nranking elim:y2<y1\npoly y2@1^2 - 2\npoly y1 - y2@1\npoly y1@3^2\n", {}, {}, o).exit_code, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_safely(kN1, {}, {}, cmd("chow")).exit_code, 0);
  EXPECT_EQ(run_safely("vars y1\npoly y1-1\npoly y1-2\n", {}, {}, cmd("charset")).exit_code, 1);
  EXPECT_EQ(run_safely("vars y1\npoly y1 +\n", {}, {}, cmd("charset")).exit_code, 2);
  EXPECT_EQ(run_safely(kN1, {}, {}, cmd("frobnicate")).exit_code, 2);
  EXPECT_EQ(run_safely(kN1, {}, {}, cmd("reduce")).exit_code, 2);
  CommandOptions t = cmd("transform");
  t.matrix = "0";
  EXPECT_EQ(run_safely(kN1, {}, {}, t).exit_code, 2);
  const Outcome bad = run_safely("vars y1\npoly y1-1\npoly y1-2\n", {}, {}, cmd("dimord"));
  EXPECT_EQ(bad.error_kind, "inconsistent-system");
  EXPECT_NE(render_text(bad).find("error (inconsistent-system)"), std::string::npos);
}

TEST(Cli, MachineFormatIsDeterministic) {
  const Outcome a = run_safely(kN2, {}, {}, cmd("verify"));
  const Outcome b = run_safely(kN2, {}, {}, cmd("verify"));
  EXPECT_EQ(a.exit_code, 0);
  const std::string m = render_machine(a);
  EXPECT_EQ(m, render_machine(b));
  EXPECT_EQ(m.rfind("diffchow: 1\ncommand: \"verify\"\nstatus: \"ok\"\nexit_code: 0\nresult:\n", 0), 0u);
  EXPECT_NE(m.find("    - name: \"euler\"\n      ok: true\n"), std::string::npos);
  const std::string err = render_machine(run_safely("vars y1\npoly y1-1\npoly y1-2\n", {}, {}, cmd("dimord")));
  EXPECT_NE(err.find("error:\n  kind: \"inconsistent-system\"\n"), std::string::npos);
}

TEST(Cli, EmittedPolynomialsRoundTrip) {
  for (const char* c : {"chow", "charset", "verify"}) {
    const Outcome o = run_command(parse_session(kN2), cmd(c));
    for (const auto& line : o.text) {
      const auto eq = line.find(" = ");
      if (eq == std::string::npos) continue;
      const std::string text = line.substr(eq + 3);
      EXPECT_EQ(parse_poly(text).to_string(), text);
    }
  }
}

TEST(Cli, IntersectGeneric) {
  CommandOptions o = cmd("intersect-generic");
  o.order = 2;
  o.degree = 1;
  o.seed = 11;
  const Outcome out = run_command(parse_session("vars y1\n"), o);
  EXPECT_NE(out.text[1].find("exact: dim=0 order=2"), std::string::npos);
  EXPECT_NE(out.text[1].find("match"), std::string::npos);
  EXPECT_NE(out.text[2].find("screen: dim=0 order=2"), std::string::npos);
  o.hyperplane = true;
  const Outcome hyp = run_command(parse_session(kN1), o);
  EXPECT_NE(hyp.text[1].find("exact: unit ideal"), std::string::npos);
}
