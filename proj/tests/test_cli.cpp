#include <gtest/gtest.h>

#include <fstream>

#include "qhopf/error.hpp"
#include "qhopf/parser.hpp"
#include "qhopf/verify.hpp"

using namespace qhopf;
using namespace qhopf::cli;

namespace {

std::string nf(const std::string& s, Variant v = Variant::Standard) {
  auto e = parse(s);
  AlgebraConfig c;
  c.variant = v;
  return evaluate(*e, algebra_for(*e, c)).str();
}

mpq_class ev(const std::string& s, const mpq_class& q, std::optional<mpq_class> u = {}, std::optional<mpq_class> p = {}) {
  auto e = parse(s);
  return eval_rational(evaluate(*e, algebra_for(*e, AlgebraConfig{})), q, u, p);
}

}  // namespace

TEST(Parser, Grammar) {
  EXPECT_EQ(print(*parse("x[1,1]*x[2,2] - q*x[1,2]*x[2,1]")), "((x[1,1] * x[2,2]) - ((q * x[1,2]) * x[2,1]))");
  EXPECT_EQ(print(*parse("d(T)*Tbar")), "(d(T) * Tbar)");
  EXPECT_EQ(print(*parse("a*b*c")), "((a * b) * c)");
  EXPECT_EQ(print(*parse("-q^-2*U + 1")), "(((-(q^-2)) * U) + 1)");
  EXPECT_EQ(print(*parse("2 - -3")), "(2 - (-3))");
  EXPECT_THROW(parse("q^3^1"), SyntaxError);
}

TEST(Parser, Errors) {
  try {
    parse("x[1,1]**");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.col(), 8);
  }
  try {
    parse("x[1,1] +\n  (q");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.col(), 5);
  }
  EXPECT_THROW(parse("x[1,1] $ 2"), SyntaxError);
  EXPECT_THROW(nf("foo"), Error);
  EXPECT_THROW(nf("x[3,1]"), Error);
  EXPECT_THROW(nf("x[1,1]^-1"), Error);
  EXPECT_THROW(nf("1/x[1,1]"), Error);
}

TEST(Parser, NormalForms) {
  EXPECT_EQ(nf("x[2,1]*x[1,1]"), "q^-1*x[1,1]*x[2,1]");
  EXPECT_EQ(nf("theta*theta"), "0");
  EXPECT_EQ(nf("U*Uinv"), "1");
  EXPECT_EQ(nf("x[1,1]*x[2,2] - q*x[1,2]*x[2,1]"), "U");
  EXPECT_EQ(nf("d(x[1,2])"), "xi[1,2]");
  EXPECT_EQ(nf("act(pd[1,1], x[1,1])"), "1");
  EXPECT_EQ(nf("absx*absx"), "U");
  EXPECT_EQ(nf("rho*rho"), "p");
  EXPECT_EQ(nf("tr(star(T)*T)"), "2");
  EXPECT_EQ(nf("star(T)*T - I"), "[[\"0\",\"0\"],[\"0\",\"0\"]]");
  EXPECT_EQ(nf("act(box, Uinv)"), "0");
  EXPECT_EQ(nf("d(theta)", Variant::Hat), "0");
  EXPECT_EQ(nf("rho[2]*rho[1]"), "q^-2*rho[1]*rho[2]");
  EXPECT_EQ(nf("fs(A(rho)) - F(rho)"), "[[\"0\",\"0\"],[\"0\",\"0\"]]");
  EXPECT_EQ(nf("hodge(F(rho)) - F(rho)"), "[[\"0\",\"0\"],[\"0\",\"0\"]]");
  EXPECT_EQ(nf("tr(P(rho))"), "2");
}

TEST(Parser, PrintParseRoundTrip) {
  AlgebraConfig c;
  auto A = Algebra::create(c);
  std::vector<std::string> exprs = {"d(absx)", "box*Uinv", "pd[1,1]*x[1,1]", "(1+q)^-1*s", "s[1]*s*rho", "Lam^-2*x[1,2]",
                                    "(q^-2*U + p)^-1*sqrt2", "theta", "xi[2,1]*x[1,2]*Uinv - 3*q^-4"};
  for (const auto& s : exprs) {
    std::string once = nf(s);
    EXPECT_EQ(nf(once), once) << s;
  }
  AlgebraConfig b;
  b.level = Level::Braided;
  b.copies = 2;
  auto B = Algebra::create(b);
  Element y = B->y(2, 1, 2) * B->x(1, 1) * B->rho2(1);
  auto e = parse(y.str());
  EXPECT_EQ(evaluate(*e, B).e, y);
  EXPECT_EQ(max_copy(*parse("y[2,1,1] + rho[1]")), 2);
}

TEST(Parser, Eval) {
  EXPECT_EQ(ev("q + q^-1", 2), mpq_class(5, 2));
  EXPECT_EQ(ev("(q-1)*(q-q^-2)", 1), 0);
  EXPECT_EQ(ev("U*p*((U + p)*(q^2*U + p))^-1", 2, mpq_class(1), mpq_class(1)), mpq_class(1, 10));
  EXPECT_EQ(ev("absx", 3, mpq_class(4)), 2);
  EXPECT_THROW(ev("x[1,1]*x[2,2]*x[1,2]", 2), Error);
  EXPECT_THROW(ev("U", 2), Error);
  EXPECT_THROW(ev("rho", 2, mpq_class(1)), Error);
  try {
    ev("(U + p)^-1", 2, mpq_class(1), mpq_class(-1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PoleAtPoint);
  }
  EXPECT_EQ(parse_rational("7/5"), mpq_class(7, 5));
  EXPECT_THROW(parse_rational("7/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
}

TEST(Verify, TensorsAndDeterminism) {
  VerifyOptions o;
  o.suites = {"tensors", "gauge.inst"};
  o.q_numeric = mpq_class(7, 5);
  o.timing = false;
  o.jobs = 2;
  auto r = verify(o);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_GE(r.json["suites"][0]["checks"].size(), 8u);
  for (const auto& s : r.json["suites"])
    for (const auto& c : s["checks"])
      if (!c["numeric"].is_null()) EXPECT_TRUE(c["numeric"]["zero"].get<bool>()) << c["name"];
  o.jobs = 1;
  EXPECT_EQ(verify(o).json.dump(), r.json.dump());
  o.suites = {"nosuch"};
  EXPECT_THROW(verify(o), Error);
}

TEST(Verify, ErrorsAndFailuresSetExitCode) {
  VerifyOptions o;
  o.timing = false;
  o.suites = {"gauge.multiphi"};
  o.suite.n = 3;
  auto r = verify(o);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.json["suites"][0]["status"], "error");
  o.suites = {"sun.v"};
  EXPECT_EQ(verify(o).exit_code, 1);
}

TEST(Verify, Config) {
  VerifyOptions o;
  std::string path = ::testing::TempDir() + "qhopf_cfg.toml";
  {
    std::ofstream f(path);
    f << "variant = \"hat\"\nn = 1\nsuites = [\"sun.T\"]\n\n[order]\nxi = [11, 21, 12, 22]\n";
  }
  load_config(path, o);
  EXPECT_EQ(o.suite.base.variant, Variant::Hat);
  EXPECT_EQ(o.suite.n, 1);
  EXPECT_EQ(o.suites, std::vector<std::string>{"sun.T"});
  EXPECT_EQ(o.suite.base.xi_order, (std::array<int, 4>{0, 2, 1, 3}));
  std::string jpath = ::testing::TempDir() + "qhopf_cfg.json";
  {
    std::ofstream f(jpath);
    f << R"({"order": {"pd": ["22", "21", "12", "11"]}, "max_overlap": 2})";
  }
  load_config(jpath, o);
  EXPECT_EQ(o.suite.base.pd_order, (std::array<int, 4>{3, 2, 1, 0}));
  EXPECT_EQ(o.suite.max_overlap, 2);
  EXPECT_THROW(apply_order(o.suite.base, "xi=11,11,12,22"), Error);
  EXPECT_THROW(apply_order(o.suite.base, "zz=11,12,21,22"), Error);
  EXPECT_THROW(load_config(::testing::TempDir() + "missing.json", o), Error);
}
