#include <gtest/gtest.h>

#include "qhopf/groupcalc.hpp"

using namespace qhopf;

namespace {

AlgebraPtr alg(Variant v) {
  AlgebraConfig c;
  c.variant = v;
  return Algebra::create(c);
}

void expect_ok(const Report& r) {
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << r.suite << ": " << c.name << " -> " << residual_summary(c, 600) << c.detail;
}

class GroupCalc : public ::testing::TestWithParam<Variant> {};

}  // namespace

TEST_P(GroupCalc, TRelations) { expect_ok(sun::check_T_relations(alg(GetParam()))); }
TEST_P(GroupCalc, TOmega) { expect_ok(sun::check_Txi(alg(GetParam()))); }
TEST_P(GroupCalc, MaurerCartan) { expect_ok(sun::check_maurer_cartan(alg(GetParam()))); }
TEST_P(GroupCalc, ThetaTrace) { expect_ok(sun::check_theta_trace(alg(GetParam()))); }
TEST_P(GroupCalc, VDuality) {
  Report r = sun::check_v_duality(alg(GetParam()));
  for (const auto& c : r.checks) {
    // the printed q^{-1} normalization is off by q^{+-4}; it still agrees at q=1
    if (c.name == "v = theta form" || c.name == "v' = theta form") {
      EXPECT_FALSE(c.pass) << c.name;
      for (const auto& e : c.residuals) EXPECT_TRUE(e.at_q1().is_zero());
    } else {
      EXPECT_TRUE(c.pass) << c.name << " -> " << residual_summary(c, 600);
    }
  }
}
TEST_P(GroupCalc, Sphere) { expect_ok(sun::sphere_map(alg(GetParam()))); }

INSTANTIATE_TEST_SUITE_P(Variants, GroupCalc, ::testing::Values(Variant::Standard, Variant::Hat));

TEST(GroupCalcQ1, TAndOmegaCommuteClassically) {
  auto A = alg(Variant::Standard);
  MatForm t = sun::T(A), w = sun::omega(A);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Element c = t(i / 2, i % 2) * w(j / 2, j % 2) - w(j / 2, j % 2) * t(i / 2, i % 2);
      EXPECT_TRUE(c.at_q1().is_zero());
    }
}

TEST(GroupCalcQ1, WrongCoefficientIsDetected) {
  auto A = alg(Variant::Standard);
  MatForm t = sun::T(A);
  MatForm lhs = forms::d(t) * t.bar();
  MatForm wrong = sun::omega(A) + RadialFn(QRat::q(-1) - QRat(1)) * (forms::theta(A) * MatForm::identity(A));
  EXPECT_FALSE(lhs == wrong);
}
