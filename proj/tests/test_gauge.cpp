#include <gtest/gtest.h>

#include "qhopf/error.hpp"
#include "qhopf/gauge.hpp"

using namespace qhopf;

namespace {

AlgebraPtr alg(Variant v = Variant::Standard) {
  AlgebraConfig c;
  c.variant = v;
  return Algebra::create(c);
}

void expect_ok(const Report& r) {
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << r.suite << ": " << c.name << " -> " << residual_summary(c, 800) << " " << c.detail;
}

}  // namespace

TEST(Gauge, FieldStrength) { expect_ok(gauge::check_field_strength(alg())); }
TEST(Gauge, Instanton) { expect_ok(gauge::check_instanton(alg())); }
TEST(Gauge, AntiInstanton) { expect_ok(gauge::check_antiinstanton(alg())); }
TEST(Gauge, Singular) { expect_ok(gauge::check_singular(alg())); }
TEST(Gauge, Phi) { expect_ok(gauge::check_phi(alg())); }
TEST(Gauge, Projector) { expect_ok(gauge::check_projector(alg())); }
TEST(Gauge, BraidedShift) { expect_ok(gauge::check_braided_shift(2)); }
TEST(Gauge, MultiHarmonic) {
  expect_ok(gauge::check_multi_harmonic(1));
  expect_ok(gauge::check_multi_harmonic(2));
  EXPECT_THROW(gauge::check_multi_harmonic(3), Error);
}
TEST(Gauge, U2ReportsStarInconsistency) {
  Report r = gauge::check_u2();
  for (const auto& c : r.checks) {
    if (c.name == "copy-wise star is antimultiplicative" || c.name == "U2^dag U2 = 1") {
      EXPECT_FALSE(c.pass);
      if (c.name != "U2^dag U2 = 1") EXPECT_NE(c.detail.find("StarInconsistency"), std::string::npos);
    } else {
      EXPECT_TRUE(c.pass) << c.name;
    }
  }
}

class GaugeHat : public ::testing::TestWithParam<int> {};

TEST_P(GaugeHat, Suites) {
  auto A = alg(Variant::Hat);
  switch (GetParam()) {
    case 0: expect_ok(gauge::check_instanton(A)); break;
    case 1: expect_ok(gauge::check_antiinstanton(A)); break;
    case 2: expect_ok(gauge::check_singular(A)); break;
    case 3: expect_ok(gauge::check_phi(A)); break;
    case 4: expect_ok(gauge::check_projector(A)); break;
    default: expect_ok(gauge::check_braided_shift(2, Variant::Hat)); break;
  }
}

INSTANTIATE_TEST_SUITE_P(All, GaugeHat, ::testing::Range(0, 6));

TEST(Gauge, ClosedFormNeedsRho) {
  auto A = alg();
  EXPECT_TRUE(gauge::instanton_F_closed(A, RadialFn(0)).is_zero());
  EXPECT_FALSE(gauge::field_strength(gauge::instanton_A(A).A) == gauge::antiinstanton_F_closed(A));
}

TEST(Gauge, NotInvertible) {
  auto A = alg();
  MatForm m = MatForm::gens(A, letter::kXi);
  EXPECT_THROW(gauge::inverse(m + MatForm::identity(A)), Error);
}

TEST(Gauge, MultiPhiConstruction) {
  EXPECT_EQ(gauge::multi_phi(2).str(), "1 + rho[1]^2 * |z1|^-2 + rho[2]^2 * |z2|^-2");
  EXPECT_EQ(gauge::multi_phi(5).copies.size(), 5u);
}
