#include <gtest/gtest.h>

#include <random>

#include "qhopf/error.hpp"
#include "qhopf/forms.hpp"

using namespace qhopf;

namespace {

AlgebraPtr alg(Variant v = Variant::Standard, Level l = Level::Localized, int n = 0) {
  AlgebraConfig c;
  c.variant = v;
  c.level = l;
  c.copies = n;
  return Algebra::create(c);
}

// Random y-free element of form degree <= 2 with radial coefficients.
Element random_form(const AlgebraPtr& A, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 3), len(0, 2), deg(0, 2), cf(0, 4);
  Element e = A->zero();
  int p = deg(rng);
  for (int t = 0; t < 2; ++t) {
    RadialFn c;
    switch (cf(rng)) {
      case 0: c = RadialFn::u(-1); break;
      case 1: c = RadialFn::sqrt_u(); break;
      case 2: c = (RadialFn::u() + RadialFn::p()).inv(); break;
      case 3: c = RadialFn(QRat::q(pick(rng))); break;
      default: c = RadialFn::u(2) + RadialFn(3); break;
    }
    Element m = A->one();
    for (int k = 0; k < p; ++k) m = m * A->gen(letter::kXi, 0, pick(rng));
    for (int k = len(rng); k > 0; --k) m = m * A->gen(letter::kX, 0, pick(rng));
    e += m.times(c);
  }
  return e;
}

}  // namespace

TEST(Forms, BasicDerivatives) {
  auto A = alg();
  EXPECT_EQ(forms::d(A->x(1, 2)), A->xi(1, 2));
  EXPECT_EQ(forms::d(A->coeff(RadialFn::u())), RadialFn(QRat(1) - QRat::q(-2)) * A->coeff(RadialFn::u()) * forms::theta(A));
  EXPECT_TRUE(forms::d(forms::d(A->x(1, 1) * A->x(2, 1))).is_zero());
  EXPECT_EQ(forms::d_via_theta(A->x(1, 1)), A->xi(1, 1));
  Element ui = A->coeff(RadialFn::u(-1));
  EXPECT_EQ(forms::d_via_theta(ui), forms::d(ui));
  // Leibniz on U * U^{-1}
  Element U = A->coeff(RadialFn::u());
  EXPECT_TRUE((forms::d(U) * ui + U * forms::d(ui)).is_zero());
}

TEST(Forms, ThetaProperties) {
  for (Variant v : {Variant::Standard, Variant::Hat}) {
    auto A = alg(v);
    Element th = forms::theta(A);
    EXPECT_TRUE((th * th).is_zero());
    EXPECT_TRUE(forms::d(th).is_zero());
    Element ax = A->coeff(RadialFn::sqrt_u()), axi = A->coeff(RadialFn::sqrt_u().inv());
    RadialFn q1(QRat::q(v == Variant::Standard ? 1 : -1));
    EXPECT_EQ(ax * th, q1 * (th * ax));
    EXPECT_EQ(axi * th, q1.inv() * (th * axi));
  }
  auto A = alg();
  EXPECT_EQ(forms::theta(A), forms::theta_contracted(A));
}

TEST(Forms, DMatchesThetaCommutator) {
  for (Variant v : {Variant::Standard, Variant::Hat}) {
    auto A = alg(v);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
      Element e = random_form(A, rng);
      Element dd = forms::d(e);
      EXPECT_EQ(dd, forms::d_via_theta(e)) << e.str();
      EXPECT_TRUE(forms::d(dd).is_zero()) << e.str();
    }
  }
}

TEST(Forms, SectorViolation) {
  auto A = alg(Variant::Standard, Level::Braided, 1);
  EXPECT_THROW(forms::d_via_theta(A->y(1, 1, 1)), Error);
  EXPECT_TRUE(forms::d(A->y(1, 1, 1) * A->rho2(1)).is_zero());
  EXPECT_EQ(forms::d(A->x(1, 1) * A->y(1, 2, 2)), A->xi(1, 1) * A->y(1, 2, 2));
}

TEST(Forms, Hodge) {
  auto A = alg();
  Element w = A->xi(1, 1) * A->xi(1, 2);
  EXPECT_EQ(forms::hodge2(forms::hodge2(w)), w);
  EXPECT_THROW(forms::hodge2(A->xi(1, 1)), Error);
  MatForm f = forms::build_f(A), fp = forms::build_fprime(A);
  EXPECT_EQ(f.nonzero_entries(), 4);
  EXPECT_EQ(fp.nonzero_entries(), 4);
  EXPECT_EQ(forms::hodge2(f), f);
  EXPECT_EQ(forms::hodge2(fp), -fp);
  auto [sd, asd] = forms::decompose2(f(0, 0));
  EXPECT_EQ(sd, f(0, 0));
  EXPECT_TRUE(asd.is_zero());
  auto [s2, a2] = forms::decompose2(w);
  EXPECT_EQ(s2 + a2, w);
  EXPECT_EQ(forms::hodge2(s2), s2);
  EXPECT_EQ(forms::hodge2(a2), -a2);
  // graded Leibniz puts the sign on the potential: d a = -f
  EXPECT_EQ(forms::d(forms::build_a(A)), -f);
  // A-bilinearity with radial coefficients.
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int i = 0; i < 100; ++i) {
    Element v = A->gen(letter::kXi, 0, pick(rng)) * A->gen(letter::kXi, 0, pick(rng)) * A->gen(letter::kX, 0, pick(rng));
    Element fl = A->coeff(RadialFn::sqrt_u() + RadialFn::u(-1)), fr = A->coeff((RadialFn::u() + RadialFn::p()).inv());
    EXPECT_EQ(forms::hodge2(fl * v * fr), fl * forms::hodge2(v) * fr);
    EXPECT_EQ(forms::hodge2(forms::hodge2(v)), v);
  }
}

TEST(Forms, Xblu) {
  auto A = alg();
  EXPECT_TRUE(forms::check_xblu(A).ok());
  EXPECT_FALSE(forms::check_xblu(A, true).ok());
  EXPECT_TRUE(forms::xixi_contraction(A).is_zero());
  auto H = alg(Variant::Hat);
  EXPECT_TRUE(forms::check_xblu(H).ok());
  EXPECT_FALSE(forms::check_xblu(H, true).ok());
}

TEST(Forms, ClassicalA) {
  auto A = alg();
  MatForm a = forms::build_a(A).at_q1();
  // symmetrized xi eps x^T at q = 1
  MatForm m = (MatForm::gens(A, letter::kXi) * MatForm::constant(A, tensors::eps()) * MatForm::gens(A, letter::kX).transpose()).at_q1();
  MatForm sym = MatForm::zero(A);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) sym(i, j) = RadialFn(QRat(mpq_class(1, 2))) * (m(i, j) + m(j, i));
  EXPECT_EQ(a, sym);
}
