#include <gtest/gtest.h>

#include <random>

#include "qhopf/error.hpp"
#include "qhopf/radial.hpp"

using namespace qhopf;

namespace {

RatFn U(int e = 1) { return RatFn::u(e); }
RatFn P(int e = 1) { return RatFn::p(e); }
RatFn Q(int e = 1) { return RatFn(QRat::q(e)); }

// Direct evaluation of small rational expressions used as an oracle.
mpq_class pw(mpq_class b, int e) {
  mpq_class r = 1;
  if (e < 0) {
    b = 1 / b;
    e = -e;
  }
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

RatFn random_ratfn(std::mt19937& g) {
  std::uniform_int_distribution<int> c(-3, 3), e(0, 2), k(-1, 1), pick(0, 5);
  RatFn f;
  for (int i = 0; i < 3; ++i) f += RatFn(c(g)) * Q(c(g)) * U(e(g)) * P(e(g));
  switch (pick(g)) {
    case 0: f *= RatFn::L(k(g), -1); break;
    case 1: f *= RatFn::M(k(g), -1); break;
    case 2: f *= U(-1); break;
    case 3: f *= RatFn(QRat::qint(2).inv()); break;
    default: break;
  }
  return f;
}

}  // namespace

TEST(LPolyTest, GcdAndExactDivision) {
  LPoly q = LPoly::q();
  LPoly a = (q - 1) * (q + 2), b = (q - 1) * (q + 3);
  EXPECT_EQ(gcd(a, b), q - 1);
  EXPECT_EQ(divexact(a, q - 1), q + 2);
  EXPECT_EQ(gcd(LPoly(6) * q, LPoly(4)), LPoly(2));
  LPoly quo;
  EXPECT_FALSE(try_divexact(q + 1, q - 1, quo));
}

TEST(QRatTest, Normalization) {
  QRat q = QRat::q();
  EXPECT_EQ((q * q - 1) / (q - 1), q + 1);
  EXPECT_EQ(q / (q * q), QRat::q(-1));
  EXPECT_EQ(QRat::qint(2), q + q.inv());
  EXPECT_TRUE((QRat::qint(2).inv() * QRat::qint(2)).is_one());
  EXPECT_EQ(QRat::qint(3), q * q + 1 + q.pow(-2));
  EXPECT_THROW(QRat(0).inv(), Error);
  EXPECT_EQ((q - q.inv()).eval(2), mpq_class(3, 2));
}

TEST(QRatTest, BarSwapsQ) {
  QRat q = QRat::q();
  QRat x = (q + 2) / (q * q + 3);
  EXPECT_EQ(x.bar().eval(3), x.eval(mpq_class(1, 3)));
}

TEST(RatFnTest, SpecializeMatchesDirectEvaluation) {
  RatFn f = U() * P() * RatFn::L(0, -1) * RatFn::L(1, -1);
  // u p / ((u + p)(q^2 u + p)) at q = 2, u = 1, p = 1
  mpq_class direct = mpq_class(1) / ((1 + 1) * (4 * 1 + 1));
  EXPECT_EQ(f.eval(2, 1, 1), direct);
  EXPECT_EQ(f.eval(2, 1, 1), mpq_class(1, 10));
}

TEST(RatFnTest, SigmaShiftsFactorFamilies) {
  RatFn up = U() + P();
  EXPECT_EQ(up.sigma(1), Q(2) * U() + P());
  RatFn inv = RatFn::L(0, -1);
  EXPECT_EQ(inv.sigma(1), RatFn::L(1, -1));
  EXPECT_EQ(RatFn::M(0, -1).sigma(-1), RatFn::M(-1, -1));
  EXPECT_EQ(U(-2).sigma(1), Q(-4) * U(-2));
}

TEST(RatFnTest, CancellationAndInverse) {
  RatFn l1 = Q(2) * U() + P();
  EXPECT_TRUE((l1 * RatFn::L(1, -1)).is_one());
  EXPECT_EQ(l1.inv(), RatFn::L(1, -1));
  RatFn m = RatFn(1) + RatFn(2) * U();
  EXPECT_EQ(m.inv(), RatFn::M(0, -1));
  RatFn g = (U() + Q(2) * P()) * U() * RatFn(QRat::qint(2));
  EXPECT_TRUE((g * g.inv()).is_one());
  EXPECT_THROW((U() - P()).inv(), Error);
  EXPECT_THROW(RatFn().inv(), Error);
}

TEST(RatFnTest, RandomFieldAxiomsAgainstPointEvaluation) {
  std::mt19937 g(7);
  const mpq_class qv(5, 3), uv(2, 7), pv(3, 11);
  for (int it = 0; it < 200; ++it) {
    RatFn a = random_ratfn(g), b = random_ratfn(g);
    EXPECT_EQ((a + b).eval(qv, uv, pv), a.eval(qv, uv, pv) + b.eval(qv, uv, pv));
    EXPECT_EQ((a * b).eval(qv, uv, pv), a.eval(qv, uv, pv) * b.eval(qv, uv, pv));
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) {
      RatFn bi;
      try {
        bi = b.inv();
      } catch (const Error&) {
        continue;
      }
      EXPECT_EQ(a * b * bi, a);
    }
  }
}

TEST(RatFnTest, PoleDetection) {
  RatFn f = RatFn::L(0, -1);
  try {
    f.eval(1, -1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PoleAtPoint);
  }
}

TEST(RatFnTest, AtQ1) {
  RatFn f = (Q(2) * U() + P()) * RatFn::L(2, -1);
  EXPECT_TRUE(f.at_q1().is_one());
  RatFn h = RatFn(QRat(1) / (QRat::q() - 1));
  EXPECT_THROW(h.at_q1(), Error);
}

TEST(RadialTest, RadicalsSquareAndTwist) {
  RadialFn s = RadialFn::s();
  RadialFn s2 = s * s;
  EXPECT_EQ(s2, RadialFn(U() * RatFn::L(0, -1)));
  EXPECT_EQ(s.sigma(1), RadialFn::s(1));
  EXPECT_EQ(RadialFn::sqrt_u().sigma(1), RadialFn::q() * RadialFn::sqrt_u());
  EXPECT_EQ(RadialFn::sqrt_u() * RadialFn::sqrt_u(), RadialFn::u());
  EXPECT_EQ(RadialFn::rho().sigma(3), RadialFn::rho());
}

TEST(RadialTest, InverseByConjugation) {
  RadialFn a = RadialFn(1) + RadialFn::s();
  EXPECT_TRUE((a * a.inv()).is_one());
  RadialFn c = RadialFn::sqrt2() * RadialFn::s() + RadialFn::sqrt2() * RadialFn::s(1);
  EXPECT_TRUE((c * c.inv()).is_one());
  // Norm 2 - p lies outside the admissible denominator families.
  EXPECT_THROW((RadialFn::sqrt2() + RadialFn::rho()).inv(), Error);
  RadialFn b = RadialFn::sqrt_u() * RadialFn::u();
  EXPECT_EQ(b.inv() * b, RadialFn(1));
}

TEST(RadialTest, SpecializeRadicals) {
  // s = sqrt(u / (u + p)) at u = 9, p = 16 is 3/5.
  EXPECT_EQ(RadialFn::s().specialize(2, 9, 16), mpq_class(3, 5));
  try {
    RadialFn::s().specialize(1, 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IrrationalSquareRoot);
  }
}

TEST(RadialTest, DeltaOfPowers) {
  RadialFn u2 = RadialFn::u(2);
  // (q^4 u^2 - u^2) / ((q^2 - 1) u) = (q^2 + 1) u
  EXPECT_EQ(u2.delta(1), RadialFn(RatFn(QRat::q(2) + 1) * U()));
  EXPECT_TRUE(RadialFn(QRat::q(3)).delta(1).is_zero());
}
