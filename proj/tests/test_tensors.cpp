#include <gtest/gtest.h>

#include "qhopf/error.hpp"
#include "qhopf/tensor.hpp"

using namespace qhopf;
using namespace qhopf::tensors;

namespace {

QRat q() { return QRat::q(); }

Mat eval_at1(const Mat& m) {
  Mat r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = QRat(m(i, j).eval(1));
  return r;
}

// Independent rational-number contraction used to solve for k at a fixed q.
mpq_class k_at(const mpq_class& qv) {
  // eps_{ab}, eps^{ab}
  mpq_class e[2][2] = {{0, 1}, {-qv, 0}};
  mpq_class eu[2][2] = {{0, -1 / qv}, {1, 0}};
  mpq_class pa[4][4], ps[4][4];
  mpq_class two = qv + 1 / qv;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          pa[2 * a + b][2 * c + d] = -eu[a][b] * e[c][d] / two;
          ps[2 * a + b][2 * c + d] = (a == c && b == d ? 1 : 0) - pa[2 * a + b][2 * c + d];
        }
  // Pair-basis selfdual minus antiselfdual projector and P_A.
  mpq_class B[4] = {qv, 1, -qv, 1};
  auto P = [&](mpq_class (&x)[4][4], mpq_class (&y)[4][4], int i, int j, int h, int k) -> mpq_class {
    int al = i / 2, alp = i % 2, be = j / 2, bep = j % 2, ga = h / 2, gap = h % 2, de = k / 2, dep = k % 2;
    return x[2 * al + be][2 * ga + de] * y[2 * alp + bep][2 * gap + dep] * B[i] * B[j] / (B[h] * B[k]);
  };
  mpq_class g[4][4];
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) g[a][b] = e[a / 2][b / 2] * e[a % 2][b % 2] / (B[a] * B[b]);
  // Table entries (k entries zero) in positions.
  struct T { int a, b, c, d; mpq_class v; };
  auto pw = [&](int n) -> mpq_class {
    mpq_class r = 1, b = n < 0 ? mpq_class(1 / qv) : qv;
    for (int i = 0; i < std::abs(n); ++i) r *= b;
    return r;
  };
  int P0 = 0, P1 = 1, P2 = 2, P3 = 3;  // labels -2, -1, 1, 2
  std::vector<T> tab = {
      {P0, P1, P2, P3, pw(-2)}, {P0, P2, P1, P3, -pw(-2)}, {P0, P1, P3, P2, -pw(-1)}, {P0, P2, P3, P1, pw(-1)},
      {P0, P3, P1, P2, 1}, {P0, P3, P2, P1, -1}, {P1, P0, P2, P3, -pw(-1)}, {P1, P2, P0, P3, 1},
      {P1, P0, P3, P2, 1}, {P1, P3, P0, P2, -1}, {P1, P3, P2, P0, qv}, {P1, P2, P3, P0, -1},
      {P2, P1, P0, P3, -1}, {P2, P0, P1, P3, pw(-1)}, {P2, P1, P3, P0, 1}, {P2, P3, P1, P0, -qv},
      {P2, P3, P0, P1, 1}, {P2, P0, P3, P1, -1}, {P3, P0, P1, P2, -1}, {P3, P1, P0, P2, qv},
      {P3, P2, P0, P1, -qv}, {P3, P0, P2, P1, 1}, {P3, P1, P2, P0, -pw(2)}, {P3, P2, P1, P0, pw(2)}};
  mpq_class E0[4][4][4][4] = {}, E1[4][4][4][4] = {};
  for (const auto& t : tab) E0[t.a][t.b][t.c][t.d] = t.v;
  E1[P1][P2][P1][P2] = 1;
  E1[P2][P1][P2][P1] = -1;
  // Residual (M0 + k M1 - (Pa - Pa')) P_A = 0, solved from the first informative entry.
  bool have = false;
  mpq_class kval;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
          mpq_class c0 = 0, c1 = 0;
          for (int h = 0; h < 4; ++h)
            for (int k = 0; k < 4; ++k) {
              mpq_class m0 = 0, m1 = 0;
              for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) {
                  m0 += g[k][a] * g[h][b] * E0[a][b][i][j];
                  m1 += g[k][a] * g[h][b] * E1[a][b][i][j];
                }
              mpq_class pA = P(ps, pa, h, k, m, n) + P(pa, ps, h, k, m, n);
              mpq_class d = P(ps, pa, i, j, h, k) - P(pa, ps, i, j, h, k);
              c0 += (m0 / two - d) * pA;
              c1 += m1 / two * pA;
            }
          if (c1 != 0) {
            mpq_class kv = -c0 / c1;
            if (have) EXPECT_EQ(kv, kval);
            kval = kv;
            have = true;
          } else {
            EXPECT_EQ(c0, 0);
          }
        }
  EXPECT_TRUE(have);
  return kval;
}

}  // namespace

TEST(TensorsTest, EpsilonEntries) {
  Mat e = eps();
  EXPECT_EQ(e(0, 1), QRat(1));
  EXPECT_EQ(e(1, 0), -q());
  EXPECT_EQ(e * eps_up(), Mat::identity(2));
  EXPECT_EQ(e, QRat(-1) * q() * eps_up());
}

TEST(TensorsTest, RhatSymmetricAndHecke) {
  Mat r = rhat();
  EXPECT_EQ(r.transpose(), r);
  Mat hecke = r * r - (q() - q().inv()) * r - Mat::identity(4);
  EXPECT_TRUE(hecke.is_zero());
  EXPECT_EQ(r * rhat_inv(), Mat::identity(4));
  // q = 1: Rhat squares to one.
  Mat r1 = eval_at1(r);
  EXPECT_EQ(r1 * r1, Mat::identity(4));
}

TEST(TensorsTest, RhatBraidEquation) {
  Mat r = rhat(), i2 = Mat::identity(2);
  Mat a = r.kron(i2), b = i2.kron(r);
  EXPECT_EQ(a * b * a, b * a * b);
}

TEST(TensorsTest, ProjectorExpression) {
  Mat pa = proj_a(), ps = proj_s();
  EXPECT_EQ(pa * pa, pa);
  EXPECT_EQ(ps * ps, ps);
  EXPECT_TRUE((ps * pa).is_zero());
  EXPECT_EQ(q() * ps - q().inv() * pa, rhat());
  EXPECT_EQ(pa.rank(), 1);
  EXPECT_EQ(ps.rank(), 3);
}

TEST(TensorsTest, Rhat4BraidEquation) {
  Mat r = rhat4(), i4 = Mat::identity(4);
  Mat a = r.kron(i4), b = i4.kron(r);
  Mat res = a * b * a - b * a * b;
  EXPECT_EQ(res.rows(), 64);
  EXPECT_TRUE(res.is_zero());
}

TEST(TensorsTest, SpectralDecomposition) {
  const Projectors& p = projectors4();
  Mat r = rhat4();
  EXPECT_EQ(r * p.s, q() * p.s);
  EXPECT_EQ(r * p.A, QRat(-1) * q().inv() * p.A);
  EXPECT_EQ(r * p.t, q().pow(-3) * p.t);
  EXPECT_EQ(q() * p.s - q().inv() * p.A + q().pow(-3) * p.t, r);
}

TEST(TensorsTest, ProjectorRanksOrthogonalityCompleteness) {
  const Projectors& p = projectors4();
  EXPECT_EQ(p.s.rank(), 9);
  EXPECT_EQ(p.a.rank(), 3);
  EXPECT_EQ(p.ap.rank(), 3);
  EXPECT_EQ(p.A.rank(), 6);
  EXPECT_EQ(p.t.rank(), 1);
  std::vector<const Mat*> all = {&p.s, &p.a, &p.ap, &p.t};
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      Mat prod = *all[i] * *all[j];
      if (i == j) EXPECT_EQ(prod, *all[i]);
      else EXPECT_TRUE(prod.is_zero());
    }
  EXPECT_EQ(p.s + p.a + p.ap + p.t, Mat::identity(16));
}

TEST(TensorsTest, Rhat4ClassicalLimitIsFlip) {
  Mat r1 = eval_at1(rhat4());
  Mat flip(16, 16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) flip(4 * i + j, 4 * j + i) = QRat(1);
  EXPECT_EQ(r1, flip);
}

TEST(TensorsTest, MetricTraceAndTraceProjector) {
  Mat g = metric(), gi = metric_inv();
  QRat tr;
  for (int s = 0; s < 4; ++s)
    for (int m = 0; m < 4; ++m) tr += gi(s, m) * g(s, m);
  QRat two = q() + q().inv();
  EXPECT_EQ(tr, two * two);
  Mat pt(16, 16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) pt(4 * i + j, 4 * k + l) = gi(i, j) * g(k, l) / (two * two);
  EXPECT_EQ(pt, projectors4().t);
  // q = 1: antidiagonal flat metric.
  Mat g1 = eval_at1(g);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) EXPECT_EQ(g1(a, b), QRat(a + b == 3 ? 1 : 0));
}

TEST(TensorsTest, Eps4TableEntries) {
  std::vector<QRat> e = eps4(QRat(0));
  EXPECT_EQ(eps4_listed(), 24);
  int nz = 0;
  for (const auto& x : e)
    if (!x.is_zero()) ++nz;
  EXPECT_EQ(nz, 24);
  // labels (-2,-1,1,2) -> positions 0..3
  EXPECT_EQ(e[((0 * 4 + 1) * 4 + 2) * 4 + 3], q().pow(-2));
  EXPECT_EQ(e[((3 * 4 + 1) * 4 + 2) * 4 + 0], QRat(-1) * q().pow(2));
}

TEST(TensorsTest, Eps4ClassicalLimitIsAntisymmetric) {
  std::vector<QRat> e = eps4(QRat(0));
  int perm[4] = {0, 1, 2, 3};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          mpq_class v = e[((a * 4 + b) * 4 + c) * 4 + d].eval(1);
          int idx[4] = {a, b, c, d};
          bool distinct = a != b && a != c && a != d && b != c && b != d && c != d;
          if (!distinct) {
            EXPECT_EQ(v, 0);
            continue;
          }
          // sign of the permutation relative to the reference entry (0,1,2,3)
          int inv = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (idx[i] > idx[j]) ++inv;
          (void)perm;
          EXPECT_EQ(v, inv % 2 ? -1 : 1) << a << b << c << d;
        }
}

TEST(TensorsTest, ResolveKMatchesIndependentSolve) {
  KResolution r = resolve_k();
  EXPECT_TRUE(r.unique);
  EXPECT_EQ(r.k.eval(2), k_at(2));
  EXPECT_EQ(r.k.eval(mpq_class(7, 5)), k_at(mpq_class(7, 5)));
  EXPECT_EQ(r.k.eval(1), 0);
}

TEST(TensorsTest, ResolvedKHoldsEntrywise) {
  KResolution r = resolve_k();
  EXPECT_EQ(r.raw_mismatches, 0);
  const Projectors& p = projectors4();
  EXPECT_EQ(hodge_from_eps4(r.k), p.a - p.ap);
}

TEST(TensorsTest, Eps4IsQAntisymmetric) {
  KResolution r = resolve_k();
  EXPECT_TRUE(eps4_antisymmetric(eps4(r.k)));
  // The value q at position (1,-1,2,-2) breaks q-antisymmetry.
  std::vector<QRat> bad = eps4(r.k);
  bad[((2 * 4 + 1) * 4 + 3) * 4 + 0] = q();
  EXPECT_FALSE(eps4_antisymmetric(bad));
}

TEST(TensorsTest, EpsRhatIdentityBothSigns) {
  Mat e = eps();
  for (int sgn : {1, -1}) {
    Mat rp = sgn > 0 ? rhat() : rhat_inv();
    Mat rm = sgn > 0 ? rhat_inv() : rhat();
    QRat f = q().pow(sgn);
    for (int al = 0; al < 2; ++al)
      for (int be = 0; be < 2; ++be)
        for (int ga = 0; ga < 2; ++ga)
          for (int mu = 0; mu < 2; ++mu) {
            QRat lhs, rhs;
            for (int la = 0; la < 2; ++la) {
              lhs += e(al, la) * rp(2 * la + mu, 2 * be + ga);
              rhs += f * rm(2 * mu + la, 2 * al + be) * e(la, ga);
            }
            EXPECT_EQ(lhs, rhs);
          }
  }
}

TEST(TensorsTest, QMatrixDiagonal) {
  Mat Q = qmat();
  EXPECT_EQ(Q, Mat::diag({q().inv(), q()}));
}
