#include <gtest/gtest.h>

#include <set>
#include <thread>

#include "qhopf/algebra.hpp"
#include "qhopf/confluence.hpp"
#include "qhopf/error.hpp"

using namespace qhopf;

namespace {

AlgebraPtr loc(Variant v = Variant::Standard) {
  AlgebraConfig c;
  c.variant = v;
  return Algebra::create(c);
}

RadialFn qp(int e) { return RadialFn(QRat::q(e)); }

}  // namespace

TEST(NcAlg, QuadraticRanks) {
  auto A = loc();
  EXPECT_EQ(A->xi_normal_pairs(), 6);
  EXPECT_EQ(A->pd_normal_pairs(), 10);
  auto H = loc(Variant::Hat);
  EXPECT_EQ(H->xi_normal_pairs(), 6);
  EXPECT_EQ(H->pd_normal_pairs(), 10);
}

TEST(NcAlg, QuaternionRelations) {
  auto A = loc();
  Element al = A->x(1, 1), ga = A->x(2, 1), als = A->x(2, 2), gas = RadialFn(QRat::q(-1)) * A->x(1, 2);
  gas = -gas;  // x12 = -q gamma*
  EXPECT_EQ(al * ga, qp(1) * (ga * al));
  EXPECT_EQ(al * als - als * al, RadialFn(QRat(1) - QRat::q(2)) * (ga * gas));
  Element det = A->x(1, 1) * A->x(2, 2) - qp(1) * (A->x(1, 2) * A->x(2, 1));
  EXPECT_EQ(det, A->coeff(RadialFn::u()));
  EXPECT_EQ(A->coeff(RadialFn::u()) * A->xi(1, 1), qp(2) * (A->xi(1, 1) * A->coeff(RadialFn::u())));
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) EXPECT_TRUE((det * A->x(a, b) - A->x(a, b) * det).is_zero());
}

TEST(NcAlg, ActAndLocalization) {
  auto A = loc();
  EXPECT_EQ(A->act(A->pd(1, 1), A->x(1, 1)), A->one());
  EXPECT_TRUE(A->act(A->pd(1, 1), A->one()).is_zero());
  EXPECT_EQ(A->coeff(RadialFn::u()) * A->coeff(RadialFn::u(-1)), A->one());
  EXPECT_TRUE((A->pd(1, 1) * A->coeff(RadialFn::u()) * A->coeff(RadialFn::u(-1)) - A->pd(1, 1)).is_zero());
  EXPECT_EQ(A->lam(1) * A->x(1, 2), qp(-1) * (A->x(1, 2) * A->lam(1)));
}

TEST(NcAlg, BoxOfInverseRadius) {
  for (Variant v : {Variant::Standard, Variant::Hat}) {
    auto A = loc(v);
    Mat gi = tensors::metric_inv();
    // Box = d_k g^{hk} d_h in the vector basis; the B scaling cancels.
    Element box = A->zero();
    Mat b = tensors::bmat();
    for (int h = 0; h < 4; ++h)
      for (int k = 0; k < 4; ++k) {
        QRat g = gi(h, k) / (b(h, h) * b(k, k));
        if (g.is_zero()) continue;
        box += RadialFn(g) * (A->gen(letter::kPd, 0, k) * A->gen(letter::kPd, 0, h));
      }
    EXPECT_TRUE(A->act(box, A->coeff(RadialFn::u(-1))).is_zero()) << A->act(box, A->coeff(RadialFn::u(-1))).str();
    EXPECT_FALSE(A->act(box, A->coeff(RadialFn::u(-2))).is_zero());
  }
}

namespace {

AlgebraPtr make(Level l, int n = 0, Variant v = Variant::Standard) {
  AlgebraConfig c;
  c.level = l;
  c.copies = n;
  c.variant = v;
  return Algebra::create(c);
}

}  // namespace

TEST(NcAlg, ConfluenceCore) {
  auto rep = check_confluence(make(Level::Core), 3);
  EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures[0]);
  EXPECT_GT(rep.words_checked, 100);
}

TEST(NcAlg, ConfluenceLocalized) {
  for (Variant v : {Variant::Standard, Variant::Hat}) {
    auto rep = check_confluence(make(Level::Localized, 0, v), 3);
    EXPECT_TRUE(rep.ok()) << rep.failures.size() << " " << (rep.failures.empty() ? "" : rep.failures[0]);
  }
}

TEST(NcAlg, ConfluenceBraided) {
  for (Variant v : {Variant::Standard, Variant::Hat}) {
    auto rep = check_confluence(make(Level::Braided, 2, v), 3);
    EXPECT_TRUE(rep.ok()) << rep.failures.size() << " " << (rep.failures.empty() ? "" : rep.failures[0]);
  }
}

TEST(NcAlg, PerturbedRuleIsDetected) {
  AlgebraConfig c;
  c.perturb = true;
  c.det_elimination = false;
  auto rep = check_confluence(Algebra::create(c), 3);
  EXPECT_FALSE(rep.ok());
}

TEST(NcAlg, StrategyIndependence) {
  std::mt19937_64 rng(7);
  for (auto A : {make(Level::Localized), make(Level::Braided, 2)}) {
    for (int i = 0; i < 200; ++i) {
      RawWord w = random_word(A, 4, rng);
      EXPECT_EQ(engine_product(A, w), reduce_random(A, w, rng)) << raw_str(*A, w);
    }
  }
}

TEST(NcAlg, Star) {
  auto A = make(Level::Localized);
  EXPECT_EQ(A->star(A->x(1, 1)), A->x(2, 2));
  EXPECT_EQ(A->star(A->x(1, 2)), qp(1) * -A->x(2, 1));
  Element det = A->x(1, 1) * A->x(2, 2) - qp(1) * (A->x(1, 2) * A->x(2, 1));
  EXPECT_EQ(A->star(det), det);
  EXPECT_THROW(A->star(A->xi(1, 1)), Error);
  EXPECT_THROW(A->star(A->pd(1, 1)), Error);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> pick(0, 3), len(0, 3);
  auto rnd = [&] {
    Element e = A->zero();
    for (int t = 0; t < 2; ++t) {
      Element m = A->coeff(t ? RadialFn::u() : RadialFn(QRat::q(pick(rng))));
      for (int k = len(rng); k > 0; --k) m = m * A->gen(letter::kX, 0, pick(rng));
      e += m;
    }
    return e;
  };
  for (int i = 0; i < 100; ++i) {
    Element a = rnd(), b = rnd();
    EXPECT_EQ(A->star(A->star(a)), a);
    EXPECT_EQ(A->star(a * b), A->star(b) * A->star(a));
  }
}

TEST(NcAlg, XBarX) {
  auto A = make(Level::Localized);
  Mat e = tensors::eps(), eu = tensors::eps_up();
  // xbar = eps^{-1} x^T eps
  Element X[2][2], Xb[2][2];
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) X[a][b] = A->x(a + 1, b + 1);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Xb[a][b] = A->zero();
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          QRat f = eu(a, c) * e(d, b);
          if (!f.is_zero()) Xb[a][b] += RadialFn(f) * X[d][c];
        }
    }
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Element l = X[a][0] * Xb[0][b] + X[a][1] * Xb[1][b];
      Element r = Xb[a][0] * X[0][b] + Xb[a][1] * X[1][b];
      Element want = a == b ? A->coeff(RadialFn::u()) : A->zero();
      EXPECT_EQ(l, want);
      EXPECT_EQ(r, want);
    }
}

TEST(NcAlg, BraidedRelations) {
  auto A = make(Level::Braided, 2);
  EXPECT_EQ(A->rho2(1) * A->rho2(2), qp(2) * (A->rho2(2) * A->rho2(1)));
  EXPECT_TRUE((A->rho2(1) * A->x(1, 1) - A->x(1, 1) * A->rho2(1)).is_zero());
  EXPECT_EQ(A->rho2(1) * A->y(2, 1, 2), qp(-2) * (A->y(2, 1, 2) * A->rho2(1)));
  EXPECT_EQ(A->rho2(2) * A->y(1, 1, 2), A->y(1, 1, 2) * A->rho2(2));
  EXPECT_EQ(A->rho2(1) * A->xi(2, 1), A->xi(2, 1) * A->rho2(1));
  EXPECT_EQ(A->pd(2, 1) * A->rho2(2), A->rho2(2) * A->pd(2, 1));
  // P_A (x - y1)(x - y1) = 0
  std::vector<Element> z;
  for (int p = 0; p < 4; ++p) z.push_back(A->gen(letter::kX, 0, p) - A->gen(letter::kY, 1, p));
  const Mat& PA = tensors::projectors_pair().A;
  for (int r = 0; r < 16; ++r) {
    Element s = A->zero();
    for (int h = 0; h < 4; ++h)
      for (int k = 0; k < 4; ++k)
        if (!PA(r, 4 * h + k).is_zero()) s += RadialFn(PA(r, 4 * h + k)) * (z[h] * z[k]);
    EXPECT_TRUE(s.is_zero()) << s.str();
  }
  EXPECT_THROW(A->lam(1), Error);
  EXPECT_THROW(A->y(3, 1, 1), Error);
}

TEST(NcAlg, ClassicalLimit) {
  auto A = make(Level::Localized);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Element a = A->gen(letter::kX, 0, i), b = A->gen(letter::kX, 0, j);
      EXPECT_TRUE((a * b - b * a).at_q1().is_zero());
      Element xa = A->gen(letter::kXi, 0, i), xb = A->gen(letter::kXi, 0, j);
      EXPECT_TRUE((xa * xb + xb * xa).at_q1().is_zero());
      Element d = A->gen(letter::kPd, 0, i);
      Element comm = d * b - b * d;
      EXPECT_EQ(comm.at_q1(), i == j ? A->one() : A->zero());
    }
}

TEST(NcAlg, PbwCount) {
  auto A = make(Level::Core);
  std::vector<Element> layer{A->one()};
  for (int d = 1; d <= 5; ++d) {
    std::vector<Element> next;
    std::set<Word> words;
    std::set<std::pair<Word, int>> basis;
    for (const auto& e : layer)
      for (int p = 0; p < 4; ++p) next.push_back(e * A->gen(letter::kX, 0, p));
    for (const auto& e : next)
      for (const auto& [k, c] : e.terms()) {
        if (count_kind(k.L, letter::kX) == d) words.insert(k.L);
        for (const auto& [rs, f] : c.terms()) {
          ASSERT_TRUE(rs.empty());
          ASSERT_TRUE(f.is_polynomial());
        }
        basis.insert({k.L, d - static_cast<int>(k.L.size())});
      }
    EXPECT_EQ(static_cast<int>(words.size()), (d + 2) * (d + 1) - (d + 1));
    EXPECT_EQ(static_cast<int>(basis.size()), (d + 3) * (d + 2) * (d + 1) / 6);
    layer = std::move(next);
  }
}

TEST(NcAlg, ConcurrentDeterminism) {
  auto A = make(Level::Localized);
  std::mt19937_64 rng(11);
  std::vector<RawWord> ws;
  for (int i = 0; i < 64; ++i) ws.push_back(random_word(A, 4, rng));
  std::vector<std::string> seq, par(ws.size());
  auto B = make(Level::Localized);
  for (const auto& w : ws) seq.push_back(engine_product(B, w).str());
  std::vector<std::thread> th;
  for (int t = 0; t < 4; ++t)
    th.emplace_back([&, t] {
      for (std::size_t i = static_cast<std::size_t>(t); i < ws.size(); i += 4) par[i] = engine_product(A, ws[i]).str();
    });
  for (auto& t : th) t.join();
  EXPECT_EQ(seq, par);
}

TEST(NcAlg, PartialRelationsVectorForm) {
  auto A = make(Level::Localized);
  const Mat& PA = tensors::projectors4().A;
  Mat b = tensors::bmat();
  for (int r = 0; r < 16; ++r) {
    Element s = A->zero();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        QRat c = PA(r, 4 * i + j) / (b(i, i) * b(j, j));
        if (!c.is_zero()) s += RadialFn(c) * (A->gen(letter::kPd, 0, j) * A->gen(letter::kPd, 0, i));
      }
    EXPECT_TRUE(s.is_zero()) << r << ": " << s.str();
  }
}

TEST(NcAlg, AscendingXOrderIsNotConfluentWithDetElimination) {
  AlgebraConfig c;
  c.level = Level::Core;
  c.x_order = {0, 1, 2, 3};
  bool failed = false;
  try {
    failed = !check_confluence(Algebra::create(c), 3).ok();
  } catch (const Error&) {
    failed = true;
  }
  EXPECT_TRUE(failed);
  c.det_elimination = false;
  EXPECT_TRUE(check_confluence(Algebra::create(c), 3).ok());
}
