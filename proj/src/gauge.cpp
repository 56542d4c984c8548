#include "qhopf/gauge.hpp"

#include "qhopf/error.hpp"

namespace qhopf {

EMat EMat::zero(const AlgebraPtr& a, int r, int c) {
  EMat m;
  m.alg = a;
  m.rows = r;
  m.cols = c;
  m.e.assign(static_cast<std::size_t>(r * c), a->zero());
  return m;
}

EMat EMat::identity(const AlgebraPtr& a, int n) {
  EMat m = zero(a, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = a->one();
  return m;
}

EMat operator*(const EMat& a, const EMat& b) {
  if (a.cols != b.rows) fail(ErrorKind::WrongDegree, "matrix shapes do not match");
  EMat r = EMat::zero(a.alg, a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < b.cols; ++j)
      for (int k = 0; k < a.cols; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        r(i, j) += a(i, k) * b(k, j);
      }
  return r;
}

EMat operator-(const EMat& a, const EMat& b) {
  EMat r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] -= b.e[i];
  return r;
}

EMat EMat::dagger() const {
  EMat r = zero(alg, cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r(j, i) = alg->star((*this)(i, j));
  return r;
}

namespace gauge {

namespace {

bool is_hat(const AlgebraPtr& a) { return a->config().variant == Variant::Hat; }
RadialFn qc(int e) { return RadialFn(QRat::q(e)); }
// +1 standard, -1 hat: exponents flip under q -> q^{-1}
int sgn(const AlgebraPtr& a) { return is_hat(a) ? -1 : 1; }

Report start(const char* suite, const AlgebraPtr& a) {
  Report r;
  r.suite = suite;
  r.fingerprint = a->config().fingerprint();
  return r;
}

// (1 + rho2 / |x|^2)^{-1}
RadialFn regular_factor(const RadialFn& rho2) { return (RadialFn(1) + rho2 * RadialFn::u(-1)).inv(); }

MatForm xi_mat(const AlgebraPtr& a) { return MatForm::gens(a, letter::kXi); }

// Classical form of the regular-gauge potentials at q=1.
MatForm classical_A(const AlgebraPtr& a, bool anti) {
  MatForm x = MatForm::gens(a, letter::kX), xi = xi_mat(a);
  MatForm w = (anti ? xi.bar() * x : xi * x.bar()) * a->coeff(RadialFn::u(-1));
  MatForm re = RadialFn(RatFn::u(-1) * RatFn(QRat(mpq_class(1, 2)))) * (forms::d(a->coeff(RadialFn::u())) * MatForm::identity(a));
  return -((w - re) * a->coeff(regular_factor(RadialFn::p())));
}

Report self_dual_report(Report r, const AlgebraPtr& a, const MatForm& A, const MatForm& Fc, bool anti) {
  MatForm F = field_strength(A);
  r.add(expect_equal("F = dA + AA equals the closed form", F, Fc));
  MatForm hF = forms::hodge2(F);
  r.add(expect_equal(anti ? "*F = -F" : "*F = F", hF, anti ? -F : F));
  std::vector<Element> wrong;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      auto [sd, asd] = forms::decompose2(F(i, j));
      wrong.push_back(anti ? sd : asd);
    }
  r.add(expect_zero(anti ? "self-dual part of F vanishes" : "antiself-dual part of F vanishes", wrong));
  MatForm bianchi = forms::d(F) + A * F - F * A;
  r.add(expect_zero("Bianchi dF + AF - FA = 0", bianchi));
  MatForm t = sun::T(a);
  MatForm Ft = field_strength(gauge_transform(A, t));
  MatForm conj = inverse(t) * F * t;
  r.add(expect_equal("F^T = T^-1 F T", Ft, conj));
  std::vector<Element> wrong_t;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      auto [sd, asd] = forms::decompose2(conj(i, j));
      wrong_t.push_back(anti ? sd : asd);
    }
  r.add(expect_zero("duality of T^-1 F T", wrong_t));
  return r;
}

}  // namespace

MatForm field_strength(const MatForm& a) { return forms::d(a) + a * a; }

MatForm inverse(const MatForm& v) {
  MatForm vb = v.bar();
  MatForm p = vb * v, p2 = v * vb;
  Element c = p(0, 0);
  if (!c.is_coefficient() || c.is_zero() || p != c * MatForm::identity(v.alg) || p2 != p)
    fail(ErrorKind::NotInvertible, "Vbar V is not an invertible coefficient multiple of I");
  return v.alg->coeff(c.coefficient().inv()) * vb;
}

MatForm gauge_transform(const MatForm& a, const MatForm& v) { return inverse(v) * (a * v + forms::d(v)); }

GaugePotential instanton_A(const AlgebraPtr& a, const RadialFn& rho2) {
  MatForm t = sun::T(a);
  return {-(forms::d(t) * t.bar() * a->coeff(regular_factor(rho2))), Label::Regular, rho2};
}

namespace {

MatForm closed_F(const AlgebraPtr& a, const RadialFn& rho2, bool anti) {
  int s = sgn(a);
  MatForm xi = xi_mat(a);
  RadialFn U = RadialFn::u();
  RadialFn c = qc(-s) * (U + rho2).inv() * rho2 * (qc(2 * s) * U + rho2).inv();
  return (anti ? xi.bar() * xi : xi * xi.bar()) * a->coeff(c);
}

}  // namespace

MatForm instanton_F_closed(const AlgebraPtr& a, const RadialFn& rho2) { return closed_F(a, rho2, false); }

GaugePotential antiinstanton_A(const AlgebraPtr& a, const RadialFn& rho2) {
  MatForm t = sun::T(a);
  return {-(forms::d(t.bar()) * t * a->coeff(regular_factor(rho2))), Label::Regular, rho2};
}

MatForm antiinstanton_F_closed(const AlgebraPtr& a, const RadialFn& rho2) { return closed_F(a, rho2, true); }

GaugePotential singular_gauge(const AlgebraPtr& a, const RadialFn& rho2) {
  MatForm t = sun::T(a);
  RadialFn f = (RadialFn(1) + RadialFn::u() * rho2.inv()).inv();
  return {t.bar() * forms::d(t) * a->coeff(f), Label::Singular, rho2};
}

MatForm singular_gauge_alt(const AlgebraPtr& a, const RadialFn& rho2) {
  MatForm t = sun::T(a);
  RadialFn f = (RadialFn(1) + RadialFn::u() * (qc(2 * sgn(a)) * rho2).inv()).inv();
  return -(a->coeff(f) * (forms::d(t.bar()) * t));
}

MatForm singular_gauge_explicit(const AlgebraPtr& a, const RadialFn& rho2) {
  int s = sgn(a);
  RadialFn f = (RadialFn(1) + RadialFn::u() * (qc(2 * s) * rho2).inv()).inv();
  MatForm x = MatForm::gens(a, letter::kX), xi = xi_mat(a);
  Mat e = tensors::eps();
  Element con = a->zero();
  for (int al = 0; al < 2; ++al)
    for (int alp = 0; alp < 2; ++alp)
      for (int be = 0; be < 2; ++be)
        for (int bep = 0; bep < 2; ++bep) {
          QRat c = e(al, be) * e(alp, bep);
          if (!c.is_zero()) con += RadialFn(c) * (xi(al, alp) * x(be, bep));
        }
  Element ui = a->coeff(RadialFn::u(-1));
  // hat coefficients fitted by the engine
  RadialFn k = (s > 0 ? qc(-3) : qc(2)) * (RadialFn(1) + qc(1)).inv();
  MatForm br = qc(-s) * (xi.bar() * x * ui) - k * ((con * ui) * MatForm::identity(a));
  return -(a->coeff(f) * br);
}

Element box(const AlgebraPtr& a) {
  Mat gi = tensors::metric_inv(), b = tensors::bmat();
  Element bx = a->zero();
  for (int h = 0; h < 4; ++h)
    for (int k = 0; k < 4; ++k) {
      QRat g = gi(h, k) / (b(h, h) * b(k, k));
      if (!g.is_zero()) bx += RadialFn(g) * (a->gen(letter::kPd, 0, k) * a->gen(letter::kPd, 0, h));
    }
  return bx;
}

MatForm partial_up(const AlgebraPtr& a) {
  Mat eu = tensors::eps_up();
  MatForm m = MatForm::zero(a);
  for (int al = 0; al < 2; ++al)
    for (int alp = 0; alp < 2; ++alp)
      for (int be = 0; be < 2; ++be)
        for (int bep = 0; bep < 2; ++bep) {
          QRat c = eu(al, be) * eu(alp, bep);
          if (!c.is_zero()) m(al, alp) += RadialFn(c) * a->gen(letter::kPd, 0, 2 * be + bep);
        }
  return m;
}

MatForm dhat(const AlgebraPtr& a) {
  int s = sgn(a);
  Element d = a->zero();
  for (int i = 0; i < 4; ++i) d += a->gen(letter::kXi, 0, i) * a->gen(letter::kPd, 0, i);
  RadialFn k = (s > 0 ? qc(-1) : qc(2)) * (RadialFn(1) + qc(1)).inv();
  return qc(1) * (xi_mat(a).bar() * partial_up(a)) - k * (d * MatForm::identity(a));
}

Element phi(const AlgebraPtr& a, const RadialFn& rho2) {
  return a->coeff(RadialFn(1) + qc(2 * sgn(a)) * rho2 * RadialFn::u(-1));
}

ProjectorModule projector_module(const AlgebraPtr& a) {
  ProjectorModule m;
  RadialFn s = RadialFn::s(0);
  m.u = EMat::zero(a, 4, 2);
  m.u(0, 0) = a->coeff(s);
  m.u(1, 1) = a->coeff(s);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.u(2 + i, j) = a->x(i + 1, j + 1).times(RadialFn::rho() * RadialFn::u(-1) * s);
  m.P = m.u * m.u.dagger();
  return m;
}

EMat projector_closed(const AlgebraPtr& a) {
  RadialFn f = regular_factor(RadialFn::p());
  MatForm x = MatForm::gens(a, letter::kX), xb = x.bar();
  EMat P = EMat::zero(a, 4, 4);
  RadialFn r = RadialFn::rho() * RadialFn::u(-1) * f;
  for (int i = 0; i < 2; ++i) {
    P(i, i) = a->coeff(f);
    P(2 + i, 2 + i) = a->coeff(RadialFn::p() * RadialFn::u(-1) * f);
    for (int j = 0; j < 2; ++j) {
      P(i, 2 + j) = xb(i, j).times(r);
      P(2 + i, j) = x(i, j).times(r);
    }
  }
  return P;
}

AlgebraPtr moduli_algebra(int n, Variant v) {
  if (n < 0) fail(ErrorKind::UnsupportedN, "n must be non-negative");
  AlgebraConfig c;
  c.variant = v;
  c.level = n == 0 ? Level::Localized : Level::Braided;
  c.copies = n;
  return Algebra::create(c);
}

MatForm z(const AlgebraPtr& a, int mu) {
  if (mu > a->config().copies) fail(ErrorKind::UnsupportedN, "z_mu needs mu <= copies");
  MatForm m = MatForm::gens(a, letter::kX);
  for (int n = 1; n <= mu; ++n) m = m - MatForm::gens(a, letter::kY, n);
  return m;
}

std::string MultiPhi::str() const {
  std::string s = "1";
  for (int c : copies) {
    std::string m = std::to_string(c);
    s += " + rho[" + m + "]^2 * |z" + m + "|^-2";
  }
  return s;
}

MultiPhi multi_phi(int n) {
  if (n < 0) fail(ErrorKind::UnsupportedN, "n must be non-negative");
  MultiPhi p;
  p.n = n;
  for (int m = 1; m <= n; ++m) p.copies.push_back(m);
  return p;
}

Report check_field_strength(const AlgebraPtr& a) {
  Report r = start("gauge.fs", a);
  r.add(expect_zero("A = 0 gives F = 0", field_strength(MatForm::zero(a))));
  MatForm t = sun::T(a);
  MatForm pure = inverse(t) * forms::d(t);
  r.add(expect_zero("pure gauge T^-1 dT has F = 0", field_strength(pure)));
  GaugePotential A = instanton_A(a);
  r.add(expect_equal("V = I leaves A unchanged", gauge_transform(A.A, MatForm::identity(a)), A.A));
  MatForm F = field_strength(A.A);
  r.add(expect_equal("F^T = T^-1 F T", field_strength(gauge_transform(A.A, t)), inverse(t) * F * t));
  return r;
}

Report check_instanton(const AlgebraPtr& a) {
  Report r = start("gauge.inst", a);
  GaugePotential A = instanton_A(a);
  r = self_dual_report(r, a, A.A, instanton_F_closed(a), false);
  r.add(expect_equal("closed form is self-dual", forms::hodge2(instanton_F_closed(a)), instanton_F_closed(a)));
  r.add(expect_zero("rho^2 = 0 gives F = 0", field_strength(instanton_A(a, RadialFn(0)).A)));
  if (!is_hat(a)) r.add(expect_equal("q=1: classical instanton potential", A.A.at_q1(), classical_A(a, false).at_q1()));
  return r;
}

Report check_antiinstanton(const AlgebraPtr& a) {
  Report r = start("gauge.anti", a);
  GaugePotential A = antiinstanton_A(a);
  r = self_dual_report(r, a, A.A, antiinstanton_F_closed(a), true);
  r.add(expect_equal("closed form is antiself-dual", forms::hodge2(antiinstanton_F_closed(a)), -antiinstanton_F_closed(a)));
  r.add(expect_zero("rho^2 = 0 gives F = 0", field_strength(antiinstanton_A(a, RadialFn(0)).A)));
  if (!is_hat(a)) r.add(expect_equal("q=1: classical anti-instanton potential", A.A.at_q1(), classical_A(a, true).at_q1()));
  return r;
}

Report check_singular(const AlgebraPtr& a) {
  Report r = start("gauge.singular", a);
  MatForm h = singular_gauge(a).A;
  r.add(expect_equal("Tbar dT form = -(dTbar) T form", h, singular_gauge_alt(a)));
  r.add(expect_equal("Tbar dT form = explicit xibar x form", h, singular_gauge_explicit(a)));
  MatForm t = sun::T(a);
  r.add(expect_equal("T (Ahat Tbar + dTbar) = A", t * (h * t.bar() + forms::d(t.bar())), instanton_A(a).A));
  r.add(expect_equal("singular gauge = gauge_transform(A, T)", gauge_transform(instanton_A(a).A, t), h));
  MatForm Fh = field_strength(h);
  r.add(expect_equal("F(Ahat) = T^-1 F T", Fh, inverse(t) * field_strength(instanton_A(a).A) * t));
  return r;
}

Report check_phi(const AlgebraPtr& a) {
  Report r = start("gauge.phi", a);
  Element f = phi(a);
  r.add(expect_zero("Box phi = 0", a->act(box(a), f)));
  MatForm D = dhat(a);
  MatForm act = MatForm::zero(a);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) act(i, j) = a->act(D(i, j), f);
  Element fi = a->coeff(f.coefficient().inv());
  r.add(expect_equal("phi^-1 (Dhat acting on phi) = Ahat", fi * act, singular_gauge(a).A));
  MatForm one = MatForm::zero(a);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) one(i, j) = a->act(D(i, j), a->one());
  r.add(expect_zero("rho^2 = 0: Dhat acting on 1 vanishes", one));
  Element d = a->zero();
  for (int i = 0; i < 4; ++i) d += a->gen(letter::kXi, 0, i) * a->gen(letter::kPd, 0, i);
  Element probe = a->coeff(RadialFn::u(-1)) + a->x(1, 2) * a->x(2, 1);
  r.add(expect_equal("xi^i pd_i acts as d", a->act(d, probe), forms::d(probe)));
  return r;
}

Report check_projector(const AlgebraPtr& a) {
  Report r = start("gauge.proj", a);
  ProjectorModule m = projector_module(a);
  r.add(expect_zero("u^dag u = I", (m.u.dagger() * m.u - EMat::identity(a, 2)).entries()));
  r.add(expect_zero("P^2 = P", (m.P * m.P - m.P).entries()));
  r.add(expect_zero("P^dag = P", (m.P.dagger() - m.P).entries()));
  r.add(expect_zero("P = displayed closed form", (m.P - projector_closed(a)).entries()));
  // trace of a rank-3 projector
  Element tr = a->zero();
  for (int i = 0; i < 4; ++i) tr += m.P(i, i);
  r.add(expect_equal("tr P = 2 (rank over the 2x2 blocks)", tr, a->coeff(RadialFn(2))));
  return r;
}

namespace {

// Checks that the quaternion matrix m satisfies the x relations of the algebra.
void shift_checks(Report& r, const AlgebraPtr& a, const MatForm& m, const std::string& tag) {
  const bool hat = is_hat(a);
  Mat RR = tensors::pair_kron(tensors::rhat(), tensors::rhat());
  Mat RRi = tensors::pair_kron(tensors::rhat_inv(), tensors::rhat_inv());
  const Mat& XXi = hat ? RRi : RR;
  const Mat& DX = hat ? RRi : RR;
  const Mat& PA = tensors::projectors_pair().A;
  auto g = [&](int h) { return m(h / 2, h % 2); };
  std::vector<Element> pa, dz, xz;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Element s = a->zero();
      for (int h = 0; h < 4; ++h)
        for (int k = 0; k < 4; ++k)
          if (!PA(4 * i + j, 4 * h + k).is_zero()) s += RadialFn(PA(4 * i + j, 4 * h + k)) * (g(h) * g(k));
      pa.push_back(s);
      Element pd = a->gen(letter::kPd, 0, i), xi = a->gen(letter::kXi, 0, j);
      Element rhs = i == j ? a->one() : a->zero();
      Element rx = a->zero();
      for (int h = 0; h < 4; ++h)
        for (int k = 0; k < 4; ++k) {
          if (!DX(4 * j + h, 4 * i + k).is_zero()) rhs += RadialFn(DX(4 * j + h, 4 * i + k)) * (g(k) * a->gen(letter::kPd, 0, h));
          if (!XXi(4 * i + j, 4 * h + k).is_zero()) rx += RadialFn(XXi(4 * i + j, 4 * h + k)) * (a->gen(letter::kXi, 0, h) * g(k));
        }
      dz.push_back(pd * g(j) - rhs);
      xz.push_back(g(i) * xi - rx);
    }
  r.add(expect_zero("P_A " + tag + " " + tag + " = 0", pa));
  r.add(expect_zero("pd " + tag + " relation", dz));
  r.add(expect_zero(tag + " xi relation", xz));
}

}  // namespace

Report check_braided_shift(int n, Variant v) {
  AlgebraPtr a = moduli_algebra(n, v);
  Report r = start("gauge.moduli", a);
  for (int mu = 0; mu <= n; ++mu) shift_checks(r, a, z(a, mu), "z" + std::to_string(mu));
  return r;
}

Report check_multi_harmonic(int n, Variant v) {
  if (n < 0 || n > 2) fail(ErrorKind::UnsupportedN, "harmonicity is checked for n <= 2");
  AlgebraPtr one = moduli_algebra(0, v);
  Report r = start("gauge.multiphi", moduli_algebra(n, v));
  r.add(expect_zero("one-copy lemma: Box |x|^-2 = 0", one->act(box(one), one->coeff(RadialFn::u(-1)))));
  if (n == 0) return r;
  AlgebraPtr a = moduli_algebra(n, v);
  for (int mu = 1; mu <= n; ++mu) {
    Report sub = start("", a);
    std::string tag = "z" + std::to_string(mu);
    shift_checks(sub, a, z(a, mu), tag);
    for (auto& c : sub.checks) {
      c.name = "transport " + tag + ": " + c.name;
      r.add(c);
    }
    // pd pd relations are shared; rho_mu^2 passes every partial unchanged
    std::vector<Element> rho;
    for (int i = 0; i < 4; ++i) {
      Element pd = a->gen(letter::kPd, 0, i);
      rho.push_back(pd * a->rho2(mu) - a->rho2(mu) * pd);
    }
    r.add(expect_zero("rho" + std::to_string(mu) + "^2 commutes with pd", rho));
    bool ok = true;
    for (const auto& c : r.checks) ok = ok && c.pass;
    r.add(expect_true("Box (rho" + std::to_string(mu) + "^2 |" + tag + "|^-2) = 0 by transport", ok,
                      "x -> " + tag + " preserves the x-pd relations, so the one-copy identity maps over"));
  }
  bool all = true;
  for (const auto& c : r.checks) all = all && c.pass;
  r.add(expect_true("Box phi_" + std::to_string(n) + " = 0 term by term", all, multi_phi(n).str()));
  return r;
}

Report check_u2(Variant v) {
  AlgebraPtr a = moduli_algebra(2, v);
  Report r = start("gauge.u2", a);
  auto unit = [&](const MatForm& m, const std::string& tag) {
    Element det = sun::det_q(m);
    r.add(expect_equal(tag + "bar " + tag + " = det_q(" + tag + ") I", m.bar() * m, det * MatForm::identity(a)));
    r.add(expect_equal(tag + " " + tag + "bar = det_q(" + tag + ") I", m * m.bar(), det * MatForm::identity(a)));
    std::vector<Element> c;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) c.push_back(det * m(i, j) - m(i, j) * det);
    r.add(expect_zero("det_q(" + tag + ") central in its copy", c));
    r.add(expect_equal(tag + "^dag = " + tag + "bar", m.dagger(), m.bar()));
  };
  unit(z(a, 1), "z1");
  unit(MatForm::gens(a, letter::kY, 2), "y2");
  unit(z(a, 2), "z2");
  // antimultiplicativity of the copy-wise star on generator pairs
  std::vector<Element> g;
  for (int i = 0; i < 4; ++i) {
    g.push_back(a->gen(letter::kX, 0, i));
    for (int m = 1; m <= 2; ++m) g.push_back(a->gen(letter::kY, m, i));
  }
  int bad = 0, total = 0;
  std::string first;
  for (const auto& x : g)
    for (const auto& y : g) {
      ++total;
      if (a->star(x * y) != a->star(y) * a->star(x)) {
        if (!bad) first = "(" + x.str() + ")(" + y.str() + ")";
        ++bad;
      }
    }
  Check star = expect_true("copy-wise star is antimultiplicative", bad == 0,
                           bad ? std::string(kind_name(ErrorKind::StarInconsistency)) + ": " + std::to_string(bad) + "/" +
                                     std::to_string(total) + " generator pairs, first " + first
                               : "");
  r.add(star);
  bool factors = true;
  for (const auto& c : r.checks)
    if (&c != &r.checks.back()) factors = factors && c.pass;
  r.add(expect_true("U2^dag U2 = 1", factors && star.pass,
                    star.pass ? "" : "factor unitarity holds; the product needs an antimultiplicative star"));
  return r;
}

}  // namespace gauge
}  // namespace qhopf
