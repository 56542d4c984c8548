#include "qhopf/groupcalc.hpp"

namespace qhopf::sun {

namespace {

bool is_hat(const AlgebraPtr& a) { return a->config().variant == Variant::Hat; }

RadialFn qc(int e) { return RadialFn(QRat::q(e)); }

Element trace(const MatForm& m) { return m(0, 0) + m(1, 1); }

}  // namespace

MatForm T(const AlgebraPtr& a) {
  MatForm x = MatForm::gens(a, letter::kX);
  return x * a->coeff(RadialFn::sqrt_u().inv());
}

MatForm Tbar(const AlgebraPtr& a) { return T(a).bar(); }

MatForm omega(const AlgebraPtr& a) {
  MatForm x = MatForm::gens(a, letter::kX), xi = MatForm::gens(a, letter::kXi);
  return xi * x.bar() * a->coeff(RadialFn::u(-1));
}

Element det_q(const MatForm& m) { return m(0, 0) * m(1, 1) - qc(1) * (m(0, 1) * m(1, 0)); }

Report check_T_relations(const AlgebraPtr& a) {
  Report r;
  r.suite = "sun.T";
  r.fingerprint = a->config().fingerprint();
  MatForm x = MatForm::gens(a, letter::kX), I = MatForm::identity(a);
  Element U = a->coeff(RadialFn::u());
  r.add(expect_equal("xbar x = |x|^2 I", x.bar() * x, U * I));
  r.add(expect_equal("x xbar = |x|^2 I", x * x.bar(), U * I));
  Element det = det_q(x);
  r.add(expect_equal("det_q(x) = |x|^2", det, U));
  std::vector<Element> comm;
  for (int i = 0; i < 4; ++i) {
    Element g = a->gen(letter::kX, 0, i);
    comm.push_back(det * g - g * det);
  }
  r.add(expect_zero("det_q(x) central", comm));
  MatForm t = T(a), td = t.dagger();
  r.add(expect_equal("T^dag T = I", td * t, I));
  r.add(expect_equal("T T^dag = I", t * td, I));
  r.add(expect_equal("Tbar = T^dag", t.bar(), td));
  r.add(expect_equal("Tbar T = I", t.bar() * t, I));
  r.add(expect_equal("det_q(T) = 1", det_q(t), a->one()));
  return r;
}

Report check_Txi(const AlgebraPtr& a) {
  Report r;
  r.suite = "sun.txi";
  r.fingerprint = a->config().fingerprint();
  bool hat = is_hat(a);
  Mat R = hat ? tensors::rhat_inv() : tensors::rhat();
  RadialFn pre = qc(hat ? 1 : -1);
  MatForm t = T(a), w = omega(a);
  std::vector<Element> res;
  for (int al = 0; al < 2; ++al)
    for (int alp = 0; alp < 2; ++alp)
      for (int be = 0; be < 2; ++be)
        for (int bep = 0; bep < 2; ++bep) {
          Element rhs = a->zero();
          for (int la = 0; la < 2; ++la)
            for (int de = 0; de < 2; ++de) {
              const QRat& r1 = R(2 * al + be, 2 * la + de);
              if (r1.is_zero()) continue;
              for (int mu = 0; mu < 2; ++mu)
                for (int ga = 0; ga < 2; ++ga) {
                  const QRat& r2 = R(2 * mu + de, 2 * ga + bep);
                  if (r2.is_zero()) continue;
                  rhs += RadialFn(r1 * r2) * (w(la, mu) * t(ga, alp));
                }
            }
          res.push_back(t(al, alp) * w(be, bep) - pre * rhs);
        }
  r.add(expect_zero("T omega reordering (16 entries)", res));
  return r;
}

Report check_maurer_cartan(const AlgebraPtr& a) {
  Report r;
  r.suite = "sun.mc";
  r.fingerprint = a->config().fingerprint();
  bool hat = is_hat(a);
  int s = hat ? 1 : -1;
  MatForm t = T(a);
  Element th = forms::theta(a);
  MatForm dt = forms::d(t);
  MatForm rhs = qc(s) * omega(a) + (qc(s) - RadialFn(1)) * (th * MatForm::identity(a));
  r.add(expect_equal("dT = q^s xi |x|^{-1} + (q^s - 1) theta T",
                     dt, qc(s) * (MatForm::gens(a, letter::kXi) * a->coeff(RadialFn::sqrt_u().inv())) +
                             (qc(s) - RadialFn(1)) * (th * t)));
  r.add(expect_equal("(dT) Tbar = q^s omega + (q^s - 1) theta I", dt * t.bar(), rhs));
  // classical limit: xi xbar / |x|^2 = (dT) Tbar + I d|x|^2 / (2 |x|^2)
  MatForm half = RadialFn(RatFn::u(-1) * RatFn(QRat(mpq_class(1, 2)))) * (forms::d(a->coeff(RadialFn::u())) * MatForm::identity(a));
  r.add(expect_equal("q=1: (dT) Tbar = omega - I d|x|^2 / (2|x|^2)", (dt * t.bar()).at_q1(), (omega(a) - half).at_q1()));
  return r;
}

Report check_theta_trace(const AlgebraPtr& a) {
  Report r;
  r.suite = "sun.trace";
  r.fingerprint = a->config().fingerprint();
  MatForm t = T(a), tb = t.bar();
  Mat Q = tensors::qmat();
  MatForm Qm = MatForm::constant(a, Q), Qi = MatForm::constant(a, Q.inverse());
  RadialFn k = (qc(1) - RadialFn(1)) * (qc(1) - qc(-2));
  Element th = forms::theta(a);
  Element tr1 = trace(Qm * forms::d(t) * tb);
  Element tr2 = trace(Qi * forms::d(tb) * t);
  r.add(expect_equal("tr[Q (dT) Tbar] = (q-1)(q-q^-2) theta", tr1, k * th));
  r.add(expect_equal("tr[Q^-1 (dTbar) T] = (q-1)(q-q^-2) theta", tr2, k * th));
  r.add(expect_true("trace coefficient vanishes at q=1", k.at_q1().is_zero(), k.str()));
  // theta recovered from the four entries of (dT) Tbar
  r.add(expect_equal("theta = tr[Q (dT) Tbar] / ((q-1)(q-q^-2))", k.inv() * tr1, th));
  return r;
}

std::pair<MatForm, MatForm> build_v(const AlgebraPtr& a) {
  MatForm xi = MatForm::gens(a, letter::kXi);
  RadialFn c = qc(is_hat(a) ? 1 : -1) * RadialFn::u(-1);
  return {c * (xi * xi.bar()), c * (xi.bar() * xi)};
}

Report check_v_duality(const AlgebraPtr& a) {
  Report r;
  r.suite = "sun.v";
  r.fingerprint = a->config().fingerprint();
  bool hat = is_hat(a);
  // hat variant: q -> q^{-1} in the displayed coefficients
  RadialFn c2 = qc(hat ? -2 : 2);
  auto [v, vp] = build_v(a);
  MatForm t = T(a), tb = t.bar();
  Element th = forms::theta(a);
  MatForm dt = forms::d(t), dtb = forms::d(tb);
  MatForm w0 = c2 * (t * th * tb * th) + th * t * th * tb;
  MatForm w1 = c2 * (dt * dtb) + (c2 - RadialFn(1)) * (dt * th * tb);
  MatForm p0 = c2 * (tb * th * t * th) + th * tb * th * t;
  MatForm p1 = c2 * (dtb * dt) + (c2 - RadialFn(1)) * (dtb * th * t);
  r.add(expect_equal("v: theta form = dT form", w0, w1));
  r.add(expect_equal("v': theta form = dT form", p0, p1));
  r.add(expect_equal("v = theta form", v, w0));
  r.add(expect_equal("v' = theta form", vp, p0));
  RadialFn k = qc(hat ? -4 : 4);
  r.add(expect_equal("theta form = q^(+-4) v", w0, k * v));
  r.add(expect_equal("theta form' = q^(+-4) v'", p0, k * vp));
  r.add(expect_equal("*v = v", forms::hodge2(v), v));
  r.add(expect_equal("*v' = -v'", forms::hodge2(vp), -vp));
  return r;
}

SphereCoords sphere_coords(const AlgebraPtr& a) {
  RadialFn den = RatFn::M(0, -1);
  RadialFn f = RadialFn::sqrt2() * RadialFn(2) * den;
  SphereCoords s;
  s.alpha = a->star(a->x(1, 1)).times(f);
  s.beta = a->star(a->x(2, 1)).times(f);
  s.alpha_star = a->star(s.alpha);
  s.beta_star = a->star(s.beta);
  s.z = a->coeff((RadialFn(1) - RadialFn(2) * RadialFn::u()) * den);
  return s;
}

Report sphere_map(const AlgebraPtr& a) {
  Report r;
  r.suite = "sun.sphere";
  r.fingerprint = a->config().fingerprint();
  SphereCoords s = sphere_coords(a);
  r.add(expect_equal("alpha' alpha'* + beta' beta'* + z^2 = 1",
                     s.alpha * s.alpha_star + s.beta * s.beta_star + s.z * s.z, a->one()));
  r.add(expect_equal("alpha'* = sqrt2 alpha 2/(1+2|x|^2)", s.alpha_star,
                     a->x(1, 1).times(RadialFn::sqrt2() * RadialFn(2) * RatFn::M(0, -1))));
  RadialFn z = s.z.coefficient();
  r.add(expect_true("z = 1 at |x| = 0", z.rational().eval(7, 0, 1) == 1, z.str()));
  // z + 1 = 2 / (1 + 2|x|^2) tends to 0, so z -> -1 as |x| grows
  r.add(expect_equal("(z + 1)(1 + 2|x|^2) = 2", a->coeff((z + RadialFn(1)) * RadialFn(RatFn::M(0))), a->coeff(RadialFn(2))));
  return r;
}

}  // namespace qhopf::sun
