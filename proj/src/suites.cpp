#include "qhopf/suites.hpp"

#include <random>
#include <set>

#include "qhopf/confluence.hpp"
#include "qhopf/error.hpp"
#include "qhopf/gauge.hpp"
#include "qhopf/tensor.hpp"

namespace qhopf {

namespace {

AlgebraPtr make(const SuiteOptions& o, Level l, int copies = 0) {
  AlgebraConfig c = o.base;
  c.level = l;
  c.copies = copies;
  return Algebra::create(c);
}

AlgebraPtr localized(const SuiteOptions& o) { return make(o, Level::Localized); }

Report start(const std::string& suite, const AlgebraPtr& a) {
  Report r;
  r.suite = suite;
  r.fingerprint = a->config().fingerprint();
  return r;
}

Report retitle(Report r, const std::string& suite) {
  r.suite = suite;
  return r;
}

// Matrix residual as coefficient elements of a scratch algebra.
Check mat_zero(const AlgebraPtr& a, const std::string& name, const Mat& m) {
  std::vector<Element> res;
  res.reserve(static_cast<std::size_t>(m.rows() * m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) res.push_back(m(i, j).is_zero() ? a->zero() : a->coeff(RadialFn(m(i, j))));
  return expect_zero(name, res);
}

Check qrat_equal(const AlgebraPtr& a, const std::string& name, const QRat& x, const QRat& y) {
  QRat d = x - y;
  return expect_zero(name, d.is_zero() ? a->zero() : a->coeff(RadialFn(d)));
}

// ---- tensors -----------------------------------------------------------

Report suite_tensors(const SuiteOptions& o) {
  auto a = make(o, Level::Core);
  Report r = start("tensors", a);
  QRat q = QRat::q(), qi = QRat::q(-1);
  Mat I4 = Mat::identity(4), I16 = Mat::identity(16);

  Mat rh = tensors::rhat();
  r.add(mat_zero(a, "Rhat Hecke: (Rhat - q)(Rhat + q^-1) = 0", (rh - q * I4) * (rh + qi * I4)));
  r.add(mat_zero(a, "Rhat Rhat^-1 = 1", rh * tensors::rhat_inv() - I4));

  Mat R = tensors::rhat4();
  Mat L = R.kron(I4), Rr = I4.kron(R);
  r.add(mat_zero(a, "braid equation for R4 (64x64)", L * Rr * L - Rr * L * Rr));

  auto P = tensors::projectors4();
  r.add(mat_zero(a, "spectral decomposition R4 = q Ps - q^-1 PA + q^-3 Pt", R - (q * P.s - qi * P.A + QRat::q(-3) * P.t)));
  r.add(mat_zero(a, "eigenvalues q, -q^-1, q^-3", (R - q * I16) * (R + qi * I16) * (R - QRat::q(-3) * I16)));

  std::vector<int> ranks = {P.s.rank(), P.a.rank(), P.ap.rank(), P.A.rank(), P.t.rank()};
  std::string rs;
  for (int k : ranks) rs += (rs.empty() ? "" : ",") + std::to_string(k);
  r.add(expect_true("projector ranks (9,3,3,6,1)", ranks == std::vector<int>{9, 3, 3, 6, 1}, "(" + rs + ")"));

  std::vector<std::pair<std::string, Mat>> pr = {{"Ps", P.s}, {"Pa", P.a}, {"Pa'", P.ap}, {"Pt", P.t}};
  std::vector<Element> ores;
  for (std::size_t i = 0; i < pr.size(); ++i)
    for (std::size_t j = 0; j < pr.size(); ++j) {
      Mat m = pr[i].second * pr[j].second - (i == j ? pr[i].second : Mat(16, 16));
      Check c = mat_zero(a, "", m);
      ores.insert(ores.end(), c.residuals.begin(), c.residuals.end());
    }
  r.add(expect_zero("projectors idempotent and orthogonal", ores));
  r.add(mat_zero(a, "completeness Ps + Pa + Pa' + Pt = 1", P.s + P.a + P.ap + P.t - I16));
  r.add(mat_zero(a, "PA = Pa + Pa'", P.A - P.a - P.ap));

  Mat g = tensors::metric(), gi = tensors::metric_inv();
  QRat tr;
  for (int s = 0; s < 4; ++s)
    for (int m = 0; m < 4; ++m) tr += gi(s, m) * g(s, m);
  QRat two = q + qi;
  r.add(qrat_equal(a, "g^{sm} g_{sm} = (q + q^-1)^2", tr, two * two));
  Mat ptf(16, 16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) ptf(4 * i + j, 4 * k + l) = gi(i, j) * g(k, l) / (two * two);
  r.add(mat_zero(a, "Pt = g^{ij} g_{kl} / (q + q^-1)^2", P.t - ptf));

  auto kr = tensors::resolve_k();
  r.add(expect_true("resolve_k: unique solution", kr.unique && kr.raw_mismatches == 0,
                    "k = " + kr.k.str() + ", mismatches " + std::to_string(kr.raw_mismatches)));
  r.add(qrat_equal(a, "k = q - q^-1", kr.k, q - qi));
  r.add(expect_true("k at q=1 is 0", kr.k.eval(1) == 0, kr.k.eval(1).get_str()));
  r.add(expect_true("eps4 is q-antisymmetric in every slot pair", tensors::eps4_antisymmetric(tensors::eps4(kr.k))));
  r.add(expect_true("eps4 table has 24 listed entries", tensors::eps4_listed() == 24, std::to_string(tensors::eps4_listed())));
  return r;
}

// ---- ncalg -------------------------------------------------------------

Check confluence_check(const std::string& name, const AlgebraPtr& a, int len) {
  auto rep = check_confluence(a, len);
  std::string d = std::to_string(rep.words_checked) + " words";
  if (!rep.ok()) d += "; " + std::to_string(rep.failures.size()) + " failures, first: " + rep.failures.front();
  return expect_true(name, rep.ok(), d);
}

Report suite_confluence(const SuiteOptions& o) {
  auto loc = localized(o);
  Report r = start("ncalg.confluence", loc);
  std::string len = " (length " + std::to_string(o.max_overlap) + ")";
  r.add(confluence_check("core overlaps resolve" + len, make(o, Level::Core), o.max_overlap));
  r.add(confluence_check("localized overlaps resolve" + len, loc, o.max_overlap));
  int n = std::max(o.n, 1);
  r.add(confluence_check("braided(" + std::to_string(n) + ") overlaps resolve" + len, make(o, Level::Braided, n),
                         o.max_overlap));
  return r;
}

Report suite_strategy(const SuiteOptions& o) {
  auto loc = localized(o);
  Report r = start("ncalg.strategy", loc);
  std::mt19937_64 rng(o.seed);
  int n = std::max(o.n, 1);
  std::vector<std::pair<std::string, AlgebraPtr>> algs = {{"localized", loc},
                                                           {"braided(" + std::to_string(n) + ")", make(o, Level::Braided, n)}};
  for (const auto& [label, A] : algs) {
    std::vector<Element> res;
    for (int i = 0; i < 500; ++i) {
      RawWord w = random_word(A, 4, rng);
      res.push_back(engine_product(A, w) - reduce_random(A, w, rng));
    }
    r.add(expect_zero("500 random degree<=4 words: " + label + " normal form is strategy independent", res));
  }
  return r;
}

Report suite_relations(const SuiteOptions& o) {
  auto A = localized(o);
  Report r = start("ncalg.relations", A);
  r.add(expect_true("quadratic xi relations leave 6 normal pairs", A->xi_normal_pairs() == 6,
                    std::to_string(A->xi_normal_pairs())));
  r.add(expect_true("quadratic partial relations leave 10 normal pairs", A->pd_normal_pairs() == 10,
                    std::to_string(A->pd_normal_pairs())));
  RadialFn q(QRat::q());
  Element al = A->x(1, 1), ga = A->x(2, 1), als = A->x(2, 2), gas = -(RadialFn::q(-1) * A->x(1, 2));
  r.add(expect_equal("alpha gamma = q gamma alpha", al * ga, q * (ga * al)));
  r.add(expect_equal("alpha alpha* - alpha* alpha = (1 - q^2) gamma gamma*", al * als - als * al,
                     RadialFn(QRat(1) - QRat::q(2)) * (ga * gas)));
  Element det = A->x(1, 1) * A->x(2, 2) - q * (A->x(1, 2) * A->x(2, 1));
  r.add(expect_equal("det_q(x) = |x|^2", det, A->coeff(RadialFn::u())));
  std::vector<Element> cen;
  for (int i = 0; i < 4; ++i) cen.push_back(det * A->gen(letter::kX, 0, i) - A->gen(letter::kX, 0, i) * det);
  r.add(expect_zero("|x|^2 commutes with x", cen));
  r.add(expect_equal("x star: x11* = x22", A->star(A->x(1, 1)), A->x(2, 2)));
  r.add(expect_equal("x star: x12* = -q x21", A->star(A->x(1, 2)), -(q * A->x(2, 1))));

  std::mt19937_64 rng(o.seed);
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
  std::vector<Element> inv, anti;
  for (int i = 0; i < 100; ++i) {
    Element x = rnd(), y = rnd();
    inv.push_back(A->star(A->star(x)) - x);
    anti.push_back(A->star(x * y) - A->star(y) * A->star(x));
  }
  r.add(expect_zero("star is an involution (100 random)", inv));
  r.add(expect_zero("star is antimultiplicative (100 random)", anti));

  auto core = make(o, Level::Core);
  std::vector<Element> layer{core->one()};
  std::string counts;
  bool pbw = true;
  for (int d = 1; d <= 4; ++d) {
    std::vector<Element> next;
    std::set<std::pair<Word, int>> basis;
    for (const auto& e : layer)
      for (int p = 0; p < 4; ++p) next.push_back(e * core->gen(letter::kX, 0, p));
    for (const auto& e : next)
      for (const auto& [k, c] : e.terms()) basis.insert({k.L, d - static_cast<int>(k.L.size())});
    int want = (d + 3) * (d + 2) * (d + 1) / 6;
    pbw = pbw && static_cast<int>(basis.size()) == want;
    counts += (counts.empty() ? "" : ",") + std::to_string(basis.size());
    layer = std::move(next);
  }
  r.add(expect_true("PBW: degree-d monomials span C(d+3,3) normal words (d<=4)", pbw, counts));

  std::vector<Element> xx, xixi, dx;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Element x1 = A->gen(letter::kX, 0, i), x2 = A->gen(letter::kX, 0, j);
      Element k1 = A->gen(letter::kXi, 0, i), k2 = A->gen(letter::kXi, 0, j);
      Element d1 = A->gen(letter::kPd, 0, i);
      xx.push_back((x1 * x2 - x2 * x1).at_q1());
      xixi.push_back((k1 * k2 + k2 * k1).at_q1());
      dx.push_back((d1 * x2 - x2 * d1).at_q1() - (i == j ? A->one() : A->zero()));
    }
  r.add(expect_zero("q=1: x commute", xx));
  r.add(expect_zero("q=1: xi anticommute", xixi));
  r.add(expect_zero("q=1: [pd_i, x^j] = delta", dx));
  return r;
}

Report suite_negative(const SuiteOptions& o) {
  AlgebraConfig c = o.base;
  c.level = Level::Localized;
  c.perturb = true;
  c.det_elimination = false;
  auto A = Algebra::create(c);
  Report r = start("ncalg.negative", A);
  auto rep = check_confluence(A, 3);
  r.add(expect_true("perturbed x-xi braiding is reported non-confluent", !rep.ok(),
                    std::to_string(rep.failures.size()) + " failing overlaps"));
  auto good = localized(o);
  Element U = good->coeff(RadialFn::u());
  Element wrong = U * good->xi(1, 1) - good->xi(1, 1) * U;
  r.add(expect_true("a false relation U xi = xi U is rejected", !wrong.is_zero(), wrong.str()));
  return r;
}

// ---- forms -------------------------------------------------------------

Element random_form(const AlgebraPtr& A, std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<int> pick(0, 3), len(0, 2), cf(0, 4);
  Element e = A->zero();
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
    for (int k = 0; k < deg; ++k) m = m * A->gen(letter::kXi, 0, pick(rng));
    for (int k = len(rng); k > 0; --k) m = m * A->gen(letter::kX, 0, pick(rng));
    e += m.times(c);
  }
  return e;
}

Report suite_forms_d(const SuiteOptions& o) {
  auto A = localized(o);
  Report r = start("forms.d", A);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> deg(0, 2);
  std::vector<Element> res, dd;
  for (int i = 0; i < 100; ++i) {
    Element e = random_form(A, rng, deg(rng));
    Element de = forms::d(e);
    res.push_back(de - forms::d_via_theta(e));
    dd.push_back(forms::d(de));
  }
  r.add(expect_zero("d (Leibniz) = [-theta, .} on 100 random y-free forms", res));
  r.add(expect_zero("d^2 = 0 on the same forms", dd));
  Element th = forms::theta(A);
  r.add(expect_zero("theta^2 = 0", th * th));
  r.add(expect_zero("d theta = 0", forms::d(th)));
  if (A->config().variant == Variant::Standard)
    r.add(expect_equal("theta equals its contracted formula", th, forms::theta_contracted(A)));
  r.add(expect_equal("d x11 = xi11", forms::d(A->x(1, 1)), A->xi(1, 1)));
  Element U = A->coeff(RadialFn::u()), Ui = A->coeff(RadialFn::u(-1));
  r.add(expect_zero("Leibniz on U U^-1", forms::d(U) * Ui + U * forms::d(Ui)));
  return r;
}

Report suite_forms_hodge(const SuiteOptions& o) {
  auto A = localized(o);
  Report r = start("forms.hodge", A);
  std::mt19937_64 rng(o.seed);
  std::vector<Element> inv, split;
  for (int i = 0; i < 100; ++i) {
    Element w = random_form(A, rng, 2);
    inv.push_back(forms::hodge2(forms::hodge2(w)) - w);
    auto [s, t] = forms::decompose2(w);
    split.push_back(s + t - w);
    split.push_back(forms::hodge2(s) - s);
    split.push_back(forms::hodge2(t) + t);
  }
  r.add(expect_zero("** = id on 100 random 2-forms", inv));
  r.add(expect_zero("decomposition into self-dual and antiself-dual parts", split));
  MatForm f = forms::build_f(A), fp = forms::build_fprime(A);
  r.add(expect_true("f and f' have four nonzero entries", f.nonzero_entries() == 4 && fp.nonzero_entries() == 4));
  r.add(expect_equal("*f = f", forms::hodge2(f), f));
  r.add(expect_equal("*f' = -f'", forms::hodge2(fp), -fp));
  MatForm da = forms::d(forms::build_a(A));
  r.add(expect_equal("d(a) = f", da, f));
  r.add(expect_equal("d(a) = -f", da, -f));
  return r;
}

Report suite_forms_xblu(const SuiteOptions& o) {
  auto A = localized(o);
  Report r = start("forms.xblu", A);
  auto x = forms::check_xblu(A);
  r.add(expect_equal("x xibar + xi xbar = (q^(+-2) - 1) theta |x|^2 I", x.lhs1, x.rhs));
  r.add(expect_equal("xbar xi + xibar x = (q^(+-2) - 1) theta |x|^2 I", x.lhs2, x.rhs));
  auto w = forms::check_xblu(A, true);
  r.add(expect_true("opposite sign is rejected", !w.ok()));
  r.add(expect_zero("(xi eps xi^T)^{cd} eps_{cd} = 0", forms::xixi_contraction(A)));
  return r;
}

// ---- classical limit ---------------------------------------------------

Report suite_classical(const SuiteOptions& o) {
  auto A = localized(o);
  Report r = start("classical", A);
  auto keep = [&](const Report& src) {
    for (const auto& c : src.checks)
      if (c.name.rfind("q=1", 0) == 0) r.add(c);
  };
  keep(suite_relations(o));
  auto B = make(o, Level::Braided, std::max(o.n, 1));
  std::vector<Element> yx;
  for (int m = 1; m <= std::max(o.n, 1); ++m)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Element y = B->gen(letter::kY, m, i), x = B->gen(letter::kX, 0, j), k = B->gen(letter::kXi, 0, j);
        yx.push_back((y * x - x * y).at_q1());
        yx.push_back((y * k - k * y).at_q1());
        yx.push_back((B->rho2(m) * y - y * B->rho2(m)).at_q1());
      }
  r.add(expect_zero("q=1: y commute with x, xi and rho^2", yx));
  keep(sun::check_maurer_cartan(A));
  keep(sun::check_theta_trace(A));
  keep(gauge::check_instanton(A));
  keep(gauge::check_antiinstanton(A));
  return r;
}

using Runner = Report (*)(const SuiteOptions&);

struct Entry {
  SuiteInfo info;
  Runner run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = {
      {{"tensors", "R-matrix, projectors, metric and the four-index epsilon"}, suite_tensors},
      {{"ncalg.confluence", "overlap ambiguities in core, localized and braided(n)"}, suite_confluence},
      {{"ncalg.strategy", "engine normal forms against a random single-step reducer"}, suite_strategy},
      {{"ncalg.relations", "quaternion relations, star, PBW and q=1 limit"}, suite_relations},
      {{"ncalg.negative", "perturbed rules are detected"}, suite_negative},
      {{"forms.d", "exterior derivative, theta and d^2"}, suite_forms_d},
      {{"forms.hodge", "Hodge star on 2-forms, f, f' and d(a)"}, suite_forms_hodge},
      {{"forms.xblu", "x xibar + xi xbar identities"}, suite_forms_xblu},
      {{"sun.T", "T matrix relations and det_q"}, [](const SuiteOptions& o) { return retitle(sun::check_T_relations(localized(o)), "sun.T"); }},
      {{"sun.txi", "T omega reordering"}, [](const SuiteOptions& o) { return retitle(sun::check_Txi(localized(o)), "sun.txi"); }},
      {{"sun.mc", "Maurer-Cartan form (dT) Tbar"}, [](const SuiteOptions& o) { return retitle(sun::check_maurer_cartan(localized(o)), "sun.mc"); }},
      {{"sun.trace", "theta from the traces"}, [](const SuiteOptions& o) { return retitle(sun::check_theta_trace(localized(o)), "sun.trace"); }},
      {{"sun.v", "v and v' forms and their duality"}, [](const SuiteOptions& o) { return retitle(sun::check_v_duality(localized(o)), "sun.v"); }},
      {{"sun.sphere", "sphere map"}, [](const SuiteOptions& o) { return retitle(sun::sphere_map(localized(o)), "sun.sphere"); }},
      {{"gauge.fs", "field strength basics"}, [](const SuiteOptions& o) { return retitle(gauge::check_field_strength(localized(o)), "gauge.fs"); }},
      {{"gauge.inst", "instanton"}, [](const SuiteOptions& o) { return retitle(gauge::check_instanton(localized(o)), "gauge.inst"); }},
      {{"gauge.anti", "anti-instanton"}, [](const SuiteOptions& o) { return retitle(gauge::check_antiinstanton(localized(o)), "gauge.anti"); }},
      {{"gauge.singular", "singular gauge"}, [](const SuiteOptions& o) { return retitle(gauge::check_singular(localized(o)), "gauge.singular"); }},
      {{"gauge.phi", "harmonic phi and Ahat = phi^-1 Dhat phi"}, [](const SuiteOptions& o) { return retitle(gauge::check_phi(localized(o)), "gauge.phi"); }},
      {{"gauge.proj", "projector module"}, [](const SuiteOptions& o) { return retitle(gauge::check_projector(localized(o)), "gauge.proj"); }},
      {{"gauge.moduli", "braided shift z = x - y"}, [](const SuiteOptions& o) { return retitle(gauge::check_braided_shift(o.n, o.base.variant), "gauge.moduli"); }},
      {{"gauge.multiphi", "multi-instanton phi harmonic term by term"}, [](const SuiteOptions& o) { return retitle(gauge::check_multi_harmonic(o.n, o.base.variant), "gauge.multiphi"); }},
      {{"gauge.u2", "two-instanton unitary U2"}, [](const SuiteOptions& o) { return retitle(gauge::check_u2(o.base.variant), "gauge.u2"); }},
      {{"classical", "q=1 regression of relations and potentials"}, suite_classical},
  };
  return r;
}

}  // namespace

const std::vector<SuiteInfo>& suite_list() {
  static const std::vector<SuiteInfo> l = [] {
    std::vector<SuiteInfo> v;
    for (const auto& e : registry()) v.push_back(e.info);
    return v;
  }();
  return l;
}

bool suite_exists(const std::string& name) {
  for (const auto& e : registry())
    if (e.info.name == name) return true;
  return false;
}

Report run_suite(const std::string& name, const SuiteOptions& opt) {
  for (const auto& e : registry())
    if (e.info.name == name) {
      Report r = e.run(opt);
      r.suite = name;
      return r;
    }
  fail(ErrorKind::UnknownSuite, "unknown suite '" + name + "'");
}

NumericVerdict numeric_verdict(const Check& c, const mpq_class& q, std::uint64_t seed) {
  NumericVerdict v;
  v.applicable = !c.residuals.empty();
  if (!v.applicable) return v;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 97), den(1, 13);
  for (int attempt = 0; attempt < 64; ++attempt) {
    v.u = mpq_class(num(rng), den(rng));
    v.p = mpq_class(num(rng), den(rng));
    v.u.canonicalize();
    v.p.canonicalize();
    try {
      v.zero = true;
      for (const auto& e : c.residuals)
        if (!numeric_zero(e, q, v.u, v.p)) {
          v.zero = false;
          break;
        }
      return v;
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::PoleAtPoint) throw;
    }
  }
  fail(ErrorKind::PoleAtPoint, "no pole-free point found for '" + c.name + "'");
}

}  // namespace qhopf
