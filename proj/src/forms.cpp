#include "qhopf/forms.hpp"

#include <ostream>

#include "qhopf/error.hpp"

namespace qhopf {

MatForm MatForm::zero(const AlgebraPtr& a) {
  MatForm m;
  m.alg = a;
  for (auto& r : m.e)
    for (auto& x : r) x = a->zero();
  return m;
}

MatForm MatForm::identity(const AlgebraPtr& a) {
  MatForm m = zero(a);
  m(0, 0) = a->one();
  m(1, 1) = a->one();
  return m;
}

MatForm MatForm::constant(const AlgebraPtr& a, const Mat& c) {
  MatForm m = zero(a);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!c(i, j).is_zero()) m(i, j) = a->coeff(RadialFn(c(i, j)));
  return m;
}

MatForm MatForm::gens(const AlgebraPtr& a, int kind, int copy) {
  MatForm m = zero(a);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = a->gen(kind, copy, 2 * i + j);
  return m;
}

MatForm operator*(const MatForm& a, const MatForm& b) {
  MatForm r = MatForm::zero(a.alg ? a.alg : b.alg);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        r(i, j) += a(i, k) * b(k, j);
      }
  return r;
}

MatForm operator+(const MatForm& a, const MatForm& b) {
  MatForm r = a;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) += b(i, j);
  return r;
}

MatForm operator-(const MatForm& a, const MatForm& b) { return a + (-b); }

MatForm MatForm::operator-() const {
  MatForm r = *this;
  for (auto& row : r.e)
    for (auto& x : row) x = -x;
  return r;
}

MatForm operator*(const Element& c, const MatForm& a) {
  MatForm r = a;
  for (auto& row : r.e)
    for (auto& x : row) x = c * x;
  return r;
}

MatForm operator*(const MatForm& a, const Element& c) {
  MatForm r = a;
  for (auto& row : r.e)
    for (auto& x : row) x = x * c;
  return r;
}

MatForm operator*(const RadialFn& c, const MatForm& a) {
  MatForm r = a;
  for (auto& row : r.e)
    for (auto& x : row) x = c * x;
  return r;
}

bool operator==(const MatForm& a, const MatForm& b) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

MatForm MatForm::transpose() const {
  MatForm r = *this;
  std::swap(r(0, 1), r(1, 0));
  return r;
}

MatForm MatForm::bar() const {
  return constant(alg, tensors::eps_up()) * transpose() * constant(alg, tensors::eps());
}

MatForm MatForm::dagger() const {
  MatForm r = *this;
  for (auto& row : r.e)
    for (auto& x : row) x = alg->star(x);
  return r.transpose();
}

bool MatForm::is_zero() const { return nonzero_entries() == 0; }

int MatForm::nonzero_entries() const {
  int n = 0;
  for (const auto& row : e)
    for (const auto& x : row) n += !x.is_zero();
  return n;
}

MatForm MatForm::at_q1() const {
  MatForm r = *this;
  for (auto& row : r.e)
    for (auto& x : row) x = x.at_q1();
  return r;
}

std::array<std::array<std::string, 2>, 2> MatForm::strs() const {
  std::array<std::array<std::string, 2>, 2> s;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (*this)(i, j).str();
  return s;
}

std::ostream& operator<<(std::ostream& o, const MatForm& m) {
  return o << "[[" << m(0, 0) << ", " << m(0, 1) << "], [" << m(1, 0) << ", " << m(1, 1) << "]]";
}

namespace forms {

namespace {

Element du(const AlgebraPtr& A) {
  Element e = A->zero();
  for (const auto& lw : A->du_words()) e += RadialFn(lw.c) * A->word(lw.w);
  return e;
}

int xi_twist(const Algebra& A) { return A.twist(A.letter(letter::kXi, 0, 0)); }

}  // namespace

Element d(const Element& e) {
  const AlgebraPtr& A = e.algebra();
  if (!A) return e;
  Element out = A->zero();
  Element dU;
  bool have_du = false;
  for (const auto& [k, c] : e.terms()) {
    if (!k.D.empty() || k.lam != 0) fail(ErrorKind::SectorViolation, "d is defined on forms only");
    int sign = 1;
    for (std::size_t i = 0; i < k.L.size(); ++i) {
      auto l = static_cast<std::uint8_t>(k.L[i]);
      if (letter::kind(l) == letter::kXi) {
        sign = -sign;
        continue;
      }
      if (letter::kind(l) != letter::kX) continue;
      Element t = A->word(k.L.substr(0, i)) * A->gen(letter::kXi, 0, A->pair_of(l)) * A->word(k.L.substr(i + 1));
      out += RadialFn(sign) * t.times(c);
    }
    RadialFn dc = c.delta(xi_twist(*A));
    if (!dc.is_zero()) {
      if (!have_du) {
        dU = du(A);
        have_du = true;
      }
      out += RadialFn(sign) * (A->word(k.L) * dU.times(dc));
    }
  }
  return out;
}

MatForm d(const MatForm& m) {
  MatForm r = m;
  for (auto& row : r.e)
    for (auto& x : row) x = d(x);
  return r;
}

Element theta(const AlgebraPtr& A) {
  bool hat = A->config().variant == Variant::Hat;
  QRat c = (QRat(1) - QRat::q(hat ? 2 : -2)).inv();
  return RadialFn(c) * (A->coeff(RadialFn::u(-1)) * du(A));
}

Element theta_contracted(const AlgebraPtr& A) {
  Mat e = tensors::eps();
  Element s = A->zero();
  for (int a = 0; a < 2; ++a)
    for (int ap = 0; ap < 2; ++ap)
      for (int b = 0; b < 2; ++b)
        for (int bp = 0; bp < 2; ++bp) {
          QRat c = e(a, b) * e(ap, bp);
          if (!c.is_zero()) s += RadialFn(c) * (A->xi(a + 1, ap + 1) * A->x(b + 1, bp + 1));
        }
  QRat pre = QRat::q(-2) / (QRat::q(2) - QRat(1));
  return RadialFn(pre) * s.times(RadialFn::u(-1));
}

Element d_via_theta(const Element& e) {
  const AlgebraPtr& A = e.algebra();
  if (!A || e.is_zero()) return e;
  if (e.has_letter_kind(letter::kY) || e.has_letter_kind(letter::kRho))
    fail(ErrorKind::SectorViolation, "theta commutator is not asserted with braided generators");
  if (e.has_partial() || e.has_lambda()) fail(ErrorKind::SectorViolation, "d is defined on forms only");
  int p = e.xi_degree();
  Element th = theta(A);
  return -(th * e) + RadialFn(p % 2 ? -1 : 1) * (e * th);
}

namespace {

Element hodge_impl(const Element& w, const Mat& H) {
  const AlgebraPtr& A = w.algebra();
  if (!A || w.is_zero()) return w;
  if (w.xi_degree() != 2) fail(ErrorKind::WrongDegree, "hodge2 needs a 2-form");
  if (w.has_partial() || w.has_lambda()) fail(ErrorKind::WrongDegree, "hodge2 acts on forms");
  Element out = A->zero();
  for (const auto& [k, c] : w.terms()) {
    int i = A->pair_of(static_cast<std::uint8_t>(k.L[0])), j = A->pair_of(static_cast<std::uint8_t>(k.L[1]));
    Element s = A->zero();
    for (int h = 0; h < 4; ++h)
      for (int kk = 0; kk < 4; ++kk) {
        const QRat& v = H(4 * i + j, 4 * h + kk);
        if (!v.is_zero()) s += RadialFn(v) * (A->gen(letter::kXi, 0, h) * A->gen(letter::kXi, 0, kk));
      }
    out += (s * A->word(k.L.substr(2))).times(c);
  }
  return out;
}

}  // namespace

Element hodge2(const Element& w) {
  const tensors::Projectors& P = tensors::projectors_pair();
  return hodge_impl(w, P.a - P.ap);
}

MatForm hodge2(const MatForm& m) {
  MatForm r = m;
  for (auto& row : r.e)
    for (auto& x : row) x = hodge2(x);
  return r;
}

std::pair<Element, Element> decompose2(const Element& w) {
  const tensors::Projectors& P = tensors::projectors_pair();
  return {hodge_impl(w, P.a), hodge_impl(w, P.ap)};
}

MatForm build_f(const AlgebraPtr& A) {
  MatForm xi = MatForm::gens(A, letter::kXi);
  return xi * xi.bar() * MatForm::constant(A, tensors::eps());
}

MatForm build_fprime(const AlgebraPtr& A) {
  MatForm xi = MatForm::gens(A, letter::kXi);
  return xi.bar() * xi * MatForm::constant(A, tensors::eps());
}

MatForm build_a(const AlgebraPtr& A) {
  MatForm m = MatForm::gens(A, letter::kXi) * MatForm::constant(A, tensors::eps()) * MatForm::gens(A, letter::kX).transpose();
  Mat ps = tensors::proj_s();
  MatForm r = MatForm::zero(A);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!ps(i, j).is_zero()) r(i / 2, i % 2) += RadialFn(ps(i, j)) * m(j / 2, j % 2);
  return r;
}

MatForm build_ahat(const AlgebraPtr& A) {
  return -(MatForm::gens(A, letter::kXi) * MatForm::gens(A, letter::kX).bar());
}

XbluResult check_xblu(const AlgebraPtr& A, bool wrong_sign) {
  MatForm x = MatForm::gens(A, letter::kX), xi = MatForm::gens(A, letter::kXi);
  XbluResult r;
  RadialFn s(wrong_sign ? -1 : 1);
  r.lhs1 = x * xi.bar() + s * (xi * x.bar());
  r.lhs2 = x.bar() * xi + s * (xi.bar() * x);
  int e = A->config().variant == Variant::Hat ? -2 : 2;
  Element t = RadialFn(QRat::q(e) - QRat(1)) * theta(A).times(RadialFn::u());
  r.rhs = t * MatForm::identity(A);
  return r;
}

Element xixi_contraction(const AlgebraPtr& A) {
  MatForm xi = MatForm::gens(A, letter::kXi);
  MatForm m = xi * MatForm::constant(A, tensors::eps()) * xi.transpose();
  Mat e = tensors::eps();
  Element s = A->zero();
  for (int c = 0; c < 2; ++c)
    for (int d = 0; d < 2; ++d)
      if (!e(c, d).is_zero()) s += RadialFn(e(c, d)) * m(c, d);
  return s;
}

}  // namespace forms
}  // namespace qhopf
