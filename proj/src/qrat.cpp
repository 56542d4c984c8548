#include "qhopf/qrat.hpp"

#include "qhopf/error.hpp"

namespace qhopf {

QRat::QRat(const mpq_class& c) : num_(c.get_num()), den_(c.get_den()) {}

QRat::QRat(const LPoly& n, const LPoly& d) : num_(n), den_(d) {
  if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "zero denominator in Q(q)");
  normalize();
}

QRat QRat::qint(int n) {
  LPoly r;
  int a = std::abs(n);
  for (int k = 0; k < a; ++k) r += LPoly::q(a - 1 - 2 * k);
  return n < 0 ? QRat(-r) : QRat(r);
}

void QRat::normalize() {
  if (num_.is_zero()) {
    den_ = LPoly(1);
    return;
  }
  if (den_.is_one()) return;
  int s = den_.low();
  if (s != 0) {
    den_ = den_.shifted(-s);
    num_ = num_.shifted(-s);
  }
  if (den_.size() > 1) {
    LPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = divexact(num_, g);
      den_ = divexact(den_, g);
    }
  }
  mpz_class c1 = num_.content(), c2 = den_.content(), g;
  mpz_gcd(g.get_mpz_t(), c1.get_mpz_t(), c2.get_mpz_t());
  if (den_.lead() < 0) g = -g;
  if (g != 1) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
}

mpq_class QRat::rational() const {
  if (!is_rational()) fail(ErrorKind::NotSpecializable, "value depends on q: " + str());
  mpq_class r(num_.coeff(0), den_.coeff(0));
  r.canonicalize();
  return r;
}

QRat QRat::operator-() const {
  QRat r = *this;
  r.num_ = -r.num_;
  return r;
}

QRat QRat::inv() const {
  if (num_.is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in Q(q)");
  QRat r;
  r.num_ = den_;
  r.den_ = num_;
  r.normalize();
  return r;
}

QRat QRat::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  QRat r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

QRat operator+(const QRat& a, const QRat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  QRat r;
  if (a.den_ == b.den_) {
    r.num_ = a.num_ + b.num_;
    r.den_ = a.den_;
  } else {
    r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
    r.den_ = a.den_ * b.den_;
  }
  r.normalize();
  return r;
}

QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }

QRat operator*(const QRat& a, const QRat& b) {
  if (a.is_zero() || b.is_zero()) return QRat();
  QRat r;
  r.num_ = a.num_ * b.num_;
  r.den_ = a.den_ * b.den_;
  if (!(a.den_.is_one() && b.den_.is_one())) r.normalize();
  return r;
}

QRat operator/(const QRat& a, const QRat& b) { return a * b.inv(); }

bool operator<(const QRat& a, const QRat& b) {
  if (a.num_ != b.num_) return a.num_ < b.num_;
  return a.den_ < b.den_;
}

QRat QRat::bar() const { return QRat(num_.reversed(), den_.reversed()); }

mpq_class QRat::eval(const mpq_class& qv) const {
  mpq_class d = den_.eval(qv);
  if (d == 0) fail(ErrorKind::PoleAtPoint, "denominator vanishes at q = " + qv.get_str());
  mpq_class r = num_.eval(qv) / d;
  r.canonicalize();
  return r;
}

namespace {

bool single_term(const LPoly& p) {
  int n = 0;
  for (const auto& c : p.coeffs())
    if (c != 0) ++n;
  return n <= 1;
}

}  // namespace

bool QRat::is_atomic_str() const {
  return den_.is_one() && single_term(num_) && num_.coeff(num_.low()) > 0;
}

std::string QRat::str() const {
  std::string n = num_.str();
  if (den_.is_one()) return n;
  std::string d = den_.str();
  if (!single_term(num_)) n = "(" + n + ")";
  if (!single_term(den_)) d = "(" + d + ")";
  else if (den_.is_constant()) return n + "/" + d;
  return n + "*" + d + "^-1";
}

}  // namespace qhopf
