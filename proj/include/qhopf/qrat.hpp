#pragma once

#include <string>

#include "qhopf/lpoly.hpp"

namespace qhopf {

// Element of Q(q): num/den with den an ordinary polynomial, den(0) != 0,
// positive leading coefficient, gcd(num, den) = 1.
class QRat {
 public:
  QRat() : den_(1) {}
  QRat(long c) : num_(c), den_(1) {}
  QRat(const mpz_class& c) : num_(c), den_(1) {}
  QRat(const mpq_class& c);
  QRat(const LPoly& p) : num_(p), den_(1) {}
  QRat(const LPoly& n, const LPoly& d);
  static QRat q(int e = 1) { return QRat(LPoly::q(e)); }
  // Quantum integer [n]_q = (q^n - q^-n)/(q - q^-1).
  static QRat qint(int n);

  const LPoly& num() const { return num_; }
  const LPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_poly() const { return den_.is_one(); }
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  mpq_class rational() const;

  QRat operator-() const;
  QRat inv() const;
  QRat pow(int e) const;
  friend QRat operator+(const QRat& a, const QRat& b);
  friend QRat operator-(const QRat& a, const QRat& b);
  friend QRat operator*(const QRat& a, const QRat& b);
  friend QRat operator/(const QRat& a, const QRat& b);
  QRat& operator+=(const QRat& o) { return *this = *this + o; }
  QRat& operator-=(const QRat& o) { return *this = *this - o; }
  QRat& operator*=(const QRat& o) { return *this = *this * o; }
  QRat& operator/=(const QRat& o) { return *this = *this / o; }
  friend bool operator==(const QRat& a, const QRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }
  friend bool operator<(const QRat& a, const QRat& b);

  // q -> q^-1
  QRat bar() const;
  mpq_class eval(const mpq_class& qv) const;
  std::size_t hash() const { return num_.hash() * 31 + den_.hash(); }
  // Parseable canonical text.
  std::string str() const;
  // True if str() is a single product (needs no parentheses as a factor).
  bool is_atomic_str() const;

 private:
  void normalize();
  LPoly num_;
  LPoly den_;
};

}  // namespace qhopf
