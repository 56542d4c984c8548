#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace qhopf {

// Laurent polynomial in q with integer coefficients.
class LPoly {
 public:
  LPoly() = default;
  LPoly(long c);
  LPoly(const mpz_class& c);
  static LPoly monomial(const mpz_class& c, int e);
  static LPoly q(int e = 1) { return monomial(1, e); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_constant() const { return c_.empty() || (low_ == 0 && c_.size() == 1); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  // Coefficient of q^e (zero outside the support).
  mpz_class coeff(int e) const;
  const mpz_class& lead() const { return c_.back(); }
  const mpz_class& trail() const { return c_.front(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }

  LPoly operator-() const;
  LPoly& operator+=(const LPoly& o);
  LPoly& operator-=(const LPoly& o);
  LPoly& operator*=(const LPoly& o);
  friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
  friend LPoly operator-(LPoly a, const LPoly& b) { return a -= b; }
  friend LPoly operator*(const LPoly& a, const LPoly& b);
  friend bool operator==(const LPoly& a, const LPoly& b) { return a.low_ == b.low_ && a.c_ == b.c_; }
  friend bool operator!=(const LPoly& a, const LPoly& b) { return !(a == b); }
  // Total order used for canonical sorting only.
  friend bool operator<(const LPoly& a, const LPoly& b);

  LPoly shifted(int s) const;
  LPoly scaled(const mpz_class& k) const;
  // q -> q^{-1}
  LPoly reversed() const;
  mpz_class content() const;
  // Exact division by an integer.
  LPoly divexact(const mpz_class& k) const;
  mpq_class eval(const mpq_class& x) const;
  std::size_t hash() const;
  std::string str(const std::string& var = "q") const;

 private:
  void trim();
  int low_ = 0;
  std::vector<mpz_class> c_;
};

// Polynomial gcd in Z[q, q^-1], normalized to low() == 0, positive leading coefficient.
LPoly gcd(const LPoly& a, const LPoly& b);
// Exact Laurent division; throws if b does not divide a.
LPoly divexact(const LPoly& a, const LPoly& b);
// Returns true and sets quo if b divides a exactly.
bool try_divexact(const LPoly& a, const LPoly& b, LPoly& quo);

}  // namespace qhopf
