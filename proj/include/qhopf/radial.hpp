#pragma once

#include <map>
#include <string>
#include <vector>

#include "qhopf/ratfn.hpp"

namespace qhopf {

// Square roots adjoined to the coefficient field.
//   kSqrtU   sqrt(u), sigma: -> q sqrt(u)
//   kRho     sqrt(p)
//   kSqrt2   sqrt(2)
//   S_k      sqrt(q^{2k} u / (q^{2k} u + p)), sigma: S_k -> S_{k+1}
namespace rad {
constexpr int kSqrtU = 0;
constexpr int kRho = 1;
constexpr int kSqrt2 = 2;
constexpr int kSBase = 1000;
inline int S(int k) { return kSBase + k; }
inline bool is_S(int id) { return id >= kSBase - 500; }
}  // namespace rad

using RadSet = std::vector<int>;  // sorted, distinct radical ids

// Finite sum of radical monomials with RatFn coefficients: the coefficient
// field of the algebra.
class RadialFn {
 public:
  RadialFn() = default;
  RadialFn(long c) : RadialFn(RatFn(c)) {}
  RadialFn(const QRat& c) : RadialFn(RatFn(c)) {}
  RadialFn(const RatFn& f);
  static RadialFn radical(int id);
  static RadialFn sqrt_u() { return radical(rad::kSqrtU); }
  static RadialFn rho() { return radical(rad::kRho); }
  static RadialFn sqrt2() { return radical(rad::kSqrt2); }
  static RadialFn s(int k = 0) { return radical(rad::S(k)); }
  static RadialFn u(int e = 1) { return RatFn::u(e); }
  static RadialFn p(int e = 1) { return RatFn::p(e); }
  static RadialFn q(int e = 1) { return QRat::q(e); }
  // Square of a radical as a rational function.
  static RatFn radical_square(int id);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_rational() const;  // no radicals
  bool is_scalar() const;    // in Q(q)
  QRat scalar() const;
  const RatFn& rational() const;
  bool is_polynomial() const;  // polynomial in u, p without radicals
  const std::map<RadSet, RatFn>& terms() const { return terms_; }

  RadialFn operator-() const;
  friend RadialFn operator+(const RadialFn& a, const RadialFn& b);
  friend RadialFn operator-(const RadialFn& a, const RadialFn& b) { return a + (-b); }
  friend RadialFn operator*(const RadialFn& a, const RadialFn& b);
  friend RadialFn operator/(const RadialFn& a, const RadialFn& b) { return a * b.inv(); }
  RadialFn& operator+=(const RadialFn& o) { return *this = *this + o; }
  RadialFn& operator-=(const RadialFn& o) { return *this = *this - o; }
  RadialFn& operator*=(const RadialFn& o) { return *this = *this * o; }
  RadialFn inv() const;
  RadialFn pow(int e) const;
  friend bool operator==(const RadialFn& a, const RadialFn& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const RadialFn& a, const RadialFn& b) { return !(a == b); }
  friend bool operator<(const RadialFn& a, const RadialFn& b) { return a.terms_ < b.terms_; }

  // u -> q^{2t} u, extended to the radicals.
  RadialFn sigma(int t = 1) const;
  // Difference quotient (sigma^t f - f) / ((q^{2t} - 1) u).
  RadialFn delta(int t = 1) const;
  // Flip the sign of every radical with the given id.
  RadialFn conjugate(int id) const;
  mpq_class specialize(const mpq_class& qv, const mpq_class& uv, const mpq_class& pv) const;
  RadialFn at_q1() const;
  std::size_t hash() const;
  std::string str() const;
  // True if str() needs no parentheses inside a product.
  bool is_atomic_str() const;

 private:
  void add_term(const RadSet& r, const RatFn& f);
  std::map<RadSet, RatFn> terms_;
};

std::string radical_name(int id);
// Integer square root of a non-negative rational if it is a perfect square.
bool rational_sqrt(const mpq_class& x, mpq_class& out);
// No top-level sum or leading sign: usable as a factor without parentheses.
bool is_product_str(const std::string& s);

}  // namespace qhopf
