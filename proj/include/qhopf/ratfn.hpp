#pragma once

#include <map>
#include <string>
#include <utility>

#include "qhopf/qrat.hpp"

namespace qhopf {

// Rational function in u, p over Q(q) whose denominator factors over the
// families u, p, L_k = q^{2k}u + p and M_k = 1 + 2q^{2k}u.
class RatFn {
 public:
  using Key = std::pair<int, int>;  // (u exponent, p exponent)
  using Poly2 = std::map<Key, LPoly>;

  RatFn() : dq_(1) {}
  RatFn(long c) : RatFn(QRat(c)) {}
  RatFn(const QRat& c);
  static RatFn u(int e = 1);
  static RatFn p(int e = 1);
  // (q^{2k} u + p)^m
  static RatFn L(int k, int m = 1);
  // (1 + 2 q^{2k} u)^m
  static RatFn M(int k, int m = 1);

  bool is_zero() const { return num_.empty(); }
  bool is_one() const;
  // Independent of u and p.
  bool is_scalar() const;
  QRat scalar() const;
  // Polynomial in u and p (no u, p, L or M denominators).
  bool is_polynomial() const;
  bool depends_on_p() const;

  RatFn operator-() const;
  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
  RatFn inv() const;
  RatFn pow(int e) const;
  friend bool operator==(const RatFn& a, const RatFn& b);
  friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }
  friend bool operator<(const RatFn& a, const RatFn& b);

  // u -> q^{2t} u
  RatFn sigma(int t = 1) const;
  mpq_class eval(const mpq_class& qv, const mpq_class& uv, const mpq_class& pv) const;
  // q -> 1, keeping u and p.
  RatFn at_q1() const;
  std::size_t hash() const;
  std::string str() const;

  const Poly2& numerator() const { return num_; }
  const LPoly& dq() const { return dq_; }
  int u_exp() const { return ue_; }
  int p_exp() const { return pe_; }
  const std::map<int, int>& lden() const { return lden_; }
  const std::map<int, int>& mden() const { return mden_; }

 private:
  void normalize();
  Poly2 num_;
  LPoly dq_;
  int ue_ = 0;
  int pe_ = 0;
  std::map<int, int> lden_;
  std::map<int, int> mden_;
};

}  // namespace qhopf
