#include "qhopf/lpoly.hpp"

#include <algorithm>
#include <functional>

#include "qhopf/error.hpp"

namespace qhopf {

LPoly::LPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

LPoly::LPoly(const mpz_class& c) {
  if (c != 0) c_.push_back(c);
}

LPoly LPoly::monomial(const mpz_class& c, int e) {
  LPoly r;
  if (c != 0) {
    r.low_ = e;
    r.c_.push_back(c);
  }
  return r;
}

bool LPoly::is_one() const { return low_ == 0 && c_.size() == 1 && c_[0] == 1; }

mpz_class LPoly::coeff(int e) const {
  if (c_.empty() || e < low_ || e > high()) return 0;
  return c_[e - low_];
}

void LPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  if (k > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
    low_ += static_cast<int>(k);
  }
  if (c_.empty()) low_ = 0;
}

LPoly LPoly::operator-() const {
  LPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

LPoly& LPoly::operator+=(const LPoly& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high(), o.high());
  if (lo < low_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), mpz_class(0));
    low_ = lo;
  }
  if (static_cast<int>(c_.size()) < hi - lo + 1) c_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[o.low_ - low_ + i] += o.c_[i];
  trim();
  return *this;
}

LPoly& LPoly::operator-=(const LPoly& o) { return *this += -o; }

LPoly operator*(const LPoly& a, const LPoly& b) {
  LPoly r;
  if (a.c_.empty() || b.c_.empty()) return r;
  r.low_ = a.low_ + b.low_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

LPoly& LPoly::operator*=(const LPoly& o) { return *this = *this * o; }

bool operator<(const LPoly& a, const LPoly& b) {
  if (a.low_ != b.low_) return a.low_ < b.low_;
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

LPoly LPoly::shifted(int s) const {
  LPoly r = *this;
  if (!r.c_.empty()) r.low_ += s;
  return r;
}

LPoly LPoly::scaled(const mpz_class& k) const {
  if (k == 0) return LPoly();
  LPoly r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

LPoly LPoly::reversed() const {
  LPoly r;
  if (c_.empty()) return r;
  r.c_.assign(c_.rbegin(), c_.rend());
  r.low_ = -high();
  return r;
}

mpz_class LPoly::content() const {
  mpz_class g = 0;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

LPoly LPoly::divexact(const mpz_class& k) const {
  LPoly r = *this;
  for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
  return r;
}

mpq_class LPoly::eval(const mpq_class& x) const {
  if (c_.empty()) return 0;
  if (x == 0) {
    if (low_ < 0) fail(ErrorKind::PoleAtPoint, "Laurent polynomial evaluated at q = 0");
    return low_ == 0 ? mpq_class(c_[0]) : mpq_class(0);
  }
  mpq_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  mpq_class p = 1;
  int e = low_;
  mpq_class base = e < 0 ? 1 / x : x;
  for (int k = 0; k < std::abs(e); ++k) p *= base;
  acc *= p;
  acc.canonicalize();
  return acc;
}

std::size_t LPoly::hash() const {
  std::size_t h = std::hash<int>()(low_);
  for (const auto& x : c_) {
    std::size_t v = mpz_fdiv_ui(x.get_mpz_t(), 1000000007UL) + (x < 0 ? 17 : 0);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

std::string monomial_str(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace

std::string LPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const mpz_class& c = c_[i];
    if (c == 0) continue;
    int e = low_ + static_cast<int>(i);
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string m = monomial_str(var, e);
    if (m.empty()) {
      out += a.get_str();
    } else if (a == 1) {
      out += m;
    } else {
      out += a.get_str() + "*" + m;
    }
  }
  return out;
}

namespace {

// Dense ordinary polynomials (index = degree) for the gcd kernel.
using Dense = std::vector<mpz_class>;

void dtrim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense to_dense(const LPoly& p) {
  return Dense(p.coeffs().begin(), p.coeffs().end());
}

LPoly from_dense(const Dense& d) {
  LPoly r;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] != 0) r += LPoly::monomial(d[i], static_cast<int>(i));
  return r;
}

mpz_class dcontent(const Dense& a) {
  mpz_class g = 0;
  for (const auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

void dprimitive(Dense& a) {
  dtrim(a);
  if (a.empty()) return;
  mpz_class g = dcontent(a);
  if (a.back() < 0) g = -g;
  for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b.
Dense prem(Dense a, const Dense& b) {
  const mpz_class& lb = b.back();
  std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    mpz_class la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& x : a) x *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    a.pop_back();
    dtrim(a);
  }
  return a;
}

}  // namespace

LPoly gcd(const LPoly& a, const LPoly& b) {
  if (a.is_zero() && b.is_zero()) return LPoly();
  if (a.is_zero()) {
    LPoly r = b.shifted(-b.low());
    return r.lead() < 0 ? -r : r;
  }
  if (b.is_zero()) {
    LPoly r = a.shifted(-a.low());
    return r.lead() < 0 ? -r : r;
  }
  mpz_class ca = a.content(), cb = b.content(), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Dense A = to_dense(a), B = to_dense(b);
  dprimitive(A);
  dprimitive(B);
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty() && B.size() > 1) {
    Dense R = prem(A, B);
    A = std::move(B);
    B = std::move(R);
    dprimitive(B);
  }
  if (!B.empty()) A = Dense{1};
  dprimitive(A);
  for (auto& x : A) x *= cg;
  return from_dense(A);
}

bool try_divexact(const LPoly& a, const LPoly& b, LPoly& quo) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.is_zero()) {
    quo = LPoly();
    return true;
  }
  Dense A = to_dense(a), B = to_dense(b);
  if (A.size() < B.size()) return false;
  Dense Q(A.size() - B.size() + 1);
  const mpz_class& lb = B.back();
  for (std::size_t k = Q.size(); k-- > 0;) {
    const mpz_class& top = A[k + B.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    Q[k] = c;
    for (std::size_t i = 0; i < B.size(); ++i) A[k + i] -= c * B[i];
  }
  for (const auto& x : A)
    if (x != 0) return false;
  quo = from_dense(Q).shifted(a.low() - b.low());
  return true;
}

LPoly divexact(const LPoly& a, const LPoly& b) {
  LPoly q;
  if (!try_divexact(a, b, q)) fail(ErrorKind::NotInvertible, "inexact polynomial division");
  return q;
}

}  // namespace qhopf
