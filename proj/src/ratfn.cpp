#include "qhopf/ratfn.hpp"

#include <algorithm>
#include <vector>

#include "qhopf/error.hpp"

namespace qhopf {

namespace {

using Poly2 = RatFn::Poly2;
constexpr int kFactorSearch = 12;

void add_to(Poly2& p, const RatFn::Key& k, const LPoly& c) {
  if (c.is_zero()) return;
  auto it = p.find(k);
  if (it == p.end()) {
    p.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

Poly2 mul2(const Poly2& a, const Poly2& b) {
  Poly2 r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) add_to(r, {ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return r;
}

Poly2 scale2(const Poly2& a, const LPoly& c) {
  Poly2 r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : a) r.emplace(k, v * c);
  return r;
}

Poly2 shift2(const Poly2& a, int du, int dp) {
  Poly2 r;
  for (const auto& [k, v] : a) r.emplace(RatFn::Key{k.first + du, k.second + dp}, v);
  return r;
}

Poly2 lfactor(int k) { return Poly2{{{1, 0}, LPoly::q(2 * k)}, {{0, 1}, LPoly(1)}}; }
Poly2 mfactor(int k) { return Poly2{{{0, 0}, LPoly(1)}, {{1, 0}, LPoly::monomial(2, 2 * k)}}; }

Poly2 power2(const Poly2& f, int m) {
  Poly2 r{{{0, 0}, LPoly(1)}};
  for (int i = 0; i < m; ++i) r = mul2(r, f);
  return r;
}

// Divide by (q^{2k} u + p), treating the numerator as a polynomial in p.
bool div_l(const Poly2& n, int k, Poly2& quo) {
  int pdeg = 0;
  for (const auto& [key, v] : n) pdeg = std::max(pdeg, key.second);
  if (pdeg == 0) return false;
  std::vector<std::map<int, LPoly>> rows(static_cast<std::size_t>(pdeg + 1));
  for (const auto& [key, v] : n) rows[static_cast<std::size_t>(key.second)][key.first] = v;
  LPoly c = LPoly::q(2 * k);
  std::vector<std::map<int, LPoly>> q(static_cast<std::size_t>(pdeg));
  q[static_cast<std::size_t>(pdeg - 1)] = rows[static_cast<std::size_t>(pdeg)];
  for (int j = pdeg - 1; j >= 0; --j) {
    std::map<int, LPoly> cur = rows[static_cast<std::size_t>(j)];
    for (const auto& [e, v] : q[static_cast<std::size_t>(j)]) {
      LPoly t = cur.count(e + 1) ? cur[e + 1] : LPoly();
      t -= c * v;
      if (t.is_zero()) cur.erase(e + 1); else cur[e + 1] = t;
    }
    if (j == 0) {
      if (!cur.empty()) return false;
    } else {
      q[static_cast<std::size_t>(j - 1)] = cur;
    }
  }
  quo.clear();
  for (int j = 0; j < pdeg; ++j)
    for (const auto& [e, v] : q[static_cast<std::size_t>(j)])
      if (!v.is_zero()) quo[{e, j}] = v;
  return true;
}

// Divide by (1 + 2 q^{2k} u), treating the numerator as a polynomial in u.
bool div_m(const Poly2& n, int k, Poly2& quo) {
  int udeg = 0;
  for (const auto& [key, v] : n) udeg = std::max(udeg, key.first);
  if (udeg == 0) return false;
  std::vector<std::map<int, LPoly>> cols(static_cast<std::size_t>(udeg + 1));
  for (const auto& [key, v] : n) cols[static_cast<std::size_t>(key.first)][key.second] = v;
  LPoly c = LPoly::monomial(2, 2 * k);
  std::vector<std::map<int, LPoly>> q(static_cast<std::size_t>(udeg));
  std::map<int, LPoly> prev;
  for (int i = 0; i <= udeg; ++i) {
    std::map<int, LPoly> cur = cols[static_cast<std::size_t>(i)];
    for (const auto& [e, v] : prev) {
      LPoly t = cur.count(e) ? cur[e] : LPoly();
      t -= c * v;
      if (t.is_zero()) cur.erase(e); else cur[e] = t;
    }
    if (i == udeg) {
      if (!cur.empty()) return false;
    } else {
      q[static_cast<std::size_t>(i)] = cur;
      prev = cur;
    }
  }
  quo.clear();
  for (int i = 0; i < udeg; ++i)
    for (const auto& [e, v] : q[static_cast<std::size_t>(i)])
      if (!v.is_zero()) quo[{i, e}] = v;
  return true;
}

}  // namespace

RatFn::RatFn(const QRat& c) : dq_(1) {
  if (c.is_zero()) return;
  num_[{0, 0}] = c.num();
  dq_ = c.den();
}

RatFn RatFn::u(int e) {
  RatFn r(1);
  r.ue_ = e;
  return r;
}

RatFn RatFn::p(int e) {
  RatFn r(1);
  r.pe_ = e;
  return r;
}

RatFn RatFn::L(int k, int m) {
  RatFn r(1);
  if (m >= 0) {
    r.num_ = power2(lfactor(k), m);
  } else {
    r.lden_[k] = -m;
  }
  return r;
}

RatFn RatFn::M(int k, int m) {
  RatFn r(1);
  if (m >= 0) {
    r.num_ = power2(mfactor(k), m);
  } else {
    r.mden_[k] = -m;
  }
  return r;
}

bool RatFn::is_one() const {
  return ue_ == 0 && pe_ == 0 && lden_.empty() && mden_.empty() && dq_.is_one() && num_.size() == 1 &&
         num_.begin()->first == Key{0, 0} && num_.begin()->second.is_one();
}

bool RatFn::is_scalar() const {
  if (num_.empty()) return true;
  return ue_ == 0 && pe_ == 0 && lden_.empty() && mden_.empty() && num_.size() == 1 &&
         num_.begin()->first == Key{0, 0};
}

QRat RatFn::scalar() const {
  if (!is_scalar()) fail(ErrorKind::NotSpecializable, "coefficient depends on u or p: " + str());
  if (num_.empty()) return QRat();
  return QRat(num_.begin()->second, dq_);
}

bool RatFn::is_polynomial() const {
  return num_.empty() || (ue_ >= 0 && pe_ >= 0 && lden_.empty() && mden_.empty());
}

bool RatFn::depends_on_p() const {
  if (pe_ != 0 || !lden_.empty()) return !num_.empty();
  for (const auto& [k, v] : num_)
    if (k.second != 0) return true;
  return false;
}

void RatFn::normalize() {
  if (num_.empty()) {
    dq_ = LPoly(1);
    ue_ = pe_ = 0;
    lden_.clear();
    mden_.clear();
    return;
  }
  int mu = num_.begin()->first.first, mp = num_.begin()->first.second;
  for (const auto& [k, v] : num_) {
    mu = std::min(mu, k.first);
    mp = std::min(mp, k.second);
  }
  if (mu != 0 || mp != 0) {
    num_ = shift2(num_, -mu, -mp);
    ue_ += mu;
    pe_ += mp;
  }
  for (auto it = lden_.begin(); it != lden_.end();) {
    Poly2 quo;
    while (it->second > 0 && div_l(num_, it->first, quo)) {
      num_ = std::move(quo);
      --it->second;
    }
    it = it->second == 0 ? lden_.erase(it) : std::next(it);
  }
  for (auto it = mden_.begin(); it != mden_.end();) {
    Poly2 quo;
    while (it->second > 0 && div_m(num_, it->first, quo)) {
      num_ = std::move(quo);
      --it->second;
    }
    it = it->second == 0 ? mden_.erase(it) : std::next(it);
  }
  int s = dq_.low();
  if (s != 0) {
    dq_ = dq_.shifted(-s);
    for (auto& [k, v] : num_) v = v.shifted(-s);
  }
  if (!dq_.is_one()) {
    LPoly g = dq_;
    for (const auto& [k, v] : num_) {
      g = gcd(g, v);
      if (g.is_one()) break;
    }
    if (!g.is_one()) {
      dq_ = divexact(dq_, g);
      for (auto& [k, v] : num_) v = divexact(v, g);
    }
  }
  if (dq_.lead() < 0) {
    dq_ = -dq_;
    for (auto& [k, v] : num_) v = -v;
  }
}

RatFn RatFn::operator-() const {
  RatFn r = *this;
  for (auto& [k, v] : r.num_) v = -v;
  return r;
}

RatFn operator*(const RatFn& a, const RatFn& b) {
  if (a.is_zero() || b.is_zero()) return RatFn();
  RatFn r;
  r.num_ = mul2(a.num_, b.num_);
  r.dq_ = a.dq_ * b.dq_;
  r.ue_ = a.ue_ + b.ue_;
  r.pe_ = a.pe_ + b.pe_;
  r.lden_ = a.lden_;
  for (const auto& [k, m] : b.lden_) r.lden_[k] += m;
  r.mden_ = a.mden_;
  for (const auto& [k, m] : b.mden_) r.mden_[k] += m;
  bool cancel = !(a.lden_.empty() && a.mden_.empty() && b.lden_.empty() && b.mden_.empty());
  if (cancel || !r.dq_.is_one()) {
    r.normalize();
  } else {
    if (r.num_.empty()) r = RatFn();
  }
  return r;
}

RatFn operator+(const RatFn& a, const RatFn& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RatFn r;
  r.ue_ = std::min(a.ue_, b.ue_);
  r.pe_ = std::min(a.pe_, b.pe_);
  std::map<int, int> ld = a.lden_, md = a.mden_;
  for (const auto& [k, m] : b.lden_) ld[k] = std::max(ld[k], m);
  for (const auto& [k, m] : b.mden_) md[k] = std::max(md[k], m);
  LPoly g = a.dq_.is_one() || b.dq_.is_one() ? LPoly(1) : gcd(a.dq_, b.dq_);
  LPoly fa = divexact(b.dq_, g), fb = divexact(a.dq_, g);
  r.dq_ = a.dq_ * fa;
  auto lift = [&](const RatFn& x, const LPoly& f) {
    Poly2 n = shift2(x.num_, x.ue_ - r.ue_, x.pe_ - r.pe_);
    if (!f.is_one()) n = scale2(n, f);
    for (const auto& [k, m] : ld) {
      auto it = x.lden_.find(k);
      int have = it == x.lden_.end() ? 0 : it->second;
      if (m > have) n = mul2(n, power2(lfactor(k), m - have));
    }
    for (const auto& [k, m] : md) {
      auto it = x.mden_.find(k);
      int have = it == x.mden_.end() ? 0 : it->second;
      if (m > have) n = mul2(n, power2(mfactor(k), m - have));
    }
    return n;
  };
  r.num_ = lift(a, fa);
  for (const auto& [k, v] : lift(b, fb)) add_to(r.num_, k, v);
  r.lden_ = std::move(ld);
  r.mden_ = std::move(md);
  r.normalize();
  return r;
}

RatFn RatFn::inv() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero coefficient");
  Poly2 n = num_;
  std::map<int, int> nl, nm;
  bool progress = true;
  while (progress && !(n.size() == 1 && n.begin()->first == Key{0, 0})) {
    progress = false;
    for (int k = -kFactorSearch; k <= kFactorSearch && !progress; ++k) {
      Poly2 quo;
      if (div_l(n, k, quo)) {
        n = std::move(quo);
        ++nl[k];
        progress = true;
      } else if (div_m(n, k, quo)) {
        n = std::move(quo);
        ++nm[k];
        progress = true;
      }
    }
  }
  if (!(n.size() == 1 && n.begin()->first == Key{0, 0}))
    fail(ErrorKind::NotInvertible, "coefficient outside the admissible denominators: " + str());
  RatFn r(QRat(dq_, n.begin()->second));
  r.ue_ = -ue_;
  r.pe_ = -pe_;
  for (const auto& [k, m] : lden_) r = r * L(k, m);
  for (const auto& [k, m] : mden_) r = r * M(k, m);
  for (const auto& [k, m] : nl) r = r * L(k, -m);
  for (const auto& [k, m] : nm) r = r * M(k, -m);
  return r;
}

RatFn RatFn::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  RatFn r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool operator==(const RatFn& a, const RatFn& b) {
  return a.ue_ == b.ue_ && a.pe_ == b.pe_ && a.dq_ == b.dq_ && a.lden_ == b.lden_ && a.mden_ == b.mden_ &&
         a.num_ == b.num_;
}

bool operator<(const RatFn& a, const RatFn& b) {
  if (a.ue_ != b.ue_) return a.ue_ < b.ue_;
  if (a.pe_ != b.pe_) return a.pe_ < b.pe_;
  if (a.lden_ != b.lden_) return a.lden_ < b.lden_;
  if (a.mden_ != b.mden_) return a.mden_ < b.mden_;
  if (a.dq_ != b.dq_) return a.dq_ < b.dq_;
  return std::lexicographical_compare(a.num_.begin(), a.num_.end(), b.num_.begin(), b.num_.end());
}

RatFn RatFn::sigma(int t) const {
  if (t == 0 || is_zero()) return *this;
  RatFn r;
  for (const auto& [k, v] : num_) r.num_.emplace(k, v.shifted(2 * t * (k.first + ue_)));
  r.dq_ = dq_;
  r.ue_ = ue_;
  r.pe_ = pe_;
  for (const auto& [k, m] : lden_) r.lden_[k + t] = m;
  for (const auto& [k, m] : mden_) r.mden_[k + t] = m;
  r.normalize();
  return r;
}

namespace {

mpq_class qpow(const mpq_class& b, int e) {
  if (e < 0) {
    if (b == 0) fail(ErrorKind::PoleAtPoint, "negative power of zero");
    return qpow(1 / b, -e);
  }
  mpq_class r = 1, x = b;
  while (e) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

}  // namespace

mpq_class RatFn::eval(const mpq_class& qv, const mpq_class& uv, const mpq_class& pv) const {
  if (num_.empty()) return 0;
  mpq_class den = dq_.eval(qv);
  for (const auto& [k, m] : lden_) den *= qpow(qpow(qv, 2 * k) * uv + pv, m);
  for (const auto& [k, m] : mden_) den *= qpow(1 + 2 * qpow(qv, 2 * k) * uv, m);
  if (den == 0 || (ue_ < 0 && uv == 0) || (pe_ < 0 && pv == 0))
    fail(ErrorKind::PoleAtPoint, "denominator of " + str() + " vanishes at the point");
  mpq_class n = 0;
  for (const auto& [k, v] : num_) n += v.eval(qv) * qpow(uv, k.first) * qpow(pv, k.second);
  mpq_class r = n * qpow(uv, ue_) * qpow(pv, pe_) / den;
  r.canonicalize();
  return r;
}

RatFn RatFn::at_q1() const {
  if (num_.empty()) return RatFn();
  mpq_class d = dq_.eval(1);
  if (d == 0) fail(ErrorKind::PoleAtPoint, "coefficient has a pole at q = 1: " + str());
  RatFn r;
  for (const auto& [k, v] : num_) {
    mpz_class c = v.eval(1).get_num();
    if (c != 0) r.num_[k] = LPoly(c);
  }
  if (r.num_.empty()) return RatFn();
  r.normalize();
  RatFn out = r * RatFn(QRat(1 / d)) * u(ue_) * p(pe_);
  int lm = 0, mm = 0;
  for (const auto& [k, m] : lden_) lm += m;
  for (const auto& [k, m] : mden_) mm += m;
  if (lm) out = out * L(0, -lm);
  if (mm) out = out * M(0, -mm);
  return out;
}

std::size_t RatFn::hash() const {
  std::size_t h = dq_.hash() ^ (static_cast<std::size_t>(ue_) * 1315423911u) ^ (static_cast<std::size_t>(pe_) << 7);
  for (const auto& [k, v] : num_)
    h = h * 1000003u ^ (v.hash() + static_cast<std::size_t>(k.first) * 31 + static_cast<std::size_t>(k.second));
  for (const auto& [k, m] : lden_) h = h * 7919u ^ static_cast<std::size_t>(k * 64 + m);
  for (const auto& [k, m] : mden_) h = h * 104729u ^ static_cast<std::size_t>(k * 64 + m);
  return h;
}

namespace {

std::string power_str(const std::string& base, int e) {
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

std::string lfactor_str(int k) {
  if (k == 0) return "(U + p)";
  return "(" + LPoly::q(2 * k).str() + "*U + p)";
}

std::string mfactor_str(int k) { return "(1 + " + LPoly::monomial(2, 2 * k).str() + "*U)"; }

bool single(const LPoly& p) {
  int n = 0;
  for (const auto& c : p.coeffs())
    if (c != 0) ++n;
  return n == 1;
}

}  // namespace

std::string RatFn::str() const {
  if (num_.empty()) return "0";
  // Numerator in descending u, p order of the printed monomials.
  std::vector<std::string> terms;
  bool first = true;
  std::string numer;
  for (auto it = num_.rbegin(); it != num_.rend(); ++it) {
    const auto& [k, v] = *it;
    std::vector<std::string> f;
    if (k.first) f.push_back(power_str("U", k.first));
    if (k.second) f.push_back(power_str("p", k.second));
    std::string mono;
    for (std::size_t i = 0; i < f.size(); ++i) mono += (i ? "*" : "") + f[i];
    std::string cs;
    bool neg = false;
    if (single(v)) {
      mpz_class c = v.coeff(v.low());
      neg = c < 0;
      LPoly a = neg ? -v : v;
      cs = a.is_one() ? "" : a.str();
    } else {
      cs = "(" + v.str() + ")";
    }
    std::string t;
    if (cs.empty()) t = mono.empty() ? "1" : mono;
    else t = mono.empty() ? cs : cs + "*" + mono;
    if (first) numer += neg ? "-" + t : t;
    else numer += neg ? " - " + t : " + " + t;
    first = false;
  }
  std::vector<std::string> den;
  if (ue_) den.push_back(power_str("U", ue_));
  if (pe_) den.push_back(power_str("p", pe_));
  for (const auto& [k, m] : lden_) den.push_back(power_str(lfactor_str(k), -m));
  for (const auto& [k, m] : mden_) den.push_back(power_str(mfactor_str(k), -m));
  if (!dq_.is_one()) {
    if (dq_.is_constant()) den.push_back(power_str(dq_.str(), -1));
    else den.push_back(power_str("(" + dq_.str() + ")", -1));
  }
  if (den.empty()) return numer;
  std::string out;
  if (numer == "1") {
    out.clear();
  } else if (numer == "-1") {
    out = "-";
  } else if (num_.size() > 1) {
    out = "(" + numer + ")*";
  } else {
    out = numer + "*";
  }
  for (std::size_t i = 0; i < den.size(); ++i) out += (i ? "*" : "") + den[i];
  return out;
}

}  // namespace qhopf
