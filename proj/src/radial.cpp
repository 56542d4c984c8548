#include "qhopf/radial.hpp"

#include <algorithm>

#include "qhopf/error.hpp"

namespace qhopf {

std::string radical_name(int id) {
  if (id == rad::kSqrtU) return "absx";
  if (id == rad::kRho) return "rho";
  if (id == rad::kSqrt2) return "sqrt2";
  int k = id - rad::kSBase;
  if (k == 0) return "s";
  return "s[" + std::to_string(k) + "]";
}

bool rational_sqrt(const mpq_class& x, mpq_class& out) {
  if (x < 0) return false;
  const mpz_class& n = x.get_num();
  const mpz_class& d = x.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class a, b;
  mpz_sqrt(a.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(b.get_mpz_t(), d.get_mpz_t());
  out = mpq_class(a, b);
  out.canonicalize();
  return true;
}

RadialFn::RadialFn(const RatFn& f) {
  if (!f.is_zero()) terms_.emplace(RadSet{}, f);
}

RadialFn RadialFn::radical(int id) {
  RadialFn r;
  r.terms_.emplace(RadSet{id}, RatFn(1));
  return r;
}

RatFn RadialFn::radical_square(int id) {
  if (id == rad::kSqrtU) return RatFn::u();
  if (id == rad::kRho) return RatFn::p();
  if (id == rad::kSqrt2) return RatFn(2);
  int k = id - rad::kSBase;
  return RatFn(QRat::q(2 * k)) * RatFn::u() * RatFn::L(k, -1);
}

bool RadialFn::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second.is_one();
}

bool RadialFn::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

bool RadialFn::is_scalar() const { return is_rational() && (terms_.empty() || terms_.begin()->second.is_scalar()); }

QRat RadialFn::scalar() const {
  if (!is_scalar()) fail(ErrorKind::NotSpecializable, "coefficient is not a scalar: " + str());
  return terms_.empty() ? QRat() : terms_.begin()->second.scalar();
}

const RatFn& RadialFn::rational() const {
  static const RatFn zero;
  if (!is_rational()) fail(ErrorKind::NotSpecializable, "coefficient contains radicals: " + str());
  return terms_.empty() ? zero : terms_.begin()->second;
}

bool RadialFn::is_polynomial() const { return is_rational() && rational().is_polynomial(); }

void RadialFn::add_term(const RadSet& r, const RatFn& f) {
  if (f.is_zero()) return;
  auto it = terms_.find(r);
  if (it == terms_.end()) {
    terms_.emplace(r, f);
  } else {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RadialFn RadialFn::operator-() const {
  RadialFn r = *this;
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

RadialFn operator+(const RadialFn& a, const RadialFn& b) {
  if (a.is_zero()) return b;
  RadialFn r = a;
  for (const auto& [k, v] : b.terms_) r.add_term(k, v);
  return r;
}

RadialFn operator*(const RadialFn& a, const RadialFn& b) {
  RadialFn r;
  for (const auto& [ka, va] : a.terms_) {
    for (const auto& [kb, vb] : b.terms_) {
      RadSet out;
      RatFn c = va * vb;
      std::size_t i = 0, j = 0;
      while (i < ka.size() || j < kb.size()) {
        if (j == kb.size() || (i < ka.size() && ka[i] < kb[j])) {
          out.push_back(ka[i++]);
        } else if (i == ka.size() || kb[j] < ka[i]) {
          out.push_back(kb[j++]);
        } else {
          c *= RadialFn::radical_square(ka[i]);
          ++i;
          ++j;
        }
      }
      r.add_term(out, c);
    }
  }
  return r;
}

RadialFn RadialFn::conjugate(int id) const {
  RadialFn r;
  for (const auto& [k, v] : terms_) {
    bool has = std::binary_search(k.begin(), k.end(), id);
    r.terms_.emplace(k, has ? -v : v);
  }
  return r;
}

RadialFn RadialFn::inv() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero coefficient");
  if (terms_.size() == 1) {
    const auto& [k, v] = *terms_.begin();
    RatFn sq(1);
    for (int id : k) sq *= radical_square(id);
    RadialFn r;
    r.terms_.emplace(k, (v * sq).inv());
    return r;
  }
  RadSet ids;
  for (const auto& [k, v] : terms_) ids.insert(ids.end(), k.begin(), k.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  RadialFn f = *this, acc(1);
  for (int id : ids) {
    RadialFn c = f.conjugate(id);
    acc *= c;
    f *= c;
  }
  if (!f.is_rational()) fail(ErrorKind::NotInvertible, "radical elimination failed: " + str());
  return acc * RadialFn(f.rational().inv());
}

RadialFn RadialFn::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  RadialFn r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

RadialFn RadialFn::sigma(int t) const {
  if (t == 0) return *this;
  RadialFn r;
  for (const auto& [k, v] : terms_) {
    RadSet out;
    int qshift = 0;
    for (int id : k) {
      if (id == rad::kSqrtU) {
        qshift += t;
        out.push_back(id);
      } else if (rad::is_S(id)) {
        out.push_back(id + t);
      } else {
        out.push_back(id);
      }
    }
    std::sort(out.begin(), out.end());
    RatFn c = v.sigma(t);
    if (qshift) c *= RatFn(QRat::q(qshift));
    r.add_term(out, c);
  }
  return r;
}

RadialFn RadialFn::delta(int t) const {
  RadialFn num = sigma(t) - *this;
  if (num.is_zero()) return num;
  RatFn den = (RatFn(QRat::q(2 * t)) - RatFn(1)) * RatFn::u();
  return num * RadialFn(den.inv());
}

mpq_class RadialFn::specialize(const mpq_class& qv, const mpq_class& uv, const mpq_class& pv) const {
  mpq_class total = 0;
  for (const auto& [k, v] : terms_) {
    mpq_class c = v.eval(qv, uv, pv);
    if (c == 0) continue;
    for (int id : k) {
      mpq_class sq = radical_square(id).eval(qv, uv, pv), root;
      if (!rational_sqrt(sq, root))
        fail(ErrorKind::IrrationalSquareRoot, radical_name(id) + " = sqrt(" + sq.get_str() + ") is irrational");
      c *= root;
    }
    total += c;
  }
  total.canonicalize();
  return total;
}

RadialFn RadialFn::at_q1() const {
  RadialFn r;
  for (const auto& [k, v] : terms_) {
    RadSet out;
    for (int id : k) out.push_back(rad::is_S(id) ? rad::S(0) : id);
    std::sort(out.begin(), out.end());
    // Collapsed S_k radicals pair up into their common square.
    RadSet dedup;
    RatFn c = v.at_q1();
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (i + 1 < out.size() && out[i] == out[i + 1]) {
        c *= radical_square(out[i]).at_q1();
        ++i;
      } else {
        dedup.push_back(out[i]);
      }
    }
    r.add_term(dedup, c);
  }
  return r;
}

std::size_t RadialFn::hash() const {
  std::size_t h = 0x51ed27;
  for (const auto& [k, v] : terms_) {
    for (int id : k) h = h * 131 + static_cast<std::size_t>(id);
    h ^= v.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool is_product_str(const std::string& s) {
  if (s.empty() || s[0] == '-') return false;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    else if (c == ')' || c == ']') --depth;
    else if (depth == 0 && (c == '+' || (c == '-' && i > 0 && s[i - 1] == ' '))) return false;
  }
  return true;
}

bool RadialFn::is_atomic_str() const { return is_product_str(str()); }

std::string RadialFn::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, v] : terms_) {
    std::string rads;
    for (int id : k) rads += (rads.empty() ? "" : "*") + radical_name(id);
    std::string c = v.str();
    bool neg = !c.empty() && c[0] == '-';
    std::string body;
    if (rads.empty()) {
      body = neg ? c.substr(1) : c;
    } else {
      std::string cc = neg ? (-v).str() : c;
      bool paren = !is_product_str(cc);
      if (cc == "1") body = rads;
      else body = (paren ? "(" + cc + ")" : cc) + "*" + rads;
    }
    if (first) out += neg ? "-" + body : body;
    else out += neg ? " - " + body : " + " + body;
    first = false;
  }
  return out;
}

}  // namespace qhopf
