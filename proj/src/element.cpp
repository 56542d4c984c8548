#include <ostream>
#include <sstream>

#include "qhopf/algebra.hpp"
#include "qhopf/error.hpp"

namespace qhopf {

bool operator<(const TermKey& a, const TermKey& b) {
  std::size_t la = a.L.size() + a.D.size(), lb = b.L.size() + b.D.size();
  if (la != lb) return la < lb;
  if (a.L != b.L) return a.L < b.L;
  if (a.lam != b.lam) return a.lam < b.lam;
  return a.D < b.D;
}

namespace {

const AlgebraPtr& common(const Element& a, const Element& b) {
  if (!a.algebra()) return b.algebra();
  if (!b.algebra()) return a.algebra();
  if (a.algebra() != b.algebra() && a.algebra()->config().fingerprint() != b.algebra()->config().fingerprint())
    fail(ErrorKind::MixedConfiguration, "operands belong to different algebra configurations");
  return a.algebra();
}

}  // namespace

bool Element::is_coefficient() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == TermKey{};
}

RadialFn Element::coefficient() const {
  if (!is_coefficient()) fail(ErrorKind::WrongDegree, "element is not a coefficient");
  return terms_.empty() ? RadialFn() : terms_.begin()->second;
}

int Element::xi_degree() const {
  int deg = -1;
  for (const auto& [k, c] : terms_) {
    int d = count_kind(k.L, letter::kXi);
    if (deg >= 0 && d != deg) fail(ErrorKind::WrongDegree, "inhomogeneous form degree");
    deg = d;
  }
  return deg;
}

bool Element::has_partial() const {
  for (const auto& [k, c] : terms_)
    if (!k.D.empty()) return true;
  return false;
}

bool Element::has_letter_kind(int kind) const {
  for (const auto& [k, c] : terms_)
    if (count_kind(k.L, kind) > 0) return true;
  return false;
}

bool Element::has_lambda() const {
  for (const auto& [k, c] : terms_)
    if (k.lam != 0) return true;
  return false;
}

void Element::add_term(const TermKey& k, const RadialFn& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

Element& Element::operator+=(const Element& o) {
  alg_ = common(*this, o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Element& Element::operator-=(const Element& o) { return *this += -o; }

Element operator+(const Element& a, const Element& b) {
  Element r = a;
  r += b;
  return r;
}

Element operator-(const Element& a, const Element& b) {
  Element r = a;
  r -= b;
  return r;
}

Element operator*(const Element& a, const Element& b) {
  const AlgebraPtr& alg = common(a, b);
  if (!alg) return Element();
  return alg->mul(a, b);
}

Element operator*(const RadialFn& c, const Element& a) {
  if (!a.algebra() || c.is_zero()) return Element(a.algebra());
  if (c.is_scalar()) {
    Element r(a.algebra());
    for (const auto& [k, v] : a.terms()) r.add_term(k, c * v);
    return r;
  }
  return a.algebra()->coeff(c) * a;
}

Element Element::times(const RadialFn& c) const {
  if (!alg_) return *this;
  return *this * alg_->coeff(c);
}

Element Element::at_q1() const {
  Element r(alg_);
  for (const auto& [k, c] : terms_) r.add_term(k, c.at_q1());
  return r;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream o;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::vector<std::string> parts;
    for (char ch : k.L) parts.push_back(alg_->letter_name(static_cast<std::uint8_t>(ch)));
    if (k.lam == 1) parts.push_back("Lam");
    else if (k.lam != 0) parts.push_back("Lam^" + std::to_string(k.lam));
    bool neg = false;
    std::string lead;
    if (c.is_scalar()) {
      QRat s = c.scalar();
      std::string ss = s.str();
      if (!ss.empty() && ss[0] == '-' && !first) {
        neg = true;
        s = -s;
        ss = s.str();
      }
      if (!s.is_one()) lead = s.is_atomic_str() ? ss : "(" + ss + ")";
    } else {
      parts.push_back(c.is_atomic_str() ? c.str() : "(" + c.str() + ")");
    }
    for (char ch : k.D) parts.push_back(alg_->letter_name(static_cast<std::uint8_t>(ch)));
    if (!first) o << (neg ? " - " : " + ");
    std::string body;
    for (std::size_t i = 0; i < parts.size(); ++i) body += (i ? "*" : "") + parts[i];
    if (body.empty()) o << (lead.empty() ? "1" : lead);
    else if (lead.empty()) o << body;
    else o << lead << "*" << body;
    first = false;
  }
  return o.str();
}

std::ostream& operator<<(std::ostream& o, const Element& e) { return o << e.str(); }

}  // namespace qhopf
