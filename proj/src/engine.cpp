#include <algorithm>

#include "qhopf/algebra.hpp"
#include "qhopf/error.hpp"

namespace qhopf {

namespace {

void accumulate(std::map<Word, RadialFn>& acc, const Word& w, const RadialFn& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = acc.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

}  // namespace

Element Algebra::one() const { return coeff(RadialFn(1)); }
Element Algebra::zero() const { return Element(shared_from_this()); }

Element Algebra::coeff(const RadialFn& f) const {
  if (!admits(f)) fail(ErrorKind::UnknownGenerator, "coefficient " + f.str() + " needs the localized algebra");
  Element e(shared_from_this());
  e.add_term(TermKey{}, f);
  return e;
}

Element Algebra::gen(int kind, int copy, int pair) const {
  if (pair < 0 || pair > 3) fail(ErrorKind::UnknownGenerator, "index out of range");
  if ((kind == letter::kY || kind == letter::kRho) && (copy < 1 || copy > cfg_.copies))
    fail(ErrorKind::UnknownGenerator, "copy " + std::to_string(copy) + " not adjoined");
  if (kind != letter::kY && kind != letter::kRho) copy = 0;
  Element e(shared_from_this());
  std::uint8_t l = letter(kind, copy, pair);
  TermKey k;
  (kind == letter::kPd ? k.D : k.L).push_back(static_cast<char>(l));
  e.add_term(k, RadialFn(1));
  return e;
}

static int qpair(int a, int b) {
  if (a < 1 || a > 2 || b < 1 || b > 2) fail(ErrorKind::UnknownGenerator, "quaternionic index must be 1 or 2");
  return 2 * (a - 1) + (b - 1);
}

Element Algebra::x(int a, int b) const { return gen(letter::kX, 0, qpair(a, b)); }
Element Algebra::xi(int a, int b) const { return gen(letter::kXi, 0, qpair(a, b)); }
Element Algebra::pd(int a, int b) const { return gen(letter::kPd, 0, qpair(a, b)); }
Element Algebra::y(int m, int a, int b) const { return gen(letter::kY, m, qpair(a, b)); }
Element Algebra::rho2(int m) const { return gen(letter::kRho, m, 0); }

Element Algebra::lam(int k) const {
  if (cfg_.copies > 0) fail(ErrorKind::MixedConfiguration, "Lambda is not defined with braided copies");
  Element e(shared_from_this());
  TermKey t;
  t.lam = k;
  e.add_term(t, RadialFn(1));
  return e;
}

Element Algebra::word(const Word& w) const {
  Element e = one();
  for (char c : w) {
    auto l = static_cast<std::uint8_t>(c);
    e = e * gen(letter::kind(l), letter::copy(l), pair_of(l));
  }
  return e;
}

Algebra::LComb Algebra::append_letter(const Word& w, std::uint8_t l) const {
  if (w.empty()) return {{Word(1, static_cast<char>(l)), RadialFn(1)}};
  auto last = static_cast<std::uint8_t>(w.back());
  const PairRule* r = rule(last, l);
  if (!r) {
    Word n = w;
    n.push_back(static_cast<char>(l));
    return {{std::move(n), RadialFn(1)}};
  }
  std::string ck = w;
  ck.push_back(static_cast<char>(l));
  {
    std::lock_guard<std::mutex> g(cache_mu_);
    auto it = append_cache_.find(ck);
    if (it != append_cache_.end()) return it->second;
  }
  count_steps(1);
  Word prefix = w.substr(0, w.size() - 1);
  std::map<Word, RadialFn> acc;
  for (const auto& o : r->out) {
    for (const auto& t1 : append_letter(prefix, o.a)) {
      RadialFn c1 = t1.c.sigma(twist(o.b));
      for (const auto& t2 : append_letter(t1.w, o.b)) accumulate(acc, t2.w, RadialFn(o.c) * t2.c * c1);
    }
  }
  if (!r->u_coeff.is_zero()) accumulate(acc, prefix, RadialFn(r->u_coeff) * RadialFn::u());
  if (!r->one_coeff.is_zero()) accumulate(acc, prefix, RadialFn(r->one_coeff));
  LComb out;
  out.reserve(acc.size());
  for (auto& [k, c] : acc) out.push_back({k, c});
  std::lock_guard<std::mutex> g(cache_mu_);
  append_cache_.emplace(ck, out);
  return out;
}

std::vector<LinearWord> Algebra::append_partial(const Word& d, std::uint8_t l) const {
  if (d.empty()) return {{QRat(1), Word(1, static_cast<char>(l))}};
  const PairRule* r = partial_rule(static_cast<std::uint8_t>(d.back()), l);
  if (!r) {
    Word n = d;
    n.push_back(static_cast<char>(l));
    return {{QRat(1), std::move(n)}};
  }
  std::string ck = d;
  ck.push_back(static_cast<char>(l));
  {
    std::lock_guard<std::mutex> g(cache_mu_);
    auto it = pd_cache_.find(ck);
    if (it != pd_cache_.end()) return it->second;
  }
  count_steps(1);
  Word prefix = d.substr(0, d.size() - 1);
  std::map<Word, QRat> acc;
  for (const auto& o : r->out)
    for (const auto& t1 : append_partial(prefix, o.a))
      for (const auto& t2 : append_partial(t1.w, o.b)) {
        QRat& v = acc[t2.w];
        v += o.c * t1.c * t2.c;
      }
  std::vector<LinearWord> out;
  for (auto& [k, c] : acc)
    if (!c.is_zero()) out.push_back({c, k});
  std::lock_guard<std::mutex> g(cache_mu_);
  pd_cache_.emplace(ck, out);
  return out;
}

Element Algebra::push_partial(std::uint8_t d, const TermKey& t, const RadialFn& c) const {
  // state: W * C * (e or nothing)
  constexpr std::uint8_t kNone = 0xFF;
  std::map<std::pair<Word, std::uint8_t>, RadialFn> st;
  st[{Word(), d}] = RadialFn(1);
  auto add = [](std::map<std::pair<Word, std::uint8_t>, RadialFn>& m, const Word& w, std::uint8_t e, const RadialFn& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = m.emplace(std::make_pair(w, e), v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) m.erase(it);
    }
  };
  for (char ch : t.L) {
    auto l = static_cast<std::uint8_t>(ch);
    std::map<std::pair<Word, std::uint8_t>, RadialFn> nx;
    for (const auto& [we, C] : st) {
      const auto& [W, e] = we;
      if (e == kNone) {
        RadialFn cs = C.sigma(twist(l));
        for (const auto& t2 : append_letter(W, l)) add(nx, t2.w, kNone, t2.c * cs);
        continue;
      }
      const PairRule* r = partial_rule(e, l);
      if (!r) fail(ErrorKind::UnknownGenerator, "no rule for " + letter_name(e) + " past " + letter_name(l));
      count_steps(1);
      for (const auto& o : r->out) {
        RadialFn cs = C.sigma(twist(o.a));
        for (const auto& t2 : append_letter(W, o.a)) add(nx, t2.w, o.b, RadialFn(o.c) * t2.c * cs);
      }
      if (!r->one_coeff.is_zero()) add(nx, W, kNone, RadialFn(r->one_coeff) * C);
    }
    st = std::move(nx);
  }
  Element out(shared_from_this());
  const int lam = t.lam;
  const int s = pd_shift_;
  for (const auto& [we, C] : st) {
    const auto& [W, e] = we;
    RadialFn Cl = C.sigma(lam);
    if (e == kNone) {
      out.add_term(TermKey{W, lam, t.D}, Cl * c);
      continue;
    }
    // e * c = sigma^s(c) e + ell_e * delta_s(c)
    RadialFn qf = RadialFn(QRat::q(-lam));
    std::vector<LinearWord> dw{{QRat(1), Word(1, static_cast<char>(e))}};
    for (char ch : t.D) {
      std::vector<LinearWord> nx;
      for (const auto& w : dw)
        for (const auto& w2 : append_partial(w.w, static_cast<std::uint8_t>(ch))) nx.push_back({w.c * w2.c, w2.w});
      dw = std::move(nx);
    }
    RadialFn cs = qf * Cl * c.sigma(s);
    for (const auto& w : dw) out.add_term(TermKey{W, lam, w.w}, RadialFn(w.c) * cs);
    if (c.is_scalar()) continue;
    RadialFn dc = c.delta(s);
    if (dc.is_zero()) continue;
    for (const auto& lw : ell(pair_of(e))) {
      auto xl = static_cast<std::uint8_t>(lw.w[0]);
      RadialFn f = RadialFn(lw.c * QRat::q(-2 * lam)) * Cl.sigma(twist(xl)) * dc;
      for (const auto& t2 : append_letter(W, xl)) out.add_term(TermKey{t2.w, lam, t.D}, t2.c.sigma(lam) * f);
    }
  }
  return out;
}

Element Algebra::mul_terms(const TermKey& a, const RadialFn& ca, const TermKey& b, const RadialFn& cb) const {
  Element e(shared_from_this());
  e.add_term(b, cb);
  for (auto it = a.D.rbegin(); it != a.D.rend(); ++it) {
    Element n(shared_from_this());
    for (const auto& [k, c] : e.terms()) n += push_partial(static_cast<std::uint8_t>(*it), k, c);
    e = std::move(n);
  }
  Element out(shared_from_this());
  for (const auto& [k, c] : e.terms()) {
    // ca past L and Lambda^lam
    int tw = k.lam;
    for (char ch : k.L) tw += twist(static_cast<std::uint8_t>(ch));
    RadialFn cc = ca.sigma(tw) * c;
    // Lambda^{a.lam} past L
    if (a.lam != 0) {
      int nx = 0;
      for (char ch : k.L) {
        int kd = letter::kind(static_cast<std::uint8_t>(ch));
        if (kd == letter::kX) ++nx;
        else if (kd != letter::kXi) fail(ErrorKind::MixedConfiguration, "Lambda meets a braided generator");
      }
      cc = RadialFn(QRat::q(-a.lam * nx)) * cc;
    }
    int lam = k.lam + a.lam;
    // a.L * k.L
    LComb cur{{a.L, RadialFn(1)}};
    for (char ch : k.L) {
      auto l = static_cast<std::uint8_t>(ch);
      std::map<Word, RadialFn> acc;
      for (const auto& t : cur) {
        RadialFn cs = t.c.sigma(twist(l));
        for (const auto& t2 : append_letter(t.w, l)) accumulate(acc, t2.w, t2.c * cs);
      }
      cur.clear();
      for (auto& [w, v] : acc) cur.push_back({w, v});
    }
    for (const auto& t : cur) out.add_term(TermKey{t.w, lam, k.D}, t.c.sigma(lam) * cc);
  }
  return out;
}

Element Algebra::mul(const Element& a, const Element& b) const {
  reset_steps();
  Element out(shared_from_this());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) out += mul_terms(ka, ca, kb, cb);
  return out;
}

Element Algebra::star(const Element& a) const {
  Element out(shared_from_this());
  Mat e = tensors::eps(), eu = tensors::eps_up();
  for (const auto& [k, c] : a.terms()) {
    if (!k.D.empty() || k.lam != 0) fail(ErrorKind::StarUndefined, "star is undefined on partials and Lambda");
    Element t = coeff(c);
    for (auto it = k.L.rbegin(); it != k.L.rend(); ++it) {
      auto l = static_cast<std::uint8_t>(*it);
      int kd = letter::kind(l);
      if (kd == letter::kXi) fail(ErrorKind::StarUndefined, "star is undefined on forms");
      if (kd == letter::kRho) {
        t = t * gen(kd, letter::copy(l), 0);
        continue;
      }
      // (x^{ab})* = eps^{bg} x^{dg} eps_{da}
      int p = pair_of(l), al = p / 2, be = p % 2;
      Element s(shared_from_this());
      for (int g = 0; g < 2; ++g)
        for (int d = 0; d < 2; ++d) {
          QRat f = eu(be, g) * e(d, al);
          if (!f.is_zero()) s += RadialFn(f) * gen(kd, letter::copy(l), 2 * d + g);
        }
      t = t * s;
    }
    out += t;
  }
  return out;
}

Element Algebra::act(const Element& D, const Element& f) const {
  if (f.has_partial()) fail(ErrorKind::OperandContainsPartial, "operand of act contains a partial derivative");
  Element p = mul(D, f);
  Element out(shared_from_this());
  for (const auto& [k, c] : p.terms())
    if (k.D.empty()) out.add_term(k, c);
  return out;
}

}  // namespace qhopf
