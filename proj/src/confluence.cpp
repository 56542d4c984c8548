#include "qhopf/confluence.hpp"

#include <functional>
#include <map>

#include "qhopf/error.hpp"

namespace qhopf {

namespace {

bool is_pd(const Atom& a) { return a.kind == Atom::Letter && letter::kind(a.l) == letter::kPd; }
bool is_L(const Atom& a) { return a.kind == Atom::Letter && letter::kind(a.l) != letter::kPd; }

struct RawTerm {
  QRat c;
  RawWord w;
};

std::vector<RawTerm> rewrite(const Algebra& A, const Atom& a, const Atom& b) {
  std::vector<RawTerm> out;
  if (is_L(a) && is_L(b)) {
    const PairRule* r = A.rule(a.l, b.l);
    for (const auto& o : r->out) out.push_back({o.c, {Atom::letter(o.a), Atom::letter(o.b)}});
    if (!r->u_coeff.is_zero()) out.push_back({r->u_coeff, {Atom::coef(RadialFn::u())}});
    return out;
  }
  if (is_pd(a) && b.kind == Atom::Letter) {
    const PairRule* r = A.partial_rule(a.l, b.l);
    for (const auto& o : r->out) out.push_back({o.c, {Atom::letter(o.a), Atom::letter(o.b)}});
    if (!r->one_coeff.is_zero()) out.push_back({r->one_coeff, {}});
    return out;
  }
  if (a.kind == Atom::Coef && b.kind == Atom::Letter) return {{QRat(1), {b, Atom::coef(a.f.sigma(A.twist(b.l)))}}};
  if (a.kind == Atom::Coef && b.kind == Atom::Lam) return {{QRat(1), {b, Atom::coef(a.f.sigma(b.lam))}}};
  if (a.kind == Atom::Coef && b.kind == Atom::Coef) return {{QRat(1), {Atom::coef(a.f * b.f)}}};
  if (a.kind == Atom::Lam && b.kind == Atom::Letter) {
    int k = letter::kind(b.l);
    if (k != letter::kX && k != letter::kXi) fail(ErrorKind::MixedConfiguration, "Lambda meets a braided generator");
    return {{k == letter::kX ? QRat::q(-a.lam) : QRat(1), {b, a}}};
  }
  if (a.kind == Atom::Lam && b.kind == Atom::Lam) {
    if (a.lam + b.lam == 0) return {{QRat(1), {}}};
    return {{QRat(1), {Atom::lambda(a.lam + b.lam)}}};
  }
  if (is_pd(a) && b.kind == Atom::Lam) return {{QRat::q(-b.lam), {b, a}}};
  if (is_pd(a) && b.kind == Atom::Coef) {
    int s = A.partial_shift();
    out.push_back({QRat(1), {Atom::coef(b.f.sigma(s)), a}});
    RadialFn d = b.f.delta(s);
    if (!d.is_zero())
      for (const auto& lw : A.ell(A.pair_of(a.l)))
        out.push_back({lw.c, {Atom::letter(static_cast<std::uint8_t>(lw.w[0])), Atom::coef(d)}});
    return out;
  }
  fail(ErrorKind::InconsistentDerivation, "no rewrite for pair");
}

}  // namespace

bool reducible(const Algebra& A, const Atom& a, const Atom& b) {
  if (a.kind == Atom::Letter) {
    if (is_L(a)) return is_L(b) && A.rule(a.l, b.l) != nullptr;
    if (is_pd(b)) return A.partial_rule(a.l, b.l) != nullptr;
    return true;  // partial before a letter, Lambda or coefficient
  }
  if (a.kind == Atom::Lam) return b.kind == Atom::Lam || is_L(b);
  return b.kind != Atom::Letter || is_L(b);
}

std::string raw_str(const Algebra& A, const RawWord& w) {
  std::string s;
  for (const auto& a : w) {
    if (!s.empty()) s += "*";
    if (a.kind == Atom::Letter) s += A.letter_name(a.l);
    else if (a.kind == Atom::Lam) s += "Lam^" + std::to_string(a.lam);
    else s += "(" + a.f.str() + ")";
  }
  return s.empty() ? "1" : s;
}

Element atom_element(const AlgebraPtr& A, const Atom& a) {
  if (a.kind == Atom::Letter) return A->gen(letter::kind(a.l), letter::copy(a.l), A->pair_of(a.l));
  if (a.kind == Atom::Lam) return A->lam(a.lam);
  return A->coeff(a.f);
}

Element engine_product(const AlgebraPtr& A, const RawWord& w) {
  Element e = A->one();
  for (const auto& a : w) e = e * atom_element(A, a);
  return e;
}

Element reduce_random(const AlgebraPtr& A, const RawWord& w, std::mt19937_64& rng) {
  std::vector<RawTerm> todo{{QRat(1), w}};
  Element out(A);
  long steps = 0;
  while (!todo.empty()) {
    RawTerm t = std::move(todo.back());
    todo.pop_back();
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i + 1 < t.w.size(); ++i)
      if (reducible(*A, t.w[i], t.w[i + 1])) pos.push_back(i);
    if (pos.empty()) {
      TermKey k;
      RadialFn f(t.c);
      for (const auto& a : t.w) {
        if (a.kind == Atom::Lam) k.lam = a.lam;
        else if (a.kind == Atom::Coef) f = f * a.f;
        else (is_pd(a) ? k.D : k.L).push_back(static_cast<char>(a.l));
      }
      out.add_term(k, f);
      continue;
    }
    if (++steps > A->config().max_steps) fail(ErrorKind::NonTerminating, "random reduction exceeded the budget");
    std::size_t i = pos[std::uniform_int_distribution<std::size_t>(0, pos.size() - 1)(rng)];
    for (auto& r : rewrite(*A, t.w[i], t.w[i + 1])) {
      RawTerm n;
      n.c = t.c * r.c;
      if (n.c.is_zero()) continue;
      n.w.assign(t.w.begin(), t.w.begin() + static_cast<long>(i));
      for (auto& a : r.w) {
        if (a.kind == Atom::Coef && a.f.is_zero()) {
          n.c = QRat(0);
          break;
        }
        n.w.push_back(a);
      }
      if (n.c.is_zero()) continue;
      n.w.insert(n.w.end(), t.w.begin() + static_cast<long>(i) + 2, t.w.end());
      todo.push_back(std::move(n));
    }
  }
  return out;
}

std::vector<Atom> overlap_alphabet(const AlgebraPtr& A) {
  std::vector<Atom> v;
  for (auto l : A->letters()) v.push_back(Atom::letter(l));
  const auto& c = A->config();
  if (c.copies == 0) {
    v.push_back(Atom::lambda(1));
    v.push_back(Atom::lambda(-1));
  }
  v.push_back(Atom::coef(RadialFn::u()));
  if (c.level != Level::Core) {
    v.push_back(Atom::coef(RadialFn::u(-1)));
    v.push_back(Atom::coef(RadialFn::sqrt_u()));
    v.push_back(Atom::coef((RadialFn::u() + RadialFn::p()).inv()));
    v.push_back(Atom::coef(RadialFn::s()));
  }
  return v;
}

ConfluenceReport check_confluence(const AlgebraPtr& A, int max_len, long sample_cap) {
  if (max_len < 3) fail(ErrorKind::ConfigError, "max_len must be at least 3");
  ConfluenceReport rep;
  rep.max_len = max_len;
  std::vector<Atom> al = overlap_alphabet(A);
  const std::size_t n = al.size();
  std::vector<std::vector<std::size_t>> next(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (reducible(*A, al[i], al[j])) next[i].push_back(j);
  auto check = [&](const std::vector<std::size_t>& idx) {
    RawWord w;
    for (auto i : idx) w.push_back(al[i]);
    Element left = atom_element(A, w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) left = left * atom_element(A, w[i]);
    Element right = atom_element(A, w.back());
    for (std::size_t i = w.size() - 1; i-- > 0;) right = atom_element(A, w[i]) * right;
    ++rep.words_checked;
    if (left != right) rep.failures.push_back(raw_str(*A, w) + ": " + left.str() + " != " + right.str());
  };
  std::mt19937_64 rng(0x5eed);
  for (int len = 3; len <= max_len; ++len) {
    // count chains
    std::vector<long> cnt(n, 1);
    for (int k = 1; k < len; ++k) {
      std::vector<long> nc(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (auto j : next[i]) nc[i] += cnt[j];
      cnt = nc;
    }
    long total = 0;
    for (auto c : cnt) total += c;
    rep.words_total += total;
    if (len == 3 || total <= sample_cap) {
      std::vector<std::size_t> idx;
      std::function<void()> rec = [&] {
        if (static_cast<int>(idx.size()) == len) {
          check(idx);
          return;
        }
        const auto& cand = idx.empty() ? std::vector<std::size_t>() : next[idx.back()];
        if (idx.empty()) {
          for (std::size_t i = 0; i < n; ++i) {
            idx.push_back(i);
            rec();
            idx.pop_back();
          }
          return;
        }
        for (auto j : cand) {
          idx.push_back(j);
          rec();
          idx.pop_back();
        }
      };
      rec();
    } else {
      for (long s = 0; s < sample_cap; ++s) {
        std::vector<std::size_t> idx;
        std::size_t i = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
        idx.push_back(i);
        bool dead = false;
        while (static_cast<int>(idx.size()) < len) {
          const auto& c = next[idx.back()];
          if (c.empty()) {
            dead = true;
            break;
          }
          idx.push_back(c[std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng)]);
        }
        if (!dead) check(idx);
      }
    }
  }
  return rep;
}

RawWord random_word(const AlgebraPtr& A, int max_len, std::mt19937_64& rng) {
  std::vector<Atom> al = overlap_alphabet(A);
  int len = std::uniform_int_distribution<int>(1, max_len)(rng);
  RawWord w;
  for (int i = 0; i < len; ++i) w.push_back(al[std::uniform_int_distribution<std::size_t>(0, al.size() - 1)(rng)]);
  return w;
}

}  // namespace qhopf
