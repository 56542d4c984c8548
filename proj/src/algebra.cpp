#include "qhopf/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "qhopf/error.hpp"

namespace qhopf {

namespace {

thread_local long g_steps = 0;

int key(std::uint8_t a, std::uint8_t b) { return (a << 8) | b; }

// Row-reduces rel (columns = 16 monomials (i, j) -> 4 i + j) and expresses
// each pivot monomial through the remaining ones.
std::map<int, std::vector<std::pair<int, QRat>>> solve_pivots(const Mat& rel, const std::vector<int>& pivots) {
  std::vector<int> cols = pivots;
  for (int m = 0; m < 16; ++m)
    if (std::find(pivots.begin(), pivots.end(), m) == pivots.end()) cols.push_back(m);
  std::vector<std::vector<QRat>> rows;
  for (int r = 0; r < rel.rows(); ++r) {
    std::vector<QRat> row(16);
    for (int c = 0; c < 16; ++c) row[static_cast<std::size_t>(c)] = rel(r, cols[static_cast<std::size_t>(c)]);
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  std::vector<int> pivcol;
  for (int c = 0; c < 16 && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][static_cast<std::size_t>(c)].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    QRat inv = rows[rank][static_cast<std::size_t>(c)].inv();
    for (auto& v : rows[rank]) v = v * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][static_cast<std::size_t>(c)].is_zero()) continue;
      QRat f = rows[r][static_cast<std::size_t>(c)];
      for (std::size_t k = 0; k < 16; ++k) rows[r][k] -= f * rows[rank][k];
    }
    pivcol.push_back(c);
    ++rank;
  }
  if (rank != pivots.size())
    fail(ErrorKind::RankMismatch, "relation rank " + std::to_string(rank) + " != " + std::to_string(pivots.size()) + " pivots");
  for (std::size_t i = 0; i < rank; ++i)
    if (pivcol[i] != static_cast<int>(i)) fail(ErrorKind::RankMismatch, "pivot monomials are dependent");
  std::map<int, std::vector<std::pair<int, QRat>>> out;
  for (std::size_t i = 0; i < rank; ++i) {
    auto& v = out[pivots[i]];
    for (std::size_t c = rank; c < 16; ++c)
      if (!rows[i][c].is_zero()) v.emplace_back(cols[c], -rows[i][c]);
  }
  return out;
}

}  // namespace

const char* variant_name(Variant v) { return v == Variant::Standard ? "standard" : "hat"; }
const char* level_name(Level l) {
  switch (l) {
    case Level::Core: return "core";
    case Level::Localized: return "localized";
    case Level::Braided: return "braided";
  }
  return "?";
}

std::string AlgebraConfig::fingerprint() const {
  std::ostringstream o;
  o << variant_name(variant) << '/' << level_name(level) << '/' << copies << '/';
  for (int v : xi_order) o << v;
  o << '/';
  for (int v : pd_order) o << v;
  o << '/';
  for (int v : x_order) o << v;
  o << '/' << det_elimination << perturb;
  return o.str();
}

int count_kind(const Word& w, int kind) {
  int n = 0;
  for (char c : w)
    if (letter::kind(static_cast<std::uint8_t>(c)) == kind) ++n;
  return n;
}

Algebra::Algebra(const AlgebraConfig& cfg) : cfg_(cfg) {
  if (cfg_.copies < 0 || cfg_.copies > 7) fail(ErrorKind::UnsupportedN, "copies must lie in 0..7");
  if (cfg_.level == Level::Braided && cfg_.copies < 1) fail(ErrorKind::ConfigError, "braided level needs n >= 1");
  if (cfg_.level != Level::Braided && cfg_.copies != 0) fail(ErrorKind::ConfigError, "copies need the braided level");
  auto check_perm = [](const std::array<int, 4>& p) {
    std::array<int, 4> s = p;
    std::sort(s.begin(), s.end());
    if (s != std::array<int, 4>{0, 1, 2, 3}) fail(ErrorKind::ConfigError, "index order is not a permutation");
  };
  check_perm(cfg_.xi_order);
  check_perm(cfg_.pd_order);
  check_perm(cfg_.x_order);
  if (const char* env = std::getenv("QHOPF_MAX_STEPS")) cfg_.max_steps = std::atol(env);
  std::array<std::array<int, 4>, 5> orders{cfg_.xi_order, cfg_.x_order, cfg_.x_order, {0, 1, 2, 3}, cfg_.pd_order};
  for (int k = 0; k < 5; ++k)
    for (int p = 0; p < 4; ++p) {
      pair_of_pos_[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)] = orders[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)];
      pos_of_pair_[static_cast<std::size_t>(k)][static_cast<std::size_t>(orders[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)])] = p;
    }
}

AlgebraPtr Algebra::create(const AlgebraConfig& cfg) {
  std::shared_ptr<Algebra> a(new Algebra(cfg));
  a->build();
  if (cfg.det_elimination) {
    AlgebraConfig pc = a->cfg_;
    pc.det_elimination = false;
    std::shared_ptr<Algebra> pre(new Algebra(pc));
    pre->build();
    a->derive_from(*pre);
  }
  return a;
}

std::uint8_t Algebra::letter(int kind, int copy, int pair) const {
  if (kind == letter::kRho) return letter::make(kind, copy, 0);
  return letter::make(kind, copy, pos_of_pair_[static_cast<std::size_t>(kind)][static_cast<std::size_t>(pair)]);
}

int Algebra::pair_of(std::uint8_t l) const {
  return pair_of_pos_[static_cast<std::size_t>(letter::kind(l))][static_cast<std::size_t>(letter::pos(l))];
}

std::string Algebra::letter_name(std::uint8_t l) const {
  int k = letter::kind(l), p = pair_of(l);
  std::string ab = std::to_string(p / 2 + 1) + "," + std::to_string(p % 2 + 1);
  switch (k) {
    case letter::kXi: return "xi[" + ab + "]";
    case letter::kX: return "x[" + ab + "]";
    case letter::kY: return "y[" + std::to_string(letter::copy(l)) + "," + ab + "]";
    case letter::kRho: return "rho[" + std::to_string(letter::copy(l)) + "]";
    default: return "pd[" + ab + "]";
  }
}

int Algebra::twist(std::uint8_t l) const { return twist_[l]; }

std::vector<std::uint8_t> Algebra::letters() const {
  std::vector<std::uint8_t> v;
  for (int p = 0; p < 4; ++p) v.push_back(letter::make(letter::kXi, 0, p));
  for (int p = 0; p < 4; ++p) v.push_back(letter::make(letter::kX, 0, p));
  for (int m = 1; m <= cfg_.copies; ++m)
    for (int p = 0; p < 4; ++p) v.push_back(letter::make(letter::kY, m, p));
  for (int m = 1; m <= cfg_.copies; ++m) v.push_back(letter::make(letter::kRho, m, 0));
  for (int p = 0; p < 4; ++p) v.push_back(letter::make(letter::kPd, 0, p));
  return v;
}

const PairRule* Algebra::rule(std::uint8_t a, std::uint8_t b) const {
  auto it = rules_.find(key(a, b));
  return it == rules_.end() ? nullptr : &it->second;
}

const PairRule* Algebra::partial_rule(std::uint8_t d, std::uint8_t l) const {
  auto it = pd_rules_.find(key(d, l));
  return it == pd_rules_.end() ? nullptr : &it->second;
}

void Algebra::add_rule(std::unordered_map<int, PairRule>& t, std::uint8_t a, std::uint8_t b, PairRule r) {
  r.out.erase(std::remove_if(r.out.begin(), r.out.end(), [](const PairRule::Out& o) { return o.c.is_zero(); }), r.out.end());
  t[key(a, b)] = std::move(r);
}

void Algebra::build_quadratic(int kind, int copy) {
  const bool strict = kind != letter::kXi;  // xi squares are pivots
  std::vector<int> pivots;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int pi = pos_of_pair_[static_cast<std::size_t>(kind)][static_cast<std::size_t>(i)];
      int pj = pos_of_pair_[static_cast<std::size_t>(kind)][static_cast<std::size_t>(j)];
      if (pi > pj || (!strict && pi == pj)) pivots.push_back(4 * i + j);
    }
  Mat rel;
  const tensors::Projectors& P = tensors::projectors_pair();
  if (kind == letter::kXi) {
    rel = P.s + P.t;
  } else if (kind == letter::kPd) {
    const bool hat = cfg_.variant == Variant::Hat;
    Mat N = hat ? tensors::pair_kron(tensors::rhat_inv(), tensors::rhat()) : tensors::pair_kron(tensors::rhat(), tensors::rhat_inv());
    rel = Mat(16, 16);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        rel(4 * i + j, 4 * i + j) += QRat(1);
        for (int h = 0; h < 4; ++h)
          for (int k = 0; k < 4; ++k) rel(4 * i + j, 4 * h + k) -= N(4 * k + h, 4 * j + i);
      }
  } else {
    rel = P.A;
  }
  auto sol = solve_pivots(rel, pivots);
  int normal = 16 - static_cast<int>(pivots.size());
  if (kind == letter::kXi) xi_normal_ = normal;
  if (kind == letter::kPd) pd_normal_ = normal;
  auto& table = kind == letter::kPd ? pd_rules_ : rules_;
  for (auto& [m, comb] : sol) {
    PairRule r;
    for (auto& [n, c] : comb) r.out.push_back({c, letter(kind, copy, n / 4), letter(kind, copy, n % 4)});
    add_rule(table, letter(kind, copy, m / 4), letter(kind, copy, m % 4), std::move(r));
  }
  if (kind == letter::kX && cfg_.det_elimination) {
    // x11 x22 -> U + q x12 x21
    std::uint8_t a = letter(kind, 0, 0), d = letter(kind, 0, 3);
    PairRule r;
    r.u_coeff = QRat(1);
    r.out.push_back({QRat::q(1), letter(kind, 0, 1), letter(kind, 0, 2)});
    add_rule(rules_, a, d, std::move(r));
  }
}

void Algebra::build_cross() {
  const bool hat = cfg_.variant == Variant::Hat;
  Mat RR = tensors::pair_kron(tensors::rhat(), tensors::rhat());
  Mat RRi = tensors::pair_kron(tensors::rhat_inv(), tensors::rhat_inv());
  Mat XXi = hat ? RRi : RR;
  if (cfg_.perturb) XXi = tensors::pair_kron(tensors::rhat(), tensors::rhat_inv());
  const Mat& DXi = hat ? RR : RRi;
  const Mat& DX = hat ? RRi : RR;
  // Braiding between copies.
  const Mat& YY = hat ? RRi : RR;
  // a^i b^j -> sum M[(i,j),(h,k)] b^h a^k
  auto braid = [&](int ka, int ca, int kb, int cb, const Mat& M) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        PairRule r;
        for (int h = 0; h < 4; ++h)
          for (int k = 0; k < 4; ++k) r.out.push_back({M(4 * i + j, 4 * h + k), letter(kb, cb, h), letter(ka, ca, k)});
        add_rule(rules_, letter(ka, ca, i), letter(kb, cb, j), std::move(r));
      }
  };
  auto commute = [&](std::uint8_t a, std::uint8_t b, const QRat& c) {
    PairRule r;
    r.out.push_back({c, b, a});
    add_rule(rules_, a, b, std::move(r));
  };
  braid(letter::kX, 0, letter::kXi, 0, XXi);
  for (int m = 1; m <= cfg_.copies; ++m) {
    braid(letter::kY, m, letter::kXi, 0, XXi);
    braid(letter::kY, m, letter::kX, 0, YY);
    for (int n = 1; n < m; ++n) braid(letter::kY, m, letter::kY, n, YY);
  }
  for (int m = 1; m <= cfg_.copies; ++m) {
    std::uint8_t rho = letter(letter::kRho, m, 0);
    for (int i = 0; i < 4; ++i) {
      commute(rho, letter(letter::kXi, 0, i), QRat(1));
      commute(rho, letter(letter::kX, 0, i), QRat(1));
      for (int n = 1; n <= cfg_.copies; ++n) commute(rho, letter(letter::kY, n, i), m < n ? QRat::q(-2) : QRat(1));
    }
    for (int n = 1; n < m; ++n) commute(rho, letter(letter::kRho, n, 0), QRat::q(-2));
  }
  // partial past letters: d_i a^j -> [delta] + sum M[(j,h),(i,k)] a^k d_h
  auto pass = [&](int ka, int ca, const Mat& M, bool inhom) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        PairRule r;
        if (inhom && i == j) r.one_coeff = QRat(1);
        for (int h = 0; h < 4; ++h)
          for (int k = 0; k < 4; ++k) r.out.push_back({M(4 * j + h, 4 * i + k), letter(ka, ca, k), letter(letter::kPd, 0, h)});
        add_rule(pd_rules_, letter(letter::kPd, 0, i), letter(ka, ca, j), std::move(r));
      }
  };
  pass(letter::kXi, 0, DXi, false);
  pass(letter::kX, 0, DX, true);
  for (int m = 1; m <= cfg_.copies; ++m) {
    pass(letter::kY, m, DX, false);
    for (int i = 0; i < 4; ++i) {
      PairRule r;
      r.out.push_back({QRat(1), letter(letter::kRho, m, 0), letter(letter::kPd, 0, i)});
      add_rule(pd_rules_, letter(letter::kPd, 0, i), letter(letter::kRho, m, 0), std::move(r));
    }
  }
}

void Algebra::build() {
  build_quadratic(letter::kXi, 0);
  build_quadratic(letter::kX, 0);
  for (int m = 1; m <= cfg_.copies; ++m) build_quadratic(letter::kY, m);
  build_quadratic(letter::kPd, 0);
  build_cross();
}

namespace {

// Returns t with e == q^{2t} * base, or nullopt.
std::optional<QRat> ratio(const Element& e, const Element& base) {
  if (base.is_zero()) return std::nullopt;
  const auto& [k, c] = *base.terms().begin();
  auto it = e.terms().find(k);
  if (it == e.terms().end()) return std::nullopt;
  if (!c.is_scalar() || !it->second.is_scalar()) return std::nullopt;
  QRat lam = it->second.scalar() / c.scalar();
  if (e - RadialFn(lam) * base != Element(e.algebra())) return std::nullopt;
  return lam;
}

int even_q_power(const std::optional<QRat>& lam, const std::string& what) {
  if (!lam) fail(ErrorKind::InconsistentDerivation, what + ": not a multiple");
  for (int t = -4; t <= 4; ++t)
    if (*lam == QRat::q(2 * t)) return t;
  fail(ErrorKind::InconsistentDerivation, what + ": factor " + lam->str() + " is not an even q-power");
}

}  // namespace

void Algebra::derive_from(const Algebra& pre_ref) {
  AlgebraPtr pre = pre_ref.shared_from_this();
  Element det = pre->x(1, 1) * pre->x(2, 2) - RadialFn(QRat::q(1)) * (pre->x(1, 2) * pre->x(2, 1));
  twist_.fill(0);
  auto twist_of = [&](const Element& g, const std::string& what) {
    return even_q_power(ratio(det * g, g * det), what);
  };
  int txi = 0;
  for (int p = 0; p < 4; ++p) {
    int t = twist_of(pre->gen(letter::kXi, 0, p), "det past xi");
    if (p > 0 && t != txi) fail(ErrorKind::InconsistentDerivation, "xi twists differ");
    txi = t;
    twist_[letter(letter::kXi, 0, p)] = t;
    if (twist_of(pre->gen(letter::kX, 0, p), "det past x") != 0) fail(ErrorKind::InconsistentDerivation, "det not central");
  }
  for (int m = 1; m <= cfg_.copies; ++m) {
    for (int p = 0; p < 4; ++p) twist_[letter(letter::kY, m, p)] = twist_of(pre->gen(letter::kY, m, p), "det past y");
    twist_[letter(letter::kRho, m, 0)] = twist_of(pre->rho2(m), "det past rho");
  }
  // partial_i det = q^{2s} det partial_i + ell_i
  for (int i = 0; i < 4; ++i) {
    Element d = pre->gen(letter::kPd, 0, i);
    Element e = d * det;
    Element hom(pre), inh(pre);
    for (const auto& [k, c] : e.terms()) {
      Element t(pre);
      t.add_term(k, c);
      (k.D.empty() ? inh : hom) += t;
    }
    int s = even_q_power(ratio(hom, det * d), "partial past det");
    if (i > 0 && s != pd_shift_) fail(ErrorKind::InconsistentDerivation, "partial shifts differ");
    pd_shift_ = s;
    auto& ell = ell_[static_cast<std::size_t>(i)];
    ell.clear();
    for (const auto& [k, c] : inh.terms()) {
      if (k.L.size() != 1 || letter::kind(static_cast<std::uint8_t>(k.L[0])) != letter::kX || !c.is_scalar())
        fail(ErrorKind::InconsistentDerivation, "partial of det is not linear in x");
      ell.push_back({c.scalar(), k.L});
    }
  }
  Element dd = pre->xi(1, 1) * pre->x(2, 2) + pre->x(1, 1) * pre->xi(2, 2) -
               RadialFn(QRat::q(1)) * (pre->xi(1, 2) * pre->x(2, 1) + pre->x(1, 2) * pre->xi(2, 1));
  du_.clear();
  for (const auto& [k, c] : dd.terms()) du_.push_back({c.scalar(), k.L});
}

void Algebra::count_steps(long n) const {
  g_steps += n;
  if (g_steps > cfg_.max_steps)
    fail(ErrorKind::NonTerminating, "rewrite budget of " + std::to_string(cfg_.max_steps) + " steps exceeded");
}

void Algebra::reset_steps() const { g_steps = 0; }

bool Algebra::admits(const RadialFn& f) const {
  if (cfg_.level != Level::Core) return true;
  return f.is_polynomial();
}

}  // namespace qhopf
