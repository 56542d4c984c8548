#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qhopf/radial.hpp"
#include "qhopf/tensor.hpp"

namespace qhopf {

enum class Variant { Standard, Hat };
enum class Level { Core, Localized, Braided };

struct AlgebraConfig {
  Variant variant = Variant::Standard;
  Level level = Level::Localized;
  int copies = 0;  // braided copies y_1..y_n, rho_1..rho_n
  // Position order of the pair indices (11),(12),(21),(22) inside the xi and
  // partial blocks; entry i is the pair index placed at position i.
  std::array<int, 4> xi_order{0, 1, 2, 3};
  std::array<int, 4> pd_order{0, 1, 2, 3};
  // x and y blocks; the default keeps x11 and x22 adjacent for det elimination.
  std::array<int, 4> x_order{0, 3, 1, 2};
  bool det_elimination = true;
  // Negative control: replaces the x-xi braiding by an inconsistent one.
  bool perturb = false;
  long max_steps = 1000000;

  std::string fingerprint() const;
};

const char* variant_name(Variant v);
const char* level_name(Level l);

// Letter byte: kind << 5 | copy << 2 | position-in-block.
namespace letter {
constexpr int kXi = 0;
constexpr int kX = 1;  // y_0
constexpr int kY = 2;
constexpr int kRho = 3;
constexpr int kPd = 4;
inline std::uint8_t make(int kind, int copy, int pos) {
  return static_cast<std::uint8_t>((kind << 5) | (copy << 2) | pos);
}
inline int kind(std::uint8_t c) { return c >> 5; }
inline int copy(std::uint8_t c) { return (c >> 2) & 7; }
inline int pos(std::uint8_t c) { return c & 3; }
}  // namespace letter

using Word = std::string;  // sequence of letter bytes

// Normal term L * Lam^lam * f * D, with L a normal word in xi, x, y, rho and
// D a normal word of partial derivatives; f sits between the two blocks.
struct TermKey {
  Word L;
  int lam = 0;
  Word D;
  friend bool operator<(const TermKey& a, const TermKey& b);
  friend bool operator==(const TermKey& a, const TermKey& b) {
    return a.L == b.L && a.lam == b.lam && a.D == b.D;
  }
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Element {
 public:
  using Terms = std::map<TermKey, RadialFn>;
  Element() = default;
  explicit Element(AlgebraPtr alg) : alg_(std::move(alg)) {}
  Element(AlgebraPtr alg, Terms t) : alg_(std::move(alg)), terms_(std::move(t)) {}

  const AlgebraPtr& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Coefficient-only element (single term with empty words)?
  bool is_coefficient() const;
  RadialFn coefficient() const;
  int xi_degree() const;  // -1 for zero, throws if inhomogeneous
  bool has_partial() const;
  bool has_letter_kind(int kind) const;
  bool has_lambda() const;

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const RadialFn& c, const Element& a);
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
  // Right multiplication by a coefficient (placed in the coefficient slot).
  Element times(const RadialFn& c) const;

  void add_term(const TermKey& k, const RadialFn& c);
  std::string str() const;
  // Coefficients with q -> 1 (words kept).
  Element at_q1() const;
  std::size_t size() const { return terms_.size(); }

 private:
  AlgebraPtr alg_;
  Terms terms_;
};

// Quadratic rule output: sum of coefficient * (first, second) pairs plus an
// optional scalar multiple of u (q-determinant) or of 1.
struct PairRule {
  struct Out {
    QRat c;
    std::uint8_t a;
    std::uint8_t b;
  };
  std::vector<Out> out;
  QRat u_coeff;     // multiple of the coefficient u
  QRat one_coeff;   // constant term (inhomogeneous part)
};

struct LinearWord {
  QRat c;
  Word w;
};

class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  static AlgebraPtr create(const AlgebraConfig& cfg);
  const AlgebraConfig& config() const { return cfg_; }

  // Generators; quaternionic indices a, b in {1, 2}.
  Element one() const;
  Element zero() const;
  Element coeff(const RadialFn& f) const;
  Element x(int a, int b) const;
  Element xi(int a, int b) const;
  Element pd(int a, int b) const;
  Element y(int m, int a, int b) const;
  Element rho2(int m) const;
  Element lam(int k) const;
  Element gen(int kind, int copy, int pair) const;
  Element word(const Word& w) const;

  Element mul(const Element& a, const Element& b) const;
  Element star(const Element& a) const;
  // Normal-order D * f and drop every term with a trailing partial.
  Element act(const Element& D, const Element& f) const;

  // Letter helpers.
  std::uint8_t letter(int kind, int copy, int pair) const;
  int pair_of(std::uint8_t l) const;
  std::string letter_name(std::uint8_t l) const;
  int twist(std::uint8_t l) const;
  int partial_shift() const { return pd_shift_; }
  const std::vector<LinearWord>& ell(int pair) const { return ell_[static_cast<std::size_t>(pair)]; }
  const std::vector<LinearWord>& du_words() const { return du_; }
  // Rule tables.
  const PairRule* rule(std::uint8_t a, std::uint8_t b) const;
  const PairRule* partial_rule(std::uint8_t d, std::uint8_t l) const;
  // Letters present in this configuration (L block then partials).
  std::vector<std::uint8_t> letters() const;
  bool is_pivot(std::uint8_t a, std::uint8_t b) const { return rule(a, b) != nullptr; }
  // Ranks found while deriving the quadratic rules.
  int xi_normal_pairs() const { return xi_normal_; }
  int pd_normal_pairs() const { return pd_normal_; }
  bool admits(const RadialFn& f) const;

  // Step accounting for the rewrite budget.
  void count_steps(long n) const;
  void reset_steps() const;

  // Engine internals shared with the strategy-independent reducer.
  struct LTerm {
    Word w;
    RadialFn c;
  };
  using LComb = std::vector<LTerm>;
  LComb append_letter(const Word& w, std::uint8_t l) const;
  std::vector<LinearWord> append_partial(const Word& d, std::uint8_t l) const;
  Element push_partial(std::uint8_t d, const TermKey& t, const RadialFn& c) const;
  Element mul_terms(const TermKey& a, const RadialFn& ca, const TermKey& b, const RadialFn& cb) const;

 private:
  explicit Algebra(const AlgebraConfig& cfg);
  void build();
  void build_quadratic(int kind, int copy);
  void build_cross();
  void derive_from(const Algebra& pre);
  void add_rule(std::unordered_map<int, PairRule>& t, std::uint8_t a, std::uint8_t b, PairRule r);

  AlgebraConfig cfg_;
  std::array<std::array<int, 4>, 5> pos_of_pair_{};
  std::array<std::array<int, 4>, 5> pair_of_pos_{};
  std::unordered_map<int, PairRule> rules_;
  std::unordered_map<int, PairRule> pd_rules_;
  std::array<int, 256> twist_{};
  int pd_shift_ = 0;
  std::array<std::vector<LinearWord>, 4> ell_;
  std::vector<LinearWord> du_;
  int xi_normal_ = 0;
  int pd_normal_ = 0;

  mutable std::mutex cache_mu_;
  mutable std::unordered_map<std::string, LComb> append_cache_;
  mutable std::unordered_map<std::string, std::vector<LinearWord>> pd_cache_;
};

std::ostream& operator<<(std::ostream& o, const Element& e);

// Monomial count helpers.
int count_kind(const Word& w, int kind);

}  // namespace qhopf
