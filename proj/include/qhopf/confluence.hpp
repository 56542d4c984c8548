#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qhopf/algebra.hpp"

namespace qhopf {

// Raw word atom: a letter, a power of Lambda, or a coefficient.
struct Atom {
  enum Kind { Letter, Lam, Coef } kind = Letter;
  std::uint8_t l = 0;
  int lam = 0;
  RadialFn f;
  static Atom letter(std::uint8_t l) { return {Letter, l, 0, {}}; }
  static Atom lambda(int k) { return {Lam, 0, k, {}}; }
  static Atom coef(const RadialFn& f) { return {Coef, 0, 0, f}; }
};
using RawWord = std::vector<Atom>;

std::string raw_str(const Algebra& alg, const RawWord& w);
Element atom_element(const AlgebraPtr& alg, const Atom& a);
// Product of the atoms computed by the engine.
Element engine_product(const AlgebraPtr& alg, const RawWord& w);
// Single-step rewriting at randomly chosen reducible positions until no
// rule applies; independent of the engine's memoized strategy.
Element reduce_random(const AlgebraPtr& alg, const RawWord& w, std::mt19937_64& rng);
bool reducible(const Algebra& alg, const Atom& a, const Atom& b);

// Default overlap alphabet: all letters, Lambda^{+-1} where allowed and a
// handful of coefficients admissible at the configured level.
std::vector<Atom> overlap_alphabet(const AlgebraPtr& alg);

struct ConfluenceReport {
  int max_len = 3;
  long words_checked = 0;
  long words_total = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Compares left and right bracketings of every overlap word (each adjacent
// pair is a rule left side) up to max_len; longer words are sampled when
// their number exceeds sample_cap.
ConfluenceReport check_confluence(const AlgebraPtr& alg, int max_len = 3, long sample_cap = 20000);

// Random raw word of at most max_len atoms.
RawWord random_word(const AlgebraPtr& alg, int max_len, std::mt19937_64& rng);

}  // namespace qhopf
