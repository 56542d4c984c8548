#pragma once

#include <array>
#include <string>
#include <utility>

#include "qhopf/algebra.hpp"

namespace qhopf {

// 2x2 matrix over the algebra (entries of common form degree).
struct MatForm {
  AlgebraPtr alg;
  std::array<std::array<Element, 2>, 2> e;

  static MatForm zero(const AlgebraPtr& a);
  static MatForm identity(const AlgebraPtr& a);
  // Constant matrix with scalar entries.
  static MatForm constant(const AlgebraPtr& a, const Mat& m);
  // Generator matrices x, xi, y_m with entries (a, a').
  static MatForm gens(const AlgebraPtr& a, int kind, int copy = 0);

  Element& operator()(int i, int j) { return e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const Element& operator()(int i, int j) const { return e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  friend MatForm operator*(const MatForm& a, const MatForm& b);
  friend MatForm operator+(const MatForm& a, const MatForm& b);
  friend MatForm operator-(const MatForm& a, const MatForm& b);
  friend MatForm operator*(const Element& c, const MatForm& a);
  friend MatForm operator*(const MatForm& a, const Element& c);
  friend MatForm operator*(const RadialFn& c, const MatForm& a);
  MatForm operator-() const;
  friend bool operator==(const MatForm& a, const MatForm& b);
  friend bool operator!=(const MatForm& a, const MatForm& b) { return !(a == b); }

  MatForm transpose() const;
  // eps^{-1} a^T eps
  MatForm bar() const;
  // entrywise star, then transpose
  MatForm dagger() const;
  bool is_zero() const;
  int nonzero_entries() const;
  MatForm at_q1() const;
  std::array<std::array<std::string, 2>, 2> strs() const;
};

std::ostream& operator<<(std::ostream& o, const MatForm& m);

namespace forms {

// Exterior derivative by graded Leibniz: dx = xi, d(xi) = dy = d(rho^2) = 0
// and d f = dU * delta_t f on coefficients.
Element d(const Element& e);
MatForm d(const MatForm& m);
// (1 - q^{-2})^{-1} U^{-1} dU; hat: (1 - q^2)^{-1} U^{-1} dU.
Element theta(const AlgebraPtr& a);
// The displayed contraction q^{-2}/(q^2-1) xi^{aa'} x^{bb'} eps_{ab} eps_{a'b'} U^{-1}.
Element theta_contracted(const AlgebraPtr& a);
// -theta e + (-1)^p e theta
Element d_via_theta(const Element& e);
// Degree-2 Hodge star through (P_a - P_a').
Element hodge2(const Element& w);
MatForm hodge2(const MatForm& m);
std::pair<Element, Element> decompose2(const Element& w);

MatForm build_f(const AlgebraPtr& a);
MatForm build_fprime(const AlgebraPtr& a);
MatForm build_a(const AlgebraPtr& a);
MatForm build_ahat(const AlgebraPtr& a);

struct XbluResult {
  MatForm lhs1, lhs2, rhs;
  bool ok() const { return lhs1 == rhs && lhs2 == rhs; }
};
// x xibar + xi xbar and xbar xi + xibar x against (q^2 - 1) theta |x|^2 I
// (hat: q^-2 - 1).
XbluResult check_xblu(const AlgebraPtr& a, bool wrong_sign = false);
// (xi eps xi^T)^{cd} eps_{cd}
Element xixi_contraction(const AlgebraPtr& a);

}  // namespace forms
}  // namespace qhopf
