#pragma once

#include <vector>

#include "qhopf/groupcalc.hpp"

namespace qhopf {

// Rectangular matrix over the algebra.
struct EMat {
  AlgebraPtr alg;
  int rows = 0;
  int cols = 0;
  std::vector<Element> e;

  static EMat zero(const AlgebraPtr& a, int r, int c);
  static EMat identity(const AlgebraPtr& a, int n);
  Element& operator()(int i, int j) { return e[static_cast<std::size_t>(i * cols + j)]; }
  const Element& operator()(int i, int j) const { return e[static_cast<std::size_t>(i * cols + j)]; }
  friend EMat operator*(const EMat& a, const EMat& b);
  friend EMat operator-(const EMat& a, const EMat& b);
  EMat dagger() const;
  std::vector<Element> entries() const { return e; }
};

namespace gauge {

enum class Label { Regular, Singular };

struct GaugePotential {
  MatForm A;
  Label label = Label::Regular;
  RadialFn rho2;
};

// F = dA + AA
MatForm field_strength(const MatForm& a);
// V^{-1} (A V + dV) with V^{-1} = Vbar / c when Vbar V = c I for a coefficient c.
MatForm gauge_transform(const MatForm& a, const MatForm& v);
MatForm inverse(const MatForm& v);

// rho2 defaults to the coefficient p = rho^2.
GaugePotential instanton_A(const AlgebraPtr& a, const RadialFn& rho2 = RadialFn::p());
MatForm instanton_F_closed(const AlgebraPtr& a, const RadialFn& rho2 = RadialFn::p());
GaugePotential antiinstanton_A(const AlgebraPtr& a, const RadialFn& rho2 = RadialFn::p());
MatForm antiinstanton_F_closed(const AlgebraPtr& a, const RadialFn& rho2 = RadialFn::p());

// Tbar dT (1 + |x|^2/rho^2)^{-1}
GaugePotential singular_gauge(const AlgebraPtr& a, const RadialFn& rho2 = RadialFn::p());
// -(1 + |x|^2/(q^2 rho^2))^{-1} (dTbar) T
MatForm singular_gauge_alt(const AlgebraPtr& a, const RadialFn& rho2 = RadialFn::p());
// The same with the bracket written through xibar x and the eps contraction.
MatForm singular_gauge_explicit(const AlgebraPtr& a, const RadialFn& rho2 = RadialFn::p());

// Box = pd_k g^{hk} pd_h in the pair basis.
Element box(const AlgebraPtr& a);
// Raised-index partial matrix pd^{aa'} = eps^{ab} eps^{a'b'} pd_{bb'}.
MatForm partial_up(const AlgebraPtr& a);
// q xibar pd - q^{-1}/(q+1) I d, d = xi^i pd_i (hat: q^2/(q+1) in place of q^{-1}/(q+1))
MatForm dhat(const AlgebraPtr& a);
// 1 + q^2 rho^2 |x|^{-2}
Element phi(const AlgebraPtr& a, const RadialFn& rho2 = RadialFn::p());

struct ProjectorModule {
  EMat u;  // 4 x 2
  EMat P;  // 4 x 4
};
ProjectorModule projector_module(const AlgebraPtr& a);
// Displayed closed form of P.
EMat projector_closed(const AlgebraPtr& a);

// Braided moduli: z_mu = x - y_1 - ... - y_mu.
AlgebraPtr moduli_algebra(int n, Variant v = Variant::Standard);
MatForm z(const AlgebraPtr& a, int mu);

// Formal multi-instanton potential: phi_n = 1 + sum_mu rho_mu^2 / |z_mu|^2.
struct MultiPhi {
  int n = 0;
  std::vector<int> copies;  // rho_mu^2 |z_mu|^{-2}, mu = 1..n
  std::string str() const;
};
MultiPhi multi_phi(int n);

Report check_field_strength(const AlgebraPtr& a);
Report check_instanton(const AlgebraPtr& a);
Report check_antiinstanton(const AlgebraPtr& a);
Report check_singular(const AlgebraPtr& a);
Report check_phi(const AlgebraPtr& a);
Report check_projector(const AlgebraPtr& a);
Report check_braided_shift(int n, Variant v = Variant::Standard);
// Throws UnsupportedN for n > 2.
Report check_multi_harmonic(int n, Variant v = Variant::Standard);
Report check_u2(Variant v = Variant::Standard);

}  // namespace gauge
}  // namespace qhopf
