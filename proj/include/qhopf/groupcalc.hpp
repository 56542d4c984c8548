#pragma once

#include <utility>

#include "qhopf/report.hpp"

namespace qhopf::sun {

// T = x |x|^{-1} and its bar.
MatForm T(const AlgebraPtr& a);
MatForm Tbar(const AlgebraPtr& a);
// omega = xi xbar |x|^{-2} (xi is the hat generator in the hat variant).
MatForm omega(const AlgebraPtr& a);
// q-determinant of a 2x2 matrix: m11 m22 - q m12 m21.
Element det_q(const MatForm& m);

// xbar x = x xbar = |x|^2 I, det_q centrality, T^dag T = T T^dag = I,
// Tbar = T^dag, det_q(T) = 1.
Report check_T_relations(const AlgebraPtr& a);
// T omega against the R-matrix reordering, 16 entries.
Report check_Txi(const AlgebraPtr& a);
// (dT) Tbar = q^{-1} omega + (q^{-1} - 1) theta I (hat: q, q - 1).
Report check_maurer_cartan(const AlgebraPtr& a);
// tr[Q (dT) Tbar] = tr[Q^{-1} (dTbar) T] = (q - 1)(q - q^{-2}) theta.
Report check_theta_trace(const AlgebraPtr& a);

std::pair<MatForm, MatForm> build_v(const AlgebraPtr& a);
Report check_v_duality(const AlgebraPtr& a);

struct SphereCoords {
  Element alpha, alpha_star, beta, beta_star, z;
};
// alpha' = sqrt2 alpha^* 2/(1+2|x|^2), beta' = sqrt2 gamma^* 2/(1+2|x|^2),
// z = (1-2|x|^2)/(1+2|x|^2), phases set to 1.
SphereCoords sphere_coords(const AlgebraPtr& a);
Report sphere_map(const AlgebraPtr& a);

}  // namespace qhopf::sun
