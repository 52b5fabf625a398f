#pragma once

#include <Eigen/Dense>

#include "lmg/coherence.hpp"

namespace lmg {

/// ASC and MSC of one state.
struct SteeredPair {
  CoherencePair asc;
  CoherencePair msc;
};

/// Direction of a rank-1 projective measurement (1 + m.sigma)/2 on the
/// Bloch sphere.
struct MeasurementDirection {
  double theta = 0.0;  ///< polar angle in [0, pi]
  double phi = 0.0;    ///< azimuth in [0, 2 pi)
};

/// Average steered coherence of the X state, closed form:
///   l1  = sum_i (x_i / 2 + |y - v_i|) + |y + u| + |y - u|
///   rel = 2 + H2(y + v1) - sum_i [H2((1 + x_i)/2) + (y + v_i) H2(y / (y + v_i))]
/// with x_{1,2} = sqrt((v1 - v2)^2 + 4 (y +- u)^2).
CoherencePair asc_closed_form(const TwoSpinXState& x);

/// Definitional ASC of an arbitrary two-qubit state: half the sum over
/// Alice's three Pauli measurements and both outcomes of the collapsed
/// coherence of B in the two complementary Pauli eigenbases.  Outcome
/// branches with probability below 1e-14 contribute zero.
CoherencePair asc_definitional(const Eigen::Matrix4cd& rho);

/// Maximal steered coherence of the X state, closed form:
///   l1  = 2 (y + u) / sqrt(1 - (v1 - v2)^2)
///   rel = H2(r11) - H2((1 + sqrt((1 - 2 r11)^2 + 4 r12^2)) / 2)
/// with r11 = v1/(1 + v1 - v2) + y/(1 - v1 + v2) and
/// r12 = (y + u) / sqrt(1 - (v1 - v2)^2).  When 1 - (v1 - v2)^2 < 1e-14
/// (marginal degenerate in the polarized limit) returns the limit (0, 0).
CoherencePair msc_closed_form(const TwoSpinXState& x);

SteeredPair steered_pair(const TwoSpinXState& x);

/// Result of the grid maximization, with the located optima.
struct MscGridResult {
  CoherencePair value;
  MeasurementDirection argmax_l1;
  MeasurementDirection argmax_rel_ent;
};

/// Brute-force MSC: maximize the coherence of the collapsed state of B in
/// the eigenbasis of rho_B over a (theta, phi) grid of projective
/// measurements on A, with one golden-section refinement pass around the
/// grid optimum.  Throws if rho_B is degenerate (splitting below 1e-12).
MscGridResult msc_grid_oracle(const Eigen::Matrix4cd& rho, int theta_points = 361, int phi_points = 720);

}  // namespace lmg
