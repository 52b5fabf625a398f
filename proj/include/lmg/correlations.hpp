#pragma once

#include "lmg/reduced.hpp"

namespace lmg {

/// Entanglement of formation and quantum discord of one two-spin state,
/// both in bits.
struct CorrelationPair {
  double eof = 0.0;
  double discord = 0.0;
};

/// Concurrence of the X state: 2 max(0, u - y, y - sqrt(v1 v2)).
double concurrence_x(const TwoSpinXState& x);

/// Entanglement of formation from the concurrence:
/// H2((1 + sqrt(1 - C^2)) / 2).
double eof_x(const TwoSpinXState& x);

/// Quantum discord with the measurement on spin A, minimizing the
/// conditional entropy over projective directions on a (theta, phi) grid
/// with one golden-section refinement pass.
double discord_x(const TwoSpinXState& x, int theta_points = 181, int phi_points = 360);

CorrelationPair correlations_x(const TwoSpinXState& x);

}  // namespace lmg
