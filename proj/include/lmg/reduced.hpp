#pragma once

#include <Eigen/Dense>
#include <array>

#include "lmg/solver.hpp"

namespace lmg {

/// Collective expectation values of a state in the S = N/2 sector.
struct CollectiveMoments {
  long n = 0;
  double sz = 0.0;   ///< <S_z>
  double sx2 = 0.0;  ///< <S_x^2>
  double sy2 = 0.0;  ///< <S_y^2>
  double sz2 = 0.0;  ///< <S_z^2>
};

/// Parameters of the two-spin reduced X state
///
///   [ v1  0   0   u  ]
///   [ 0   y   y   0  ]
///   [ 0   y   y   0  ]
///   [ u   0   0   v2 ]
///
/// in the product basis {uu, ud, du, dd}.  v1 + v2 + 2y = 1, u >= 0.
struct TwoSpinXState {
  double v1 = 1.0;
  double v2 = 0.0;
  double y = 0.0;
  double u = 0.0;
};

/// Single-spin marginal: diagonal in the standard basis.
struct SingleSpinState {
  double p_up = 1.0;         ///< population of the up state, v1 + y
  double magnetization = 1.0;  ///< m = 2 <S_z> / N; p_up = (1 + m) / 2
};

/// Collective moments of a sector eigenvector.  <S_z>, <S_z^2> come from
/// diagonal sums; <S_x^2> +- <S_y^2> from the Casimir identity and the
/// offset-2 ladder sums.
CollectiveMoments moments_from_state(const GroundStateSolution& sol);

/// Evaluate the two-spin reduced state from collective moments.
/// Roundoff-negative y or u with magnitude below 1e-12 is clamped to 0;
/// larger positivity violations throw (they signal an upstream bug).
TwoSpinXState two_spin_state(const CollectiveMoments& m);

SingleSpinState single_spin_state(const TwoSpinXState& x);

/// Assemble the dense 4x4 matrix of an X state.
Eigen::Matrix4d x_matrix(const TwoSpinXState& x);

/// Eigenvalues of the X matrix: {2y, 0, (v1+v2)/2 +- sqrt(u^2 + (v1-v2)^2/4)}.
std::array<double, 4> x_eigenvalues(const TwoSpinXState& x);

/// Direct 4x4 partial trace of a full-space pure state over all spins but
/// (i, j).  Asserts the X shape (non-X entries below 1e-10) and agreement
/// across spin pairs.  Test oracle; requires N <= 12.
TwoSpinXState partial_trace_oracle(long n, const Eigen::VectorXd& state, long spin_i, long spin_j);

/// The raw 4x4 two-spin reduced matrix of a full-space pure state, without
/// any shape assertion.
Eigen::Matrix4d partial_trace_matrix(long n, const Eigen::VectorXd& state, long spin_i, long spin_j);

}  // namespace lmg
