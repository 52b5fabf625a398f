#pragma once

#include <Eigen/Dense>

#include "lmg/reduced.hpp"

namespace lmg {

/// l1-norm and relative-entropy coherence of a state, both >= 0 and both
/// zero iff the state is diagonal in the reference basis.  Entropies are
/// in bits.
struct CoherencePair {
  double l1 = 0.0;
  double rel_ent = 0.0;
};

/// The six two-spin indicator values plus the single-spin maximum, as one
/// record.
struct MeasureSet {
  CoherencePair coherence;   ///< C_l1, C_r of the two-spin state
  CoherencePair asc;         ///< average steered coherence
  CoherencePair msc;         ///< maximal steered coherence
  CoherencePair single_max;  ///< basis-optimized single-spin coherence
};

/// Basis-dependent coherence of a d x d density matrix: the l1 norm of the
/// off-diagonal part and S(rho_diag) - S(rho), evaluated in the basis given
/// by the columns of the unitary `basis`.  Throws if rho is not normalized
/// or not positive semidefinite within 1e-10.
CoherencePair coherence_generic(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& basis);

/// Closed form for the two-spin X state:
///   l1 = 2 (y + u),
///   rel_ent = 2y + sum_i (eps_i log2 eps_i - v_i log2 v_i)
/// with eps_{1,2} = [v1 + v2 +- sqrt(4u^2 + (v1 - v2)^2)] / 2.
CoherencePair coherence_two_spin(const TwoSpinXState& x);

/// Maximum coherence of the single-spin marginal over all reference bases:
/// l1 = |m|, rel_ent = 1 - H2((1 + m) / 2).
CoherencePair max_single_spin_coherence(const SingleSpinState& s);

}  // namespace lmg
