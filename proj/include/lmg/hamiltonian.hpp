#pragma once

#include <Eigen/Dense>
#include <vector>

#include "lmg/params.hpp"

namespace lmg {

/// One parity class of Dicke states |S, M> in the maximum spin sector
/// S = N/2.  m_values are ascending with step 2.
struct DickeSector {
  long n = 0;                    ///< particle count
  double spin = 0.0;             ///< total spin S = N/2
  Parity parity = Parity::M1;
  std::vector<double> m_values;  ///< ascending, step 2, |M| <= S
  std::size_t dim() const { return m_values.size(); }
  /// True if the fully polarized state M = S belongs to this class.
  bool contains_polarized() const {
    return !m_values.empty() && m_values.back() == spin;
  }
};

DickeSector dicke_sector(long n, Parity parity);

/// Real symmetric tridiagonal block of the Hamiltonian restricted to one
/// parity class, stored as diagonal and first off-diagonal (which couples
/// M to M + 2).  Includes the constant shift lambda (1 + gamma) / 2.
struct TridiagonalHamiltonian {
  ModelParams params;
  DickeSector sector;
  std::vector<double> diag;     ///< length dim
  std::vector<double> offdiag;  ///< length dim - 1
};

/// Build the block of the Hamiltonian for one parity class.
///
/// Diagonal entry at M:  -((1 + gamma) / N) (S(S+1) - M^2) - 2 h M + (1 + gamma) / 2.
/// Off-diagonal (M, M+2): -((1 - gamma) / (2N)) c(M) c(M+1) with
/// c(M) = sqrt(S(S+1) - M(M+1)), the raising-operator coefficient.
TridiagonalHamiltonian build_sector(const ModelParams& params, Parity parity);

/// Dense Hamiltonian over the full 2^N product space, built from the
/// pairwise couplings.  Test oracle; capped at N <= 12.
struct FullSpaceHamiltonian {
  ModelParams params;
  Eigen::MatrixXd matrix;  ///< 2^N x 2^N, real symmetric
};

FullSpaceHamiltonian build_full_space(const ModelParams& params);

}  // namespace lmg
