#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lmg/hamiltonian.hpp"

namespace lmg {

/// Raised when the eigensolver fails to meet its tolerances within the
/// iteration caps.  Carries the residual that was achieved.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double achieved_residual)
      : std::runtime_error(what), residual(achieved_residual) {}
  double residual = 0.0;
};

/// Extremal eigenpair of one parity block.
struct GroundStateSolution {
  double energy = 0.0;
  std::vector<double> vector;  ///< unit 2-norm; first component of magnitude > 1e-12 is positive
  DickeSector sector;
  double residual = 0.0;       ///< ||H v - E v||_2
};

/// Number of eigenvalues of the tridiagonal matrix strictly below x,
/// via the Sturm sequence of LDL^T pivots.
std::size_t sturm_count(const std::vector<double>& diag, const std::vector<double>& offdiag, double x);

/// Smallest eigenpair of a real symmetric tridiagonal block.
///
/// Sturm bisection isolates the lowest eigenvalue to relative tolerance
/// 1e-13 (at most 200 steps), then inverse iteration (at most 50 sweeps)
/// builds the eigenvector; blocks of dimension < 64 fall back to a dense
/// implicit-shift QL decomposition.  Deterministic: identical input gives
/// bit-identical output.
GroundStateSolution ground_state(const TridiagonalHamiltonian& ham);

/// Solve both parity blocks and return the lower-energy solution.  Ties
/// within 1e-10 are broken toward the block containing M = N/2.
GroundStateSolution global_ground_state(const ModelParams& params);

}  // namespace lmg
