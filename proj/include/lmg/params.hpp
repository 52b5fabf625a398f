#pragma once

#include <stdexcept>
#include <string>

namespace lmg {

/// Parameters of the collective-spin model.  The coupling lambda is fixed
/// to 1, so h is measured in units of the spin-spin coupling.
struct ModelParams {
  long n = 2;           ///< particle count, N >= 2
  double gamma = 0.0;   ///< xy anisotropy, in [0, 1]
  double h = 0.0;       ///< transverse field, >= 0
  double lambda = 1.0;  ///< coupling, fixed to 1

  void validate() const {
    if (n < 2) throw std::invalid_argument("ModelParams: N must be >= 2, got " + std::to_string(n));
    if (!(gamma >= 0.0 && gamma <= 1.0))
      throw std::invalid_argument("ModelParams: gamma must be in [0, 1], got " + std::to_string(gamma));
    if (!(h >= 0.0)) throw std::invalid_argument("ModelParams: h must be >= 0, got " + std::to_string(h));
    if (lambda != 1.0) throw std::invalid_argument("ModelParams: lambda is fixed to 1");
  }
};

/// Residue class of the magnetization quantum number M within the S = N/2
/// multiplet.  The Hamiltonian couples M only to M +- 2, so the two classes
/// form independent blocks.
enum class Parity {
  M1,  ///< M = -N/2, -N/2 + 2, ...
  M2,  ///< M = -N/2 + 1, -N/2 + 3, ...
};

inline const char* to_string(Parity p) { return p == Parity::M1 ? "M1" : "M2"; }

}  // namespace lmg
