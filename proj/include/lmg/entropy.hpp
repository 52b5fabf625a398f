#pragma once

#include <cmath>

namespace lmg {

/// x log2 x with the convention 0 log 0 = 0.
inline double plog2p(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

/// Binary Shannon entropy in bits; exactly 0 at p = 0 and p = 1.
/// Arguments a hair outside [0, 1] from roundoff are clamped.
inline double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -plog2p(p) - plog2p(1.0 - p);
}

/// Clamp a roundoff-negative value (magnitude below tol) to zero.
/// Values at or above -tol stay untouched only if nonnegative.
inline double clamp_roundoff(double x, double tol = 1e-12) {
  return (x < 0.0 && x > -tol) ? 0.0 : x;
}

}  // namespace lmg
