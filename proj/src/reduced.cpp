#include "lmg/reduced.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lmg/entropy.hpp"

namespace lmg {

CollectiveMoments moments_from_state(const GroundStateSolution& sol) {
  const DickeSector& sec = sol.sector;
  const std::size_t dim = sec.dim();
  if (sol.vector.size() != dim) throw std::invalid_argument("moments_from_state: vector/sector mismatch");

  const double s = sec.spin;
  const double casimir = s * (s + 1.0);

  double sz = 0.0, sz2 = 0.0;
  for (std::size_t k = 0; k < dim; ++k) {
    const double w = sol.vector[k] * sol.vector[k];
    const double m = sec.m_values[k];
    sz += w * m;
    sz2 += w * m * m;
  }

  // <S+^2 + S-^2> / 2 = <S_x^2> - <S_y^2>, an offset-2 sum within the block.
  double dxy = 0.0;
  for (std::size_t k = 0; k + 1 < dim; ++k) {
    const double m = sec.m_values[k];
    const double c1 = std::sqrt(std::max(0.0, casimir - m * (m + 1.0)));
    const double c2 = std::sqrt(std::max(0.0, casimir - (m + 1.0) * (m + 2.0)));
    dxy += sol.vector[k] * sol.vector[k + 1] * c1 * c2;
  }

  CollectiveMoments mom;
  mom.n = sec.n;
  mom.sz = sz;
  mom.sz2 = sz2;
  const double perp = casimir - sz2;  // <S_x^2> + <S_y^2>
  mom.sx2 = 0.5 * (perp + dxy);
  mom.sy2 = 0.5 * (perp - dxy);
  return mom;
}

TwoSpinXState two_spin_state(const CollectiveMoments& m) {
  if (m.n < 2) throw std::invalid_argument("two_spin_state: N must be >= 2");
  const double n = static_cast<double>(m.n);
  const double denom = 4.0 * n * (n - 1.0);

  TwoSpinXState x;
  x.v1 = (n * n - 2.0 * n + 4.0 * m.sz2 + 4.0 * (n - 1.0) * m.sz) / denom;
  x.v2 = (n * n - 2.0 * n + 4.0 * m.sz2 - 4.0 * (n - 1.0) * m.sz) / denom;
  x.y = (n * n - 4.0 * m.sz2) / denom;
  x.u = (m.sx2 - m.sy2) / (n * (n - 1.0));

  constexpr double tol = 1e-12;
  x.v1 = clamp_roundoff(x.v1, tol);
  x.v2 = clamp_roundoff(x.v2, tol);
  x.y = clamp_roundoff(x.y, tol);
  x.u = clamp_roundoff(x.u, tol);
  if (x.v1 < 0.0 || x.v2 < 0.0 || x.y < 0.0 || x.u < 0.0 ||
      x.u * x.u > x.v1 * x.v2 + tol)
    throw std::runtime_error("two_spin_state: positivity violated beyond tolerance (upstream solver bug?)");
  return x;
}

SingleSpinState single_spin_state(const TwoSpinXState& x) {
  SingleSpinState s;
  s.p_up = x.v1 + x.y;
  s.magnetization = x.v1 - x.v2;
  return s;
}

Eigen::Matrix4d x_matrix(const TwoSpinXState& x) {
  Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
  rho(0, 0) = x.v1;
  rho(3, 3) = x.v2;
  rho(1, 1) = rho(2, 2) = rho(1, 2) = rho(2, 1) = x.y;
  rho(0, 3) = rho(3, 0) = x.u;
  return rho;
}

std::array<double, 4> x_eigenvalues(const TwoSpinXState& x) {
  const double mean = 0.5 * (x.v1 + x.v2);
  const double split = std::sqrt(x.u * x.u + 0.25 * (x.v1 - x.v2) * (x.v1 - x.v2));
  return {2.0 * x.y, 0.0, mean + split, mean - split};
}

Eigen::Matrix4d partial_trace_matrix(long n, const Eigen::VectorXd& state, long spin_i, long spin_j) {
  if (n > 12) throw std::invalid_argument("partial_trace_matrix: N > 12");
  if (spin_i == spin_j || spin_i < 0 || spin_j < 0 || spin_i >= n || spin_j >= n)
    throw std::invalid_argument("partial_trace_matrix: bad spin pair");
  const long dim = 1L << n;
  if (state.size() != dim) throw std::invalid_argument("partial_trace_matrix: state size mismatch");

  // Two-spin basis index: bit 1 = spin i, bit 0 = spin j, up = 1.
  // Reduced basis order {uu, ud, du, dd} maps to index 3 - (2*bi + bj).
  Eigen::Matrix4d rho = Eigen::Matrix4d::Zero();
  const long mask_i = 1L << spin_i;
  const long mask_j = 1L << spin_j;
  for (long s = 0; s < dim; ++s) {
    const int a = 3 - static_cast<int>(2 * ((s >> spin_i) & 1) + ((s >> spin_j) & 1));
    for (int pat = 0; pat < 4; ++pat) {
      long t = s & ~(mask_i | mask_j);
      if (pat & 2) t |= mask_i;
      if (pat & 1) t |= mask_j;
      if (t < s) continue;  // visit each (s, t) pair once
      const int b = 3 - pat;
      rho(a, b) += state(s) * state(t);
      if (t != s) rho(b, a) += state(t) * state(s);
    }
  }
  return rho;
}

TwoSpinXState partial_trace_oracle(long n, const Eigen::VectorXd& state, long spin_i, long spin_j) {
  const Eigen::Matrix4d rho = partial_trace_matrix(n, state, spin_i, spin_j);

  constexpr double tol = 1e-10;
  const double off = std::max({std::fabs(rho(0, 1)), std::fabs(rho(0, 2)), std::fabs(rho(1, 0)),
                               std::fabs(rho(2, 0)), std::fabs(rho(1, 3)), std::fabs(rho(2, 3)),
                               std::fabs(rho(3, 1)), std::fabs(rho(3, 2))});
  if (off > tol)
    throw std::runtime_error("partial_trace_oracle: reduced state is not X-shaped, max stray entry " +
                             std::to_string(off));
  const double y_spread = std::max({std::fabs(rho(1, 1) - rho(2, 2)), std::fabs(rho(1, 1) - rho(1, 2)),
                                    std::fabs(rho(1, 1) - rho(2, 1))});
  if (y_spread > tol)
    throw std::runtime_error("partial_trace_oracle: central block entries disagree");

  // Pair independence: compare against a reference pair.
  if (n > 2) {
    const long ri = (spin_i == 0 && spin_j == 1) || (spin_i == 1 && spin_j == 0) ? n - 2 : 0;
    const long rj = (spin_i == 0 && spin_j == 1) || (spin_i == 1 && spin_j == 0) ? n - 1 : 1;
    const Eigen::Matrix4d ref = partial_trace_matrix(n, state, ri, rj);
    if ((rho - ref).cwiseAbs().maxCoeff() > tol)
      throw std::runtime_error("partial_trace_oracle: reduced state depends on the spin pair");
  }

  TwoSpinXState x;
  x.v1 = rho(0, 0);
  x.v2 = rho(3, 3);
  x.y = rho(1, 1);
  x.u = rho(0, 3);
  x.v1 = clamp_roundoff(x.v1);
  x.v2 = clamp_roundoff(x.v2);
  x.y = clamp_roundoff(x.y);
  x.u = clamp_roundoff(x.u);
  return x;
}

}  // namespace lmg
