#include "lmg/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lmg/entropy.hpp"
#include "two_qubit_detail.hpp"

namespace lmg {

double concurrence_x(const TwoSpinXState& x) {
  return 2.0 * std::max({0.0, x.u - x.y, x.y - std::sqrt(x.v1 * x.v2)});
}

double eof_x(const TwoSpinXState& x) {
  const double c = concurrence_x(x);
  return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

double discord_x(const TwoSpinXState& x, int theta_points, int phi_points) {
  // S(rho_A) with rho_A diagonal, and S(rho_AB) from the X eigenvalues.
  const double s_a = binary_entropy(x.v1 + x.y);
  const auto ev = x_eigenvalues(x);
  double s_ab = 0.0;
  for (double p : ev) s_ab -= plog2p(std::max(0.0, p));

  const Eigen::Matrix4cd rho = x_matrix(x).cast<std::complex<double>>();
  auto conditional = [&](double theta, double phi) {
    double s = 0.0;
    for (int outcome = 0; outcome < 2; ++outcome) {
      const double t = outcome == 0 ? theta : M_PI - theta;
      const double f = outcome == 0 ? phi : phi + M_PI;
      Eigen::Matrix2cd collapsed;
      const double p = detail::collapse(rho, detail::direction_projector(t, f), &collapsed);
      if (p < 1e-14) continue;
      collapsed /= p;
      s += p * detail::qubit_entropy(collapsed);
    }
    return s;
  };

  const double dtheta = 0.5 * M_PI / (theta_points - 1);  // antipodal outcome covers the rest
  const double dphi = 2.0 * M_PI / phi_points;
  double best = std::numeric_limits<double>::infinity();
  double bt = 0.0, bp = 0.0;
  for (int it = 0; it < theta_points; ++it)
    for (int ip = 0; ip < phi_points; ++ip) {
      const double s = conditional(it * dtheta, ip * dphi);
      if (s < best) {
        best = s;
        bt = it * dtheta;
        bp = ip * dphi;
      }
    }

  double t_best;
  detail::golden_max([&](double t) { return -conditional(t, bp); }, std::max(0.0, bt - dtheta),
                     std::min(0.5 * M_PI, bt + dtheta), &t_best);
  double p_best;
  const double refined =
      -detail::golden_max([&](double p) { return -conditional(t_best, p); }, bp - dphi, bp + dphi, &p_best);
  best = std::min(best, refined);

  return std::max(0.0, s_a - s_ab + best);
}

CorrelationPair correlations_x(const TwoSpinXState& x) {
  return {eof_x(x), discord_x(x)};
}

}  // namespace lmg
