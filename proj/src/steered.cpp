#include "lmg/steered.hpp"

#include <cmath>
#include <stdexcept>

#include "lmg/entropy.hpp"
#include "two_qubit_detail.hpp"

namespace lmg {

CoherencePair asc_closed_form(const TwoSpinXState& x) {
  const double dv = x.v1 - x.v2;
  const double x1 = std::sqrt(dv * dv + 4.0 * (x.y + x.u) * (x.y + x.u));
  const double x2 = std::sqrt(dv * dv + 4.0 * (x.y - x.u) * (x.y - x.u));

  CoherencePair c;
  c.l1 = 0.5 * (x1 + x2) + std::fabs(x.y - x.v1) + std::fabs(x.y - x.v2) + std::fabs(x.y + x.u) +
         std::fabs(x.y - x.u);

  auto branch = [](double y, double v) {
    const double p = y + v;
    return p > 0.0 ? p * binary_entropy(y / p) : 0.0;
  };
  c.rel_ent = 2.0 + binary_entropy(x.y + x.v1) - binary_entropy(0.5 * (1.0 + x1)) -
              binary_entropy(0.5 * (1.0 + x2)) - branch(x.y, x.v1) - branch(x.y, x.v2);
  c.rel_ent = clamp_roundoff(c.rel_ent);
  return c;
}

CoherencePair asc_definitional(const Eigen::Matrix4cd& rho) {
  CoherencePair total;
  for (int i = 0; i < 3; ++i) {
    const Eigen::Matrix2cd sigma = detail::pauli(i);
    for (int outcome = 0; outcome < 2; ++outcome) {
      const double sign = outcome == 0 ? 1.0 : -1.0;
      const Eigen::Matrix2cd proj = 0.5 * (Eigen::Matrix2cd::Identity() + sign * sigma);
      Eigen::Matrix2cd collapsed;
      const double p = detail::collapse(rho, proj, &collapsed);
      if (p < 1e-14) continue;
      collapsed /= p;
      for (int j = 0; j < 3; ++j) {
        if (j == i) continue;
        const CoherencePair c = detail::qubit_coherence(collapsed, detail::pauli_eigenbasis(j));
        total.l1 += p * c.l1;
        total.rel_ent += p * c.rel_ent;
      }
    }
  }
  total.l1 *= 0.5;
  total.rel_ent *= 0.5;
  return total;
}

CoherencePair msc_closed_form(const TwoSpinXState& x) {
  const double dv = x.v1 - x.v2;
  const double denom2 = 1.0 - dv * dv;
  if (denom2 < 1e-14) return {0.0, 0.0};  // polarized limit

  CoherencePair c;
  c.l1 = 2.0 * (x.y + x.u) / std::sqrt(denom2);

  const double r11 = x.v1 / (1.0 + dv) + x.y / (1.0 - dv);
  const double r12 = (x.y + x.u) / std::sqrt(denom2);
  const double radius = std::sqrt((1.0 - 2.0 * r11) * (1.0 - 2.0 * r11) + 4.0 * r12 * r12);
  c.rel_ent = clamp_roundoff(binary_entropy(r11) - binary_entropy(0.5 * (1.0 + radius)));
  return c;
}

SteeredPair steered_pair(const TwoSpinXState& x) {
  return {asc_closed_form(x), msc_closed_form(x)};
}

MscGridResult msc_grid_oracle(const Eigen::Matrix4cd& rho, int theta_points, int phi_points) {
  if (theta_points < 3 || phi_points < 3) throw std::invalid_argument("msc_grid_oracle: grid too coarse");

  // Eigenbasis of the unmeasured marginal rho_B.
  Eigen::Matrix2cd rho_b = Eigen::Matrix2cd::Zero();
  for (int b = 0; b < 2; ++b)
    for (int d = 0; d < 2; ++d) rho_b(b, d) = rho(b, d) + rho(2 + b, 2 + d);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(rho_b);
  if (std::fabs(es.eigenvalues()(1) - es.eigenvalues()(0)) < 1e-12)
    throw std::invalid_argument("msc_grid_oracle: rho_B is degenerate; the reference basis is undefined");
  const Eigen::Matrix2cd basis = es.eigenvectors();

  auto objective = [&](double theta, double phi) -> CoherencePair {
    Eigen::Matrix2cd collapsed;
    const double p = detail::collapse(rho, detail::direction_projector(theta, phi), &collapsed);
    if (p < 1e-14) return {0.0, 0.0};
    collapsed /= p;
    return detail::qubit_coherence(collapsed, basis);
  };

  const double dtheta = M_PI / (theta_points - 1);
  const double dphi = 2.0 * M_PI / phi_points;

  MscGridResult best;
  best.value = {-1.0, -1.0};
  for (int it = 0; it < theta_points; ++it) {
    const double theta = it * dtheta;
    for (int ip = 0; ip < phi_points; ++ip) {
      const double phi = ip * dphi;
      const CoherencePair c = objective(theta, phi);
      if (c.l1 > best.value.l1) {
        best.value.l1 = c.l1;
        best.argmax_l1 = {theta, phi};
      }
      if (c.rel_ent > best.value.rel_ent) {
        best.value.rel_ent = c.rel_ent;
        best.argmax_rel_ent = {theta, phi};
      }
    }
  }

  // One refinement pass: golden section in theta at the best phi, then in
  // phi at the refined theta.
  auto refine = [&](MeasurementDirection* dir, bool use_l1) -> double {
    auto f_theta = [&](double t) {
      const CoherencePair c = objective(t, dir->phi);
      return use_l1 ? c.l1 : c.rel_ent;
    };
    double t_best;
    detail::golden_max(f_theta, std::max(0.0, dir->theta - dtheta), std::min(M_PI, dir->theta + dtheta),
                       &t_best);
    dir->theta = t_best;
    auto f_phi = [&](double p) {
      const CoherencePair c = objective(dir->theta, p);
      return use_l1 ? c.l1 : c.rel_ent;
    };
    double p_best;
    const double val = detail::golden_max(f_phi, dir->phi - dphi, dir->phi + dphi, &p_best);
    dir->phi = p_best;
    return val;
  };
  best.value.l1 = std::max(best.value.l1, refine(&best.argmax_l1, true));
  best.value.rel_ent = std::max(best.value.rel_ent, refine(&best.argmax_rel_ent, false));
  return best;
}

}  // namespace lmg
