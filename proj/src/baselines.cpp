#include "lmg/baselines.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lmg/entropy.hpp"
#include "lmg/steered.hpp"

namespace lmg {

namespace {

constexpr double kLn2 = std::numbers::ln2;

// Eq. 3-3 evaluated on model (expansion) moments: small negative entries
// are artifacts of the truncation, so clamp leniently instead of throwing.
TwoSpinXState lenient_two_spin_state(const CollectiveMoments& m) {
  const double n = static_cast<double>(m.n);
  const double denom = 4.0 * n * (n - 1.0);
  TwoSpinXState x;
  x.v1 = std::max(0.0, (n * n - 2.0 * n + 4.0 * m.sz2 + 4.0 * (n - 1.0) * m.sz) / denom);
  x.v2 = std::max(0.0, (n * n - 2.0 * n + 4.0 * m.sz2 - 4.0 * (n - 1.0) * m.sz) / denom);
  x.y = std::max(0.0, (n * n - 4.0 * m.sz2) / denom);
  x.u = std::max(0.0, (m.sx2 - m.sy2) / (n * (n - 1.0)));
  return x;
}

MeasureSet measures_of_x(const TwoSpinXState& x) {
  MeasureSet ms;
  ms.coherence = coherence_two_spin(x);
  ms.asc = asc_closed_form(x);
  ms.msc = msc_closed_form(x);
  ms.single_max = max_single_spin_coherence(single_spin_state(x));
  return ms;
}

}  // namespace

double mean_field_energy_per_spin(double gamma, double h, double theta, double phi) {
  const double st = std::sin(theta);
  const double cp = std::cos(phi), sp = std::sin(phi);
  return -0.5 * st * st * (cp * cp + gamma * sp * sp) - h * std::cos(theta);
}

MeanFieldSolution mean_field_minimize(double gamma, double h) {
  if (!(gamma >= 0.0 && gamma <= 1.0) || !(h >= 0.0))
    throw std::invalid_argument("mean_field_minimize: parameters out of range");
  MeanFieldSolution sol;
  if (h >= 1.0) {
    sol.theta0 = 0.0;
    sol.phase = h == 1.0 ? Phase::Critical : Phase::Symmetric;
  } else {
    sol.theta0 = std::acos(h);
    sol.phase = Phase::Broken;
    sol.phi_degenerate = (gamma == 1.0);
  }
  sol.phi0 = 0.0;
  return sol;
}

TwoSpinXState tdl_two_spin_state(double h) {
  TwoSpinXState x;
  if (h >= 1.0) return x;  // fully polarized: (1, 0, 0, 0)
  const double hp = 1.0 + h, hm = 1.0 - h;
  x.v1 = 0.25 * hp * hp;
  x.v2 = 0.25 * hm * hm;
  x.y = x.u = 0.25 * (1.0 - h * h);
  return x;
}

MeasureSet tdl_measures(double gamma, double h) {
  if (gamma == 1.0)
    throw std::invalid_argument("tdl_measures: gamma = 1 has an exact finite-N solution; use isotropic_measures");
  if (!(gamma >= 0.0 && gamma < 1.0) || !(h >= 0.0))
    throw std::invalid_argument("tdl_measures: parameters out of range");

  MeasureSet ms;
  if (h >= 1.0) {
    ms.coherence = {0.0, 0.0};
    ms.asc = {2.0, 2.0};
    ms.msc = {0.0, 0.0};
    ms.single_max = {1.0, 1.0};
    return ms;
  }

  const double hp = 1.0 + h, hm = 1.0 - h;
  const double h2 = h * h;
  const double root = std::sqrt(1.0 + h2 * h2 - h2);

  ms.coherence.l1 = 1.0 - h2;
  ms.coherence.rel_ent = 1.0 + 0.5 * (1.0 + h2) * std::log2(1.0 + h2) -
                         0.5 * (hp * hp * std::log2(hp) + (hm > 0.0 ? hm * hm * std::log2(hm) : 0.0));
  ms.asc.l1 = 0.5 * (1.0 - h2 + 3.0 * h + root);
  ms.asc.rel_ent = 2.0 - binary_entropy(0.5 * hp) - binary_entropy(0.5 * (1.0 + root));
  ms.msc.l1 = std::sqrt(1.0 - h2);
  ms.msc.rel_ent = binary_entropy(0.5 * hp);
  ms.single_max = tdl_single_spin_max(h);
  return ms;
}

CoherencePair tdl_single_spin_max(double h) {
  if (h >= 1.0) return {1.0, 1.0};
  return {h, 1.0 - binary_entropy(0.5 * (1.0 + h))};
}

AscMinimum tdl_asc_rel_ent_minimum() {
  auto f = [](double h) {
    const double root = std::sqrt(1.0 + h * h * h * h - h * h);
    return 2.0 - binary_entropy(0.5 * (1.0 + h)) - binary_entropy(0.5 * (1.0 + root));
  };
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = 0.0, b = 1.0;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > 1e-8) {
    if (f1 > f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = f(x1);
    }
  }
  AscMinimum min;
  min.h = 0.5 * (a + b);
  min.value = f(min.h);
  return min;
}

IsotropicSolution isotropic_solution(long n, double h) {
  if (n < 2) throw std::invalid_argument("isotropic_solution: N must be >= 2");
  const double s = 0.5 * static_cast<double>(n);
  IsotropicSolution iso;
  if (h >= 1.0) {
    iso.m0 = s;
  } else {
    const double target = h * s;
    // Candidates bracketing the target on the integer (half-integer) grid.
    const double offset = (n % 2 == 0) ? 0.0 : 0.5;
    double lo = std::floor(target - offset) + offset;
    double hi = lo + 1.0;
    lo = std::max(lo, -s);
    hi = std::min(hi, s);
    const double dlo = std::fabs(target - lo), dhi = std::fabs(hi - target);
    if (dlo < dhi) {
      iso.m0 = lo;
    } else if (dhi < dlo) {
      iso.m0 = hi;
    } else {
      // Exact tie: match the solver, which prefers the parity class of M = N/2.
      const bool lo_in_polarized_class = std::fmod(std::fabs(s - lo), 2.0) == 0.0;
      iso.m0 = lo_in_polarized_class ? lo : hi;
    }
  }
  iso.n_plus = static_cast<double>(n) + 2.0 * iso.m0;
  iso.n_minus = static_cast<double>(n) - 2.0 * iso.m0;
  const double nn = static_cast<double>(n);
  iso.x0 = std::sqrt(iso.n_plus * iso.n_plus * iso.n_minus * iso.n_minus +
                     16.0 * iso.m0 * iso.m0 * (nn - 1.0) * (nn - 1.0)) /
           (2.0 * nn * (nn - 1.0));
  return iso;
}

MeasureSet isotropic_measures(long n, double h) {
  MeasureSet ms;
  if (h >= 1.0) {
    ms.coherence = {0.0, 0.0};
    ms.asc = {2.0, 2.0};
    ms.msc = {0.0, 0.0};
    ms.single_max = {1.0, 1.0};
    return ms;
  }
  const IsotropicSolution iso = isotropic_solution(n, h);
  const double nn = static_cast<double>(n);
  const double np = iso.n_plus, nm = iso.n_minus, m0 = iso.m0;

  const double coh = np * nm / (2.0 * nn * (nn - 1.0));
  ms.coherence = {coh, coh};

  ms.msc.l1 = std::sqrt(np * nm) / (2.0 * nn - 2.0);
  ms.msc.rel_ent = clamp_roundoff(binary_entropy((np - 1.0) / (2.0 * nn - 2.0)) -
                                  binary_entropy(0.5 + std::sqrt(nn * nn + 12.0 * m0 * m0) / (4.0 * nn - 4.0)));

  ms.asc.l1 = iso.x0 + (np * std::fabs(1.0 - 2.0 * m0) + nm * (nn + 4.0 * m0 + 1.0)) /
                           (2.0 * nn * (nn - 1.0));
  ms.asc.rel_ent = 2.0 - 2.0 * binary_entropy(0.5 * (1.0 + iso.x0)) + binary_entropy(np / (2.0 * nn)) -
                   (np / (2.0 * nn)) * binary_entropy(nm / (2.0 * nn - 2.0)) -
                   (nm / (2.0 * nn)) * binary_entropy(np / (2.0 * nn - 2.0));

  const double m = 2.0 * m0 / nn;
  ms.single_max = {std::fabs(m), 1.0 - binary_entropy(0.5 * (1.0 + m))};
  return ms;
}

SymmetricPhaseCoefficients symmetric_coefficients(double gamma, double h) {
  if (!(h > 1.0)) throw std::invalid_argument("symmetric_coefficients: requires h > 1");
  SymmetricPhaseCoefficients c;
  c.xi = (h - 1.0) * (h - gamma);
  c.gamma_plus = 1.0 + gamma;
  c.gamma_minus = 1.0 - gamma;
  const double sx = std::sqrt(c.xi);
  c.b_z = 1.0 + (c.gamma_plus - 2.0 * h) / (2.0 * sx);
  c.b_xx = (h - gamma) / sx;
  c.b_yy = 1.0 / c.b_xx;
  c.b_zz = 2.0 * c.b_z;
  c.b0 = c.b_xx - c.b_yy;
  return c;
}

BrokenPhaseCoefficients broken_coefficients(double gamma, double h) {
  if (!(h >= 0.0 && h < 1.0) || !(gamma >= 0.0 && gamma < 1.0))
    throw std::invalid_argument("broken_coefficients: requires h < 1 and gamma < 1");
  BrokenPhaseCoefficients c;
  c.lambda = 1.0 - h * h;
  c.h_plus = 1.0 + h;
  c.h_minus = 1.0 - h;
  const double gm = 1.0 - gamma;
  c.c_z = h * std::sqrt(gm / c.lambda);
  c.c_xx = 2.0 + (gamma * h * h + gamma - 2.0) / std::sqrt(c.lambda * gm);
  c.c_yy = h / c.c_z;
  c.c_zz = 2.0 * h * c.c_z + std::sqrt(c.lambda * gm);
  c.c0 = c.c_xx - c.c_yy;

  const double root = std::sqrt(c.lambda * c.lambda + h * h);
  c.kappa_plus = 1.0 + root;
  c.kappa_minus = 1.0 - root;
  c.a_l1 = 0.5 * (c.c0 - c.c_zz);
  c.kappa1 = c.c_zz + (c.lambda * c.c0 + 4.0 * h * c.c_z) / (1.0 + h * h);
  c.kappa2 = (h * c.c_z + c.lambda * c.a_l1) / root;
  c.kappa3 = (2.0 * c.c_z - h * c.c_zz) / (2.0 * c.lambda);

  c.b_l1 = 0.5 * (c.kappa2 + 3.0 * c.c_z + c.c0);
  c.d_l1 = (c.c0 - c.c_zz) / (2.0 * std::sqrt(c.lambda));
  c.a_r = 0.25 * c.kappa1 * (1.0 / kLn2 + std::log2(0.5 * (1.0 + h * h))) -
          0.5 * c.c_zz * (1.0 + 1.0 / kLn2) +
          0.25 * (c.c_zz + 2.0 * c.c_z) * std::log2(0.25 * c.h_plus * c.h_plus) +
          0.25 * (c.c_zz - 2.0 * c.c_z) * std::log2(0.25 * c.h_minus * c.h_minus);
  c.b_r = 0.5 * c.kappa2 * std::log2(c.kappa_plus / c.kappa_minus);
  c.d_r = c.kappa3 * std::log2(c.h_minus / c.h_plus) + (2.0 * c.kappa3 * h + c.a_l1) / (2.0 * kLn2);
  return c;
}

CollectiveMoments cut_moments(double gamma, double h, long n) {
  CollectiveMoments m;
  m.n = n;
  const double nn = static_cast<double>(n);
  if (h > 1.0) {
    const SymmetricPhaseCoefficients b = symmetric_coefficients(gamma, h);
    m.sz = 0.5 * nn * (1.0 + b.b_z / nn);
    m.sx2 = 0.25 * nn * nn * (b.b_xx / nn);
    m.sy2 = 0.25 * nn * nn * (b.b_yy / nn);
    m.sz2 = 0.25 * nn * nn * (1.0 + b.b_zz / nn);
  } else if (h < 1.0) {
    const BrokenPhaseCoefficients c = broken_coefficients(gamma, h);
    m.sz = 0.5 * nn * (h + c.c_z / nn);
    m.sx2 = 0.25 * nn * nn * (c.lambda + c.c_xx / nn);
    m.sy2 = 0.25 * nn * nn * (c.c_yy / nn);
    m.sz2 = 0.25 * nn * nn * (h * h + c.c_zz / nn);
  } else {
    throw std::invalid_argument("cut_moments: h = 1 needs cut_moments_critical with extracted coefficients");
  }
  return m;
}

CollectiveMoments cut_moments_critical(const CriticalCoefficients& c, long n) {
  CollectiveMoments m;
  m.n = n;
  const double nn = static_cast<double>(n);
  const double n23 = std::pow(nn, 2.0 / 3.0);
  const double n43 = std::pow(nn, 4.0 / 3.0);
  m.sz = 0.5 * nn * (1.0 + 1.0 / nn + c.a_z / n23);
  m.sx2 = 0.25 * nn * nn * (c.a_xx / n23);
  m.sy2 = 0.25 * nn * nn * (c.a_yy / n43);
  m.sz2 = 0.25 * nn * nn * (1.0 + 2.0 / nn + c.a_zz / n23);
  return m;
}

MeasureSet cut_model_measures(double gamma, double h, long n) {
  return measures_of_x(lenient_two_spin_state(cut_moments(gamma, h, n)));
}

PredictedScaling cut_predicted_values(double gamma, double h, long n, Phase phase,
                                      const CriticalCoefficients* crit) {
  PredictedScaling p;
  const double nn = static_cast<double>(n);
  switch (phase) {
    case Phase::Critical: {
      if (h != 1.0) throw std::invalid_argument("cut_predicted_values: critical phase requires h = 1");
      if (crit == nullptr)
        throw std::invalid_argument("cut_predicted_values: critical phase needs extracted coefficients");
      const double n23 = std::pow(nn, 2.0 / 3.0);
      const double n13 = std::pow(nn, 1.0 / 3.0);
      p.value[0] = crit->a_xx / n23;
      p.value[1] = -0.5 * crit->a_zz / n23;
      p.value[2] = 2.0 + 0.5 * (4.0 * crit->a_z + crit->a_xx) / n23;
      p.value[3] = 2.0 + 0.25 * (2.0 * crit->a_z + crit->a_zz) / (n23 * kLn2);
      p.value[4] = crit->a_xx / (std::sqrt(-2.0 * crit->a_z) * n13);
      p.value[5] = -crit->a_xx * crit->a_xx / (4.0 * crit->a_zz * n23 * kLn2);
      const double s[6] = {-2.0 / 3.0, -2.0 / 3.0, -2.0 / 3.0, -2.0 / 3.0, -1.0 / 3.0, -2.0 / 3.0};
      for (int i = 0; i < 6; ++i) p.slope[i] = s[i];
      break;
    }
    case Phase::Symmetric: {
      if (!(h > 1.0)) throw std::invalid_argument("cut_predicted_values: symmetric phase requires h > 1");
      const SymmetricPhaseCoefficients b = symmetric_coefficients(gamma, h);
      p.value[0] = (2.0 * b.b0 - b.b_z) / nn;
      p.value[1] = -b.b_z / nn;
      p.value[2] = 2.0 + 2.0 * (b.b0 + b.b_z) / nn;
      p.value[3] = 2.0 + b.b_z / (nn * kLn2);
      p.value[4] = (2.0 * b.b0 - b.b_z) / (std::sqrt(-2.0 * b.b_z) * std::sqrt(nn));
      p.value[5] = -(2.0 * b.b0 - b.b_z) * (2.0 * b.b0 - b.b_z) / (8.0 * nn * b.b_z * kLn2);
      const double s[6] = {-1.0, -1.0, -1.0, -1.0, -0.5, -1.0};
      for (int i = 0; i < 6; ++i) p.slope[i] = s[i];
      break;
    }
    case Phase::Broken: {
      if (!(h < 1.0)) throw std::invalid_argument("cut_predicted_values: broken phase requires h < 1");
      const BrokenPhaseCoefficients c = broken_coefficients(gamma, h);
      const MeasureSet tdl = tdl_measures(gamma, h);
      p.value[0] = tdl.coherence.l1 + c.a_l1 / nn;
      p.value[1] = tdl.coherence.rel_ent + c.a_r / nn;
      p.value[2] = tdl.asc.l1 + c.b_l1 / nn;
      p.value[3] = tdl.asc.rel_ent + c.b_r / nn;
      p.value[4] = tdl.msc.l1 + c.d_l1 / nn;
      p.value[5] = tdl.msc.rel_ent + c.d_r / nn;
      for (int i = 0; i < 6; ++i) p.slope[i] = -1.0;
      break;
    }
  }
  return p;
}

}  // namespace lmg
