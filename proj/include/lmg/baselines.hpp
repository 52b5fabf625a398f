#pragma once

#include "lmg/coherence.hpp"
#include "lmg/reduced.hpp"

namespace lmg {

enum class Phase { Broken, Critical, Symmetric };

inline Phase phase_of(double h) {
  if (h == 1.0) return Phase::Critical;
  return h > 1.0 ? Phase::Symmetric : Phase::Broken;
}

/// Product-ansatz minimizer of the classical energy surface.
struct MeanFieldSolution {
  double theta0 = 0.0;
  double phi0 = 0.0;
  Phase phase = Phase::Symmetric;
  bool phi_degenerate = false;  ///< gamma = 1, h < 1: energy independent of phi
};

/// Classical energy per spin of the product ansatz with angles (theta, phi):
/// -(1/2) sin^2(theta) (cos^2(phi) + gamma sin^2(phi)) - h cos(theta).
double mean_field_energy_per_spin(double gamma, double h, double theta, double phi);

/// theta0 = 0 for h >= 1, arccos h otherwise; phi0 = 0 for gamma < 1.
MeanFieldSolution mean_field_minimize(double gamma, double h);

/// Thermodynamic-limit values of all indicators for gamma < 1.  For h >= 1
/// the state is fully polarized: coherence (0,0), ASC (2,2), MSC (0,0).
/// Rejects gamma = 1 (use the isotropic path).
MeasureSet tdl_measures(double gamma, double h);

/// Thermodynamic-limit two-spin X state (gamma < 1).
TwoSpinXState tdl_two_spin_state(double h);

/// Basis-optimized single-spin coherence in the thermodynamic limit:
/// (h, 1 - H2(h+/2)) in the broken phase, (1, 1) for h >= 1.
CoherencePair tdl_single_spin_max(double h);

/// Location and value of the minimum of the relative-entropy ASC over
/// h in [0, 1], found by golden-section search to 1e-8 in h.
struct AscMinimum {
  double h = 0.0;
  double value = 0.0;
};
AscMinimum tdl_asc_rel_ent_minimum();

/// Exact isotropic (gamma = 1) solution.
struct IsotropicSolution {
  double m0 = 0.0;      ///< ground-state magnetization
  double n_plus = 0.0;  ///< N + 2 M0
  double n_minus = 0.0; ///< N - 2 M0
  double x0 = 0.0;      ///< sqrt(N+^2 N-^2 + 16 M0^2 (N-1)^2) / (2N(N-1))
};

/// Ground-state magnetization at gamma = 1: N/2 for h >= 1, otherwise the
/// integer (half-integer for odd N) nearest to hN/2.  Exact ties follow the
/// solver's rule: prefer the parity class containing M = N/2.
IsotropicSolution isotropic_solution(long n, double h);

/// Closed-form indicators at gamma = 1 for any N.
MeasureSet isotropic_measures(long n, double h);

/// 1/N expansion coefficients of the collective moments at the critical
/// point; gamma-dependent, extracted numerically (see scaling module).
struct CriticalCoefficients {
  double a_z = 0.0;
  double a_xx = 0.0;
  double a_yy = 0.0;
  double a_zz = 0.0;
};

/// Symmetric-phase (h > 1) expansion coefficients; Xi = (h-1)(h-gamma).
struct SymmetricPhaseCoefficients {
  double xi = 0.0;
  double gamma_plus = 0.0;
  double gamma_minus = 0.0;
  double b_z = 0.0;
  double b_xx = 0.0;
  double b_yy = 0.0;  ///< identically 1 / b_xx
  double b_zz = 0.0;  ///< identically 2 b_z
  double b0 = 0.0;    ///< b_xx - b_yy
};
SymmetricPhaseCoefficients symmetric_coefficients(double gamma, double h);

/// Broken-phase (h < 1) expansion coefficients and the per-measure 1/N
/// constants; Lambda = 1 - h^2.
struct BrokenPhaseCoefficients {
  double lambda = 0.0;
  double h_plus = 0.0;
  double h_minus = 0.0;
  double c_z = 0.0;
  double c_xx = 0.0;
  double c_yy = 0.0;  ///< identically h / c_z
  double c_zz = 0.0;
  double c0 = 0.0;    ///< c_xx - c_yy
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  double kappa3 = 0.0;
  double kappa_plus = 0.0;
  double kappa_minus = 0.0;
  // Leading 1/N constants of the six indicators relative to their
  // thermodynamic-limit values.
  double a_l1 = 0.0;
  double a_r = 0.0;
  double b_l1 = 0.0;
  double b_r = 0.0;
  double d_l1 = 0.0;
  double d_r = 0.0;
};
BrokenPhaseCoefficients broken_coefficients(double gamma, double h);

/// Collective moments predicted by the 1/N expansions at finite N
/// (symmetric and broken phases; the critical point needs externally
/// supplied coefficients).
CollectiveMoments cut_moments(double gamma, double h, long n);
CollectiveMoments cut_moments_critical(const CriticalCoefficients& c, long n);

/// Finite-size indicator values predicted by evaluating the closed-form
/// measures on the expansion moments at finite N.  A parameter-free check
/// of the exact-diagonalization pipeline away from criticality.
MeasureSet cut_model_measures(double gamma, double h, long n);

/// Leading-order predicted values and the theory scaling exponents for the
/// six indicators, per phase.  Order: c_l1, c_r, asc_l1, asc_r, msc_l1,
/// msc_r.  At the critical point the caller must supply the coefficients.
struct PredictedScaling {
  double value[6] = {0, 0, 0, 0, 0, 0};
  double slope[6] = {0, 0, 0, 0, 0, 0};
};
PredictedScaling cut_predicted_values(double gamma, double h, long n, Phase phase,
                                      const CriticalCoefficients* crit = nullptr);

}  // namespace lmg
