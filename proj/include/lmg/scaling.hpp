#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lmg/baselines.hpp"

namespace lmg {

/// How a raw indicator value is mapped to the positive quantity whose
/// log-log slope is fitted, per phase.
enum class Transform {
  Raw,       ///< value
  TwoMinus,  ///< 2 - value
  MinusTwo,  ///< value - 2
  TdlMinus,  ///< tdl - value
  MinusTdl,  ///< value - tdl
};

const char* to_string(Transform t);

/// Per-N values of one named indicator along an N sweep at fixed (gamma, h).
struct MeasureSeries {
  std::string measure;  ///< e.g. "c_l1", "asc_r", "max_l1"
  Phase phase = Phase::Critical;
  double gamma = 0.0;
  double h = 0.0;
  Transform transform = Transform::Raw;
  double tdl = 0.0;  ///< thermodynamic-limit value used by the Tdl transforms
  std::vector<long> n_values;
  std::vector<double> values;  ///< raw indicator values, one per N

  /// Transformed (positive) value at index k; throws if nonpositive.
  double transformed(std::size_t k) const;
};

/// Least-squares line through (log2 N, log2 transformed value).
struct ScalingFit {
  double slope = 0.0;
  double intercept = 0.0;
  double local_slope = 0.0;            ///< slope of the final interval
  std::vector<double> local_slopes;    ///< per-interval slopes over the window
  double residual_rms = 0.0;
  std::size_t window_begin = 0;        ///< first index of the fit window
};

/// Fit over the last `window` points (default 4; at least 3 required).
ScalingFit fit_slope(const MeasureSeries& series, std::size_t window = 4);

/// Transform appropriate for each indicator in each phase.  Indicator order:
/// c_l1, c_r, asc_l1, asc_r, msc_l1, msc_r.
Transform transform_for(Phase phase, int measure_index);

/// Names of the six two-spin indicators, in canonical order.
const std::vector<std::string>& measure_names();

/// Extract the critical-point moment coefficients from the solved state at
/// h = 1:
///   a_z  = (2<S_z>/N - 1 - 1/N) N^{2/3},     a_xx = (4<S_x^2>/N^2) N^{2/3},
///   a_yy = (4<S_y^2>/N^2) N^{4/3},           a_zz = (4<S_z^2>/N^2 - 1 - 2/N) N^{2/3}.
CriticalCoefficients extract_critical_coefficients(double gamma, long n = 1L << 16);

/// Reference critical coefficients at N = 2^16 for gamma in
/// {0, 0.25, 0.5, 0.75}; regression baseline for the coefficient table.
std::optional<CriticalCoefficients> critical_reference(double gamma);

/// Broken-phase 1/N constants: the sequence N (value - tdl) per N for one
/// indicator, its convergence estimate, and the closed-form constant.
struct BrokenConstantCheck {
  std::string measure;
  std::vector<double> scaled_deviation;  ///< N_k (value_k - tdl)
  double extrapolated = 0.0;             ///< 2 t_last - t_prev (1/N model)
  double closed_form = 0.0;              ///< per the expansion constants
  bool converging = false;               ///< successive |differences| shrink
  double relative_error = 0.0;           ///< |extrapolated / closed_form - 1|
};

/// Evaluate the six checks at (gamma, h < 1) over the given N values.
/// Throws if any scaled-deviation sequence diverges.
std::vector<BrokenConstantCheck> broken_phase_constants(double gamma, double h,
                                                        const std::vector<long>& n_values);

/// Scaling fit of the basis-optimized single-spin coherence; transform is
/// (tdl - value) for h >= 1 and (value - tdl) for h < 1.
ScalingFit single_spin_scaling(double gamma, double h, const std::vector<long>& n_values,
                               bool rel_ent, std::size_t window = 4);

}  // namespace lmg
