#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lmg/scaling.hpp"

namespace lmg {

/// 17-significant-digit decimal rendering used for all CSV numbers, so that
/// identical configurations produce byte-identical files.
std::string fmt_double(double v);

/// Parse an N token: a plain integer or a power like "2^12".
long parse_n_token(const std::string& token);

/// h sweep at fixed (gamma, N): per-h indicator values, thermodynamic-limit
/// counterparts (isotropic closed forms when gamma = 1), and the
/// entanglement/discord comparators.
struct SweepConfig {
  double gamma = 0.5;
  long n = 1L << 12;
  std::vector<double> h_values;
  int jobs = 0;  ///< worker threads; 0 = all hardware threads
  bool with_correlations = true;
};

/// CSV with header h,n,gamma,c_l1,...,tdl_*,eof,discord; LF line endings.
std::string sweep_csv(const SweepConfig& config);

struct ScalingConfig {
  double gamma = 0.5;
  double h = 1.0;
  std::vector<long> n_values;  ///< default 2^8 .. 2^16
  std::size_t window = 4;
  double slope_tol = 0.07;
  int jobs = 0;
};

struct ScalingOutput {
  std::string csv;
  nlohmann::json report;
  bool pass = false;
};

/// Per-N transformed values for the eight indicators (six two-spin plus the
/// single-spin maxima) with slope fits against the phase-appropriate theory
/// exponents.
ScalingOutput scaling_run(const ScalingConfig& config);

struct Table1Config {
  std::vector<double> gammas = {0.0, 0.25, 0.5, 0.75};
  long n = 1L << 16;
  double tolerance = 0.005;
  int jobs = 0;
};

struct Table1Output {
  std::string text;
  nlohmann::json report;
  bool pass = false;
};

/// Critical-point coefficient table with per-cell deviation from the
/// reference values.
Table1Output table1_run(const Table1Config& config);

struct ValidateConfig {
  double tolerance = 0.0;  ///< 0 = per-suite defaults
  int msc_theta_points = 361;
  int msc_phi_points = 720;
  std::size_t random_states = 200;
  bool inject_fault = false;  ///< negative control: perturb one matrix element
  int jobs = 0;
};

struct ValidateOutput {
  nlohmann::json report;
  bool pass = false;
};

/// Cross-validation suites: sector blocks vs the dense oracle, reduced
/// states vs partial traces, closed forms vs definitional sums and grid
/// searches, the isotropic closed form, and thermodynamic-limit agreement.
ValidateOutput validate_run(const ValidateConfig& config);

/// Deterministic stream of valid X states (v1 + v2 + 2y = 1, u^2 <= v1 v2).
std::vector<TwoSpinXState> random_x_states(std::size_t count, std::uint64_t seed);

/// Run fn(i) for i in [0, count) on a small worker pool.
void parallel_for_indexed(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace lmg
