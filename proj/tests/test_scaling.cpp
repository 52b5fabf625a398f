#include <doctest.h>

#include <cmath>

#include "lmg/scaling.hpp"

using namespace lmg;

namespace {

MeasureSeries power_law_series(double amplitude, double exponent) {
  MeasureSeries s;
  s.measure = "toy";
  s.phase = Phase::Broken;
  s.transform = Transform::Raw;
  for (int k = 6; k <= 12; ++k) {
    const long n = 1L << k;
    s.n_values.push_back(n);
    s.values.push_back(amplitude * std::pow(static_cast<double>(n), exponent));
  }
  return s;
}

}  // namespace

TEST_CASE("exact power law fits with zero residual") {
  const ScalingFit fit = fit_slope(power_law_series(3.7, -1.0));
  CHECK(fit.slope == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(fit.local_slope == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(fit.residual_rms <= 1e-12);

  const ScalingFit fit23 = fit_slope(power_law_series(0.4, -2.0 / 3.0));
  CHECK(fit23.slope == doctest::Approx(-2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("window selection and guards") {
  MeasureSeries s = power_law_series(1.0, -1.0);
  const ScalingFit fit = fit_slope(s, 4);
  CHECK(fit.window_begin == s.n_values.size() - 4);
  CHECK(fit.local_slopes.size() == 3);
  CHECK_THROWS_AS(fit_slope(s, 2), std::invalid_argument);

  s.values[6] = -1.0;  // nonpositive transformed value
  CHECK_THROWS_AS(fit_slope(s, 4), std::runtime_error);
}

TEST_CASE("transforms by phase") {
  // Order: c_l1, c_r, asc_l1, asc_r, msc_l1, msc_r.
  CHECK(transform_for(Phase::Critical, 0) == Transform::Raw);
  CHECK(transform_for(Phase::Critical, 2) == Transform::TwoMinus);
  CHECK(transform_for(Phase::Critical, 3) == Transform::TwoMinus);
  CHECK(transform_for(Phase::Symmetric, 2) == Transform::MinusTwo);  // l1-ASC exceeds 2 for h > 1
  CHECK(transform_for(Phase::Symmetric, 3) == Transform::TwoMinus);
  CHECK(transform_for(Phase::Symmetric, 5) == Transform::Raw);
  CHECK(transform_for(Phase::Broken, 0) == Transform::TdlMinus);
  CHECK(transform_for(Phase::Broken, 2) == Transform::MinusTdl);
  CHECK(transform_for(Phase::Broken, 5) == Transform::TdlMinus);
}

TEST_CASE("series transform arithmetic") {
  MeasureSeries s;
  s.measure = "x";
  s.n_values = {2, 4};
  s.values = {1.9, 2.2};
  s.transform = Transform::TwoMinus;
  CHECK(s.transformed(0) == doctest::Approx(0.1));
  CHECK_THROWS_AS(s.transformed(1), std::runtime_error);
  s.transform = Transform::MinusTwo;
  CHECK(s.transformed(1) == doctest::Approx(0.2));
  s.transform = Transform::TdlMinus;
  s.tdl = 2.5;
  CHECK(s.transformed(0) == doctest::Approx(0.6));
}

TEST_CASE("richardson step on a pure 1/N tail is exact") {
  // t(N) = L + c/N sampled on a doubling grid: 2 t(2N) - t(N) = L.
  const double limit = -2.75, c = 13.0;
  const double t1 = limit + c / 1024.0, t2 = limit + c / 2048.0;
  CHECK(2.0 * t2 - t1 == doctest::Approx(limit).epsilon(1e-12));
}

TEST_CASE("critical coefficients keep their structure at moderate sizes") {
  const CriticalCoefficients c = extract_critical_coefficients(0.5, 1L << 12);
  CHECK(c.a_z < 0.0);
  CHECK(c.a_zz < 0.0);
  CHECK(c.a_xx > 0.0);
  CHECK(c.a_yy > 0.0);
  CHECK(c.a_zz / c.a_z == doctest::Approx(2.0).epsilon(0.02));
  // Casimir sum rule: a_xx + a_zz ~ -a_yy N^{-2/3}.
  const double n23 = std::pow(4096.0, 2.0 / 3.0);
  CHECK(c.a_xx + c.a_zz == doctest::Approx(-c.a_yy / n23).epsilon(0.05));
}

TEST_CASE("reference coefficient table lookup") {
  CHECK(critical_reference(0.5).has_value());
  CHECK(critical_reference(0.5)->a_xx == doctest::Approx(0.7307));
  CHECK(critical_reference(0.75)->a_yy == doctest::Approx(1.7621));
  CHECK_FALSE(critical_reference(0.3).has_value());
}

TEST_CASE("broken-phase constants converge with the expected signs") {
  const std::vector<long> ns = {1L << 9, 1L << 10, 1L << 11, 1L << 12};
  const auto checks = broken_phase_constants(0.5, 0.9, ns);
  REQUIRE(checks.size() == 6);
  for (const auto& chk : checks) {
    CHECK(chk.scaled_deviation.size() == ns.size());
    CHECK(chk.converging);
  }
  // Coherence and steered maxima approach from below, the averages from above.
  CHECK(checks[0].extrapolated < 0.0);  // c_l1
  CHECK(checks[1].extrapolated < 0.0);  // c_r
  CHECK(checks[2].extrapolated > 0.0);  // asc_l1
  CHECK(checks[3].extrapolated > 0.0);  // asc_r
  CHECK(checks[4].extrapolated < 0.0);  // msc_l1
  CHECK(checks[5].extrapolated < 0.0);  // msc_r
}

TEST_CASE("single-spin scaling away from criticality") {
  const std::vector<long> ns = {1L << 8, 1L << 9, 1L << 10, 1L << 11, 1L << 12};
  const ScalingFit above = single_spin_scaling(0.5, 1.2, ns, false);
  CHECK(above.local_slope == doctest::Approx(-1.0).epsilon(0.05));
  const ScalingFit below = single_spin_scaling(0.5, 0.8, ns, false);
  CHECK(below.local_slope == doctest::Approx(-1.0).epsilon(0.05));
}
