#include <doctest.h>

#include <cmath>

#include "lmg/correlations.hpp"
#include "lmg/entropy.hpp"
#include "lmg/pipeline.hpp"
#include "lmg/runner.hpp"
#include "oracle_helpers.hpp"

using namespace lmg;

TEST_CASE("concurrence of reference states") {
  CHECK(concurrence_x(TwoSpinXState{0.5, 0.5, 0.0, 0.5}) == doctest::Approx(1.0));
  CHECK(eof_x(TwoSpinXState{0.5, 0.5, 0.0, 0.5}) == doctest::Approx(1.0));
  CHECK(concurrence_x(TwoSpinXState{1.0, 0.0, 0.0, 0.0}) == 0.0);
  CHECK(eof_x(TwoSpinXState{1.0, 0.0, 0.0, 0.0}) == 0.0);
}

TEST_CASE("closed-form concurrence matches the spin-flip construction") {
  for (const TwoSpinXState& x : random_x_states(300, 0xABCD)) {
    const double closed = concurrence_x(x);
    const double ref = test::wootters_concurrence(x_matrix(x).cast<std::complex<double>>());
    CHECK(std::fabs(closed - ref) <= 1e-10);
    CHECK(eof_x(x) <= 1.0 + 1e-12);
  }
}

TEST_CASE("discord of reference states") {
  CHECK(discord_x(TwoSpinXState{1.0, 0.0, 0.0, 0.0}) == doctest::Approx(0.0).scale(1.0));
  CHECK(discord_x(TwoSpinXState{0.5, 0.5, 0.0, 0.5}) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("pure X states: discord equals the marginal entropy and the eof") {
  for (const double a2 : {0.15, 0.4, 0.75}) {
    TwoSpinXState x;
    x.v1 = a2;
    x.v2 = 1.0 - a2;
    x.y = 0.0;
    x.u = std::sqrt(x.v1 * x.v2);
    const double expected = binary_entropy(a2);
    CHECK(discord_x(x) == doctest::Approx(expected).epsilon(1e-6));
    CHECK(eof_x(x) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("discord is nonnegative on random states") {
  for (const TwoSpinXState& x : random_x_states(15, 2025)) {
    const double d = discord_x(x, 61, 120);
    CHECK(d >= 0.0);
    CHECK(d <= 1.0 + 1e-9);
  }
}

TEST_CASE("entanglement dies quickly with system size") {
  for (const double h : {0.5, 1.0, 1.5}) {
    const PipelineResult pr = run_pipeline(ModelParams{64, 0.5, h});
    CHECK(eof_x(pr.x) < 0.01);
  }
}

TEST_CASE("discord decays with system size in the symmetric phase") {
  double prev = 1e9;
  for (const long n : {16L, 64L, 256L}) {
    const PipelineResult pr = run_pipeline(ModelParams{n, 0.5, 1.5});
    const double d = discord_x(pr.x);
    CHECK(d < prev);
    prev = d;
  }
}
