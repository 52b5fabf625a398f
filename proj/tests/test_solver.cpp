#include <doctest.h>

#include <cmath>
#include <cstring>

#include "lmg/solver.hpp"
#include "oracle_helpers.hpp"

using namespace lmg;

namespace {

double solve_residual_bound(const GroundStateSolution& s) {
  return 1e-10 * std::max(1.0, std::fabs(s.energy));
}

}  // namespace

TEST_CASE("two-spin isotropic block solves by inspection") {
  const GroundStateSolution s = ground_state(build_sector(ModelParams{2, 1.0, 2.0}, Parity::M1));
  CHECK(s.energy == doctest::Approx(-4.0).epsilon(1e-14));
  REQUIRE(s.vector.size() == 2);
  CHECK(s.vector[0] == 0.0);
  CHECK(s.vector[1] == 1.0);
}

TEST_CASE("diagonal blocks return the minimal basis vector") {
  const TridiagonalHamiltonian ham = build_sector(ModelParams{100, 1.0, 0.37}, Parity::M1);
  const GroundStateSolution s = ground_state(ham);
  std::size_t best = 0;
  for (std::size_t k = 1; k < ham.diag.size(); ++k)
    if (ham.diag[k] < ham.diag[best]) best = k;
  CHECK(s.energy == ham.diag[best]);
  for (std::size_t k = 0; k < s.vector.size(); ++k) CHECK(s.vector[k] == (k == best ? 1.0 : 0.0));
}

TEST_CASE("ground state matches the dense oracle") {
  const ModelParams params{10, 0.5, 0.5};
  const GroundStateSolution s = global_ground_state(params);
  const double dense = test::dense_ground(build_full_space(params).matrix).energy;
  CHECK(s.energy == doctest::Approx(dense).epsilon(1e-11).scale(1.0));
  CHECK(s.residual <= solve_residual_bound(s));
}

TEST_CASE("oracle equivalence over the parameter grid") {
  for (long n = 2; n <= 8; ++n)
    for (const double gamma : {0.0, 0.25, 0.5, 0.75, 1.0})
      for (double h = 0.0; h <= 2.0 + 1e-12; h += 0.25) {
        const ModelParams params{n, gamma, h};
        const GroundStateSolution s = global_ground_state(params);
        const double dense = test::dense_ground(build_full_space(params).matrix).energy;
        INFO("N=", n, " gamma=", gamma, " h=", h);
        CHECK(std::fabs(s.energy - dense) <= 1e-10);
      }
}

TEST_CASE("unit norm, sign convention, and residual bound") {
  for (const long n : {64L, 257L, 1024L}) {
    const GroundStateSolution s = global_ground_state(ModelParams{n, 0.25, 0.8});
    double norm2 = 0.0;
    for (const double x : s.vector) norm2 += x * x;
    CHECK(std::fabs(std::sqrt(norm2) - 1.0) <= 1e-12);
    CHECK(s.residual <= solve_residual_bound(s));
    for (const double x : s.vector) {
      if (std::fabs(x) > 1e-12) {
        CHECK(x > 0.0);
        break;
      }
    }
  }
}

TEST_CASE("bisection bracket sits at the bottom of the spectrum") {
  const TridiagonalHamiltonian ham = build_sector(ModelParams{512, 0.5, 1.0}, Parity::M1);
  const GroundStateSolution s = ground_state(ham);
  CHECK(sturm_count(ham.diag, ham.offdiag, s.energy + 1e-9) >= 1);
  CHECK(sturm_count(ham.diag, ham.offdiag, s.energy - 1e-6) == 0);
}

TEST_CASE("solves are bit-reproducible") {
  const ModelParams params{2048, 0.5, 0.9};
  const GroundStateSolution a = global_ground_state(params);
  const GroundStateSolution b = global_ground_state(params);
  CHECK(std::memcmp(&a.energy, &b.energy, sizeof(double)) == 0);
  REQUIRE(a.vector.size() == b.vector.size());
  CHECK(std::memcmp(a.vector.data(), b.vector.data(), a.vector.size() * sizeof(double)) == 0);
}

TEST_CASE("global solve picks the polarized class at large field") {
  for (const long n : {6L, 9L}) {
    const GroundStateSolution s = global_ground_state(ModelParams{n, 0.5, 2.0});
    CHECK(s.sector.contains_polarized());
  }
}

TEST_CASE("isotropic global ground state sits at the rounded magnetization") {
  // N=4, gamma=1, h=0.4: the minimizing magnetization is the integer
  // nearest to hN/2 = 0.8, i.e. M0 = 1, living in the M2 class.
  const GroundStateSolution s = global_ground_state(ModelParams{4, 1.0, 0.4});
  CHECK(s.sector.parity == Parity::M2);
  REQUIRE(s.vector.size() == 2);  // M in {-1, +1}
  CHECK(s.vector[1] == 1.0);
  CHECK(s.energy == doctest::Approx(2.0 / 4.0 - 2.0 * 0.4 - 2.0).epsilon(1e-14));
}

TEST_CASE("large blocks solve fast and satisfy the residual bound") {
  const TridiagonalHamiltonian ham = build_sector(ModelParams{1L << 14, 0.5, 1.0}, Parity::M1);
  const GroundStateSolution s = ground_state(ham);
  CHECK(s.residual <= solve_residual_bound(s));
  CHECK(s.vector.size() == ham.sector.dim());
}
