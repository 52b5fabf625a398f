#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "lmg/hamiltonian.hpp"
#include "oracle_helpers.hpp"

using namespace lmg;

TEST_CASE("dicke sector layout") {
  const DickeSector m1 = dicke_sector(8, Parity::M1);
  CHECK(m1.dim() == 5);  // M = -4, -2, 0, 2, 4
  CHECK(m1.m_values.front() == -4.0);
  CHECK(m1.m_values.back() == 4.0);
  CHECK(m1.contains_polarized());

  const DickeSector m2 = dicke_sector(8, Parity::M2);
  CHECK(m2.dim() == 4);
  CHECK_FALSE(m2.contains_polarized());

  // Odd N: half-integer magnetizations, polarized state in the M2 class.
  const DickeSector odd1 = dicke_sector(3, Parity::M1);
  const DickeSector odd2 = dicke_sector(3, Parity::M2);
  CHECK(odd1.m_values == std::vector<double>{-1.5, 0.5});
  CHECK(odd2.m_values == std::vector<double>{-0.5, 1.5});
  CHECK(odd2.contains_polarized());
}

TEST_CASE("two-spin isotropic block matches the hand-computed matrix") {
  // N=2, gamma=1, h=2: triplet block M = {-1, +1} is diagonal with
  // entries +4 and -4 (pairwise form restricted to |1,+-1>).
  const TridiagonalHamiltonian ham = build_sector(ModelParams{2, 1.0, 2.0}, Parity::M1);
  REQUIRE(ham.diag.size() == 2);
  CHECK(ham.diag[0] == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(ham.diag[1] == doctest::Approx(-4.0).epsilon(1e-14));
  REQUIRE(ham.offdiag.size() == 1);
  CHECK(ham.offdiag[0] == 0.0);
}

TEST_CASE("isotropic blocks are diagonal with the closed-form entries") {
  for (const long n : {4L, 7L, 12L})
    for (const double h : {0.0, 0.3, 1.2})
      for (const Parity p : {Parity::M1, Parity::M2}) {
        const TridiagonalHamiltonian ham = build_sector(ModelParams{n, 1.0, h}, p);
        for (const double e : ham.offdiag) CHECK(e == 0.0);
        for (std::size_t k = 0; k < ham.diag.size(); ++k) {
          const double m = ham.sector.m_values[k];
          const double nn = static_cast<double>(n);
          // At gamma = 1 the diagonal reduces to 2M^2/N - 2hM - N/2.
          CHECK(ham.diag[k] ==
                doctest::Approx(2.0 * m * m / nn - 2.0 * h * m - 0.5 * nn).epsilon(1e-13));
        }
      }
}

TEST_CASE("sector block equals the Dicke projection of the dense Hamiltonian") {
  const ModelParams params{8, 0.5, 1.0};
  const TridiagonalHamiltonian block = build_sector(params, Parity::M1);
  REQUIRE(block.sector.dim() == 5);
  const FullSpaceHamiltonian full = build_full_space(params);

  std::vector<Eigen::VectorXd> basis;
  for (const double m : block.sector.m_values) basis.push_back(test::dicke_state(8, m));

  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const double element = basis[i].dot(full.matrix * basis[j]);
      double expected = 0.0;
      if (i == j) expected = block.diag[i];
      else if (j == i + 1) expected = block.offdiag[i];
      else if (i == j + 1) expected = block.offdiag[j];
      CHECK(element == doctest::Approx(expected).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("dense N=2 ground state is the polarized product state") {
  const FullSpaceHamiltonian full = build_full_space(ModelParams{2, 1.0, 2.0});
  const test::DenseGround g = test::dense_ground(full.matrix);
  CHECK(g.energy == doctest::Approx(-4.0).epsilon(1e-14));
  CHECK(std::fabs(g.vector(3)) == doctest::Approx(1.0).epsilon(1e-12));  // |uu> = bits 11
}

TEST_CASE("spectrum is invariant under reversing the field") {
  for (const long n : {3L, 4L}) {
    const ModelParams params{n, 0.3, 0.7};
    const FullSpaceHamiltonian full = build_full_space(params);
    // Flip the field term: H(-h) = H(h) + 2h sum_i sigma_z^i.
    Eigen::MatrixXd flipped = full.matrix;
    const long dim = 1L << n;
    for (long s = 0; s < dim; ++s) {
      double sz = 0.0;
      for (long i = 0; i < n; ++i) sz += ((s >> i) & 1) ? 1.0 : -1.0;
      flipped(s, s) += 2.0 * params.h * sz;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> a(full.matrix, Eigen::EigenvaluesOnly);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> b(flipped, Eigen::EigenvaluesOnly);
    for (long k = 0; k < dim; ++k)
      CHECK(a.eigenvalues()(k) == doctest::Approx(b.eigenvalues()(k)).epsilon(1e-11).scale(1.0));
  }
}

TEST_CASE("sector blocks cover the dense ground energy on a small grid") {
  for (const long n : {2L, 3L, 5L, 8L})
    for (const double gamma : {0.0, 0.5, 1.0})
      for (const double h : {0.0, 0.5, 1.0, 1.5}) {
        const ModelParams params{n, gamma, h};
        const double dense = test::dense_ground(build_full_space(params).matrix).energy;
        double sector_min = std::numeric_limits<double>::infinity();
        for (const Parity p : {Parity::M1, Parity::M2}) {
          const TridiagonalHamiltonian b = build_sector(params, p);
          Eigen::MatrixXd t = Eigen::MatrixXd::Zero(b.sector.dim(), b.sector.dim());
          for (std::size_t k = 0; k < b.diag.size(); ++k) t(k, k) = b.diag[k];
          for (std::size_t k = 0; k < b.offdiag.size(); ++k) t(k, k + 1) = t(k + 1, k) = b.offdiag[k];
          sector_min = std::min(
              sector_min,
              Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(t, Eigen::EigenvaluesOnly).eigenvalues()(0));
        }
        CHECK(sector_min == doctest::Approx(dense).epsilon(1e-11).scale(1.0));
      }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(build_sector(ModelParams{1, 0.5, 1.0}, Parity::M1), std::invalid_argument);
  CHECK_THROWS_AS(build_sector(ModelParams{4, -0.1, 1.0}, Parity::M1), std::invalid_argument);
  CHECK_THROWS_AS(build_sector(ModelParams{4, 1.5, 1.0}, Parity::M1), std::invalid_argument);
  CHECK_THROWS_AS(build_sector(ModelParams{4, 0.5, -1.0}, Parity::M1), std::invalid_argument);
  CHECK_THROWS_AS(build_full_space(ModelParams{13, 0.5, 1.0}), std::invalid_argument);
}
