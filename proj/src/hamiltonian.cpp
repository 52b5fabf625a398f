#include "lmg/hamiltonian.hpp"

#include <cmath>

namespace lmg {

namespace {

// Raising-operator coefficient sqrt(S(S+1) - M(M+1)), clamped at zero
// against roundoff for |M| near S.
double ladder_coeff(double s, double m) {
  const double arg = s * (s + 1.0) - m * (m + 1.0);
  return std::sqrt(arg > 0.0 ? arg : 0.0);
}

}  // namespace

DickeSector dicke_sector(long n, Parity parity) {
  if (n < 2) throw std::invalid_argument("dicke_sector: N must be >= 2");
  DickeSector sec;
  sec.n = n;
  sec.spin = 0.5 * static_cast<double>(n);
  sec.parity = parity;
  double m = -sec.spin + (parity == Parity::M1 ? 0.0 : 1.0);
  for (; m <= sec.spin + 0.5; m += 2.0) {
    if (m > sec.spin) break;
    sec.m_values.push_back(m);
  }
  return sec;
}

TridiagonalHamiltonian build_sector(const ModelParams& params, Parity parity) {
  params.validate();
  if (parity != Parity::M1 && parity != Parity::M2)
    throw std::invalid_argument("build_sector: invalid parity tag");

  TridiagonalHamiltonian ham;
  ham.params = params;
  ham.sector = dicke_sector(params.n, parity);

  const double n = static_cast<double>(params.n);
  const double s = ham.sector.spin;
  const double casimir = s * (s + 1.0);
  const double shift = 0.5 * params.lambda * (1.0 + params.gamma);
  const std::size_t dim = ham.sector.dim();

  ham.diag.resize(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const double m = ham.sector.m_values[k];
    ham.diag[k] = -((1.0 + params.gamma) / n) * (casimir - m * m) - 2.0 * params.h * m + shift;
  }

  // (1 - gamma)/4 (S+^2 + S-^2) couples M to M + 2.
  if (dim > 1) ham.offdiag.resize(dim - 1);
  for (std::size_t k = 0; k + 1 < dim; ++k) {
    const double m = ham.sector.m_values[k];
    ham.offdiag[k] = -((1.0 - params.gamma) / (2.0 * n)) * ladder_coeff(s, m) * ladder_coeff(s, m + 1.0);
  }
  return ham;
}

FullSpaceHamiltonian build_full_space(const ModelParams& params) {
  params.validate();
  if (params.n > 12)
    throw std::invalid_argument("build_full_space: N > 12 exceeds the dense-oracle memory guard");

  const long n = params.n;
  const long dim = 1L << n;
  FullSpaceHamiltonian full;
  full.params = params;
  full.matrix = Eigen::MatrixXd::Zero(dim, dim);

  // Bit = 1 means spin up.  sigma_x flips a bit with coefficient 1;
  // sigma_y sigma_y on a pair contributes -1 if the two bits are equal
  // and +1 otherwise; sigma_z gives +-1 on the diagonal.
  const double c = params.lambda / static_cast<double>(n);
  for (long state = 0; state < dim; ++state) {
    double diag = 0.0;
    for (long i = 0; i < n; ++i) {
      const bool up_i = (state >> i) & 1;
      diag += -params.h * (up_i ? 1.0 : -1.0);
      for (long j = i + 1; j < n; ++j) {
        const bool up_j = (state >> j) & 1;
        const long flipped = state ^ ((1L << i) | (1L << j));
        const double yy = (up_i == up_j) ? -1.0 : 1.0;
        full.matrix(flipped, state) += -c * (1.0 + params.gamma * yy);
      }
    }
    full.matrix(state, state) += diag;
  }
  return full;
}

}  // namespace lmg
