#include "lmg/coherence.hpp"

#include <cmath>
#include <stdexcept>

#include "lmg/entropy.hpp"

namespace lmg {

namespace {

double shannon_bits(const Eigen::VectorXd& p) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) s -= plog2p(std::max(0.0, p(i)));
  return s;
}

}  // namespace

CoherencePair coherence_generic(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& basis) {
  const Eigen::Index d = rho.rows();
  if (rho.cols() != d || basis.rows() != d || basis.cols() != d)
    throw std::invalid_argument("coherence_generic: dimension mismatch");
  if (std::fabs(rho.trace().real() - 1.0) > 1e-10 || std::fabs(rho.trace().imag()) > 1e-10)
    throw std::invalid_argument("coherence_generic: state is not normalized");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw std::invalid_argument("coherence_generic: state is not positive semidefinite");

  const Eigen::MatrixXcd rotated = basis.adjoint() * rho * basis;

  CoherencePair c;
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      if (i != j) c.l1 += std::abs(rotated(i, j));

  const Eigen::VectorXd diag = rotated.diagonal().real();
  c.rel_ent = shannon_bits(diag) - shannon_bits(es.eigenvalues());
  c.l1 = clamp_roundoff(c.l1);
  c.rel_ent = clamp_roundoff(c.rel_ent);
  return c;
}

CoherencePair coherence_two_spin(const TwoSpinXState& x) {
  const double split = std::sqrt(4.0 * x.u * x.u + (x.v1 - x.v2) * (x.v1 - x.v2));
  const double eps1 = 0.5 * (x.v1 + x.v2 + split);
  const double eps2 = std::max(0.0, 0.5 * (x.v1 + x.v2 - split));

  CoherencePair c;
  c.l1 = 2.0 * (x.y + x.u);
  c.rel_ent = 2.0 * x.y + plog2p(eps1) + plog2p(eps2) - plog2p(x.v1) - plog2p(x.v2);
  c.rel_ent = clamp_roundoff(c.rel_ent);
  return c;
}

CoherencePair max_single_spin_coherence(const SingleSpinState& s) {
  CoherencePair c;
  c.l1 = std::fabs(s.magnetization);
  c.rel_ent = 1.0 - binary_entropy(s.p_up);
  return c;
}

}  // namespace lmg
