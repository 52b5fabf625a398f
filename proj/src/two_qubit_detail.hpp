#pragma once

// Small two-qubit kernels shared by the steered-coherence and correlation
// implementations.  Internal; not part of the public headers.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>

#include "lmg/coherence.hpp"
#include "lmg/entropy.hpp"

namespace lmg::detail {

// Collapsed state of B after measuring the 2x2 operator M on A:
// returns p = tr(Tr_A[(M x 1) rho]) and writes the unnormalized collapsed
// matrix.  Basis index of the 4x4 input is 2a + b (a = A, b = B; 0 = up).
inline double collapse(const Eigen::Matrix4cd& rho, const Eigen::Matrix2cd& m, Eigen::Matrix2cd* out) {
  Eigen::Matrix2cd r = Eigen::Matrix2cd::Zero();
  for (int b = 0; b < 2; ++b)
    for (int d = 0; d < 2; ++d) {
      std::complex<double> s = 0.0;
      for (int a = 0; a < 2; ++a)
        for (int ap = 0; ap < 2; ++ap) s += m(a, ap) * rho(2 * ap + b, 2 * a + d);
      r(b, d) = s;
    }
  *out = r;
  return r.trace().real();
}

// Projector (1 + m.sigma)/2 for the Bloch direction (theta, phi).
inline Eigen::Matrix2cd direction_projector(double theta, double phi) {
  Eigen::Matrix2cd m;
  const std::complex<double> phase = std::exp(std::complex<double>(0.0, phi));
  const double ct = std::cos(0.5 * theta);
  const double st = std::sin(0.5 * theta);
  m(0, 0) = ct * ct;
  m(1, 1) = st * st;
  m(0, 1) = ct * st / phase;
  m(1, 0) = ct * st * phase;
  return m;
}

// Entropy in bits of a (normalized) 2x2 state.
inline double qubit_entropy(const Eigen::Matrix2cd& rho) {
  const double tr = rho.trace().real();
  const double split = std::sqrt(std::norm(rho(0, 0) - rho(1, 1)) + 4.0 * std::norm(rho(0, 1)));
  return -plog2p(std::max(0.0, 0.5 * (tr + split))) - plog2p(std::max(0.0, 0.5 * (tr - split)));
}

// Coherence of a (normalized) 2x2 state in the basis given by the columns of u.
inline CoherencePair qubit_coherence(const Eigen::Matrix2cd& rho, const Eigen::Matrix2cd& u) {
  const Eigen::Matrix2cd r = u.adjoint() * rho * u;
  CoherencePair c;
  c.l1 = std::abs(r(0, 1)) + std::abs(r(1, 0));
  const double s_diag = -plog2p(std::max(0.0, r(0, 0).real())) - plog2p(std::max(0.0, r(1, 1).real()));
  c.rel_ent = clamp_roundoff(s_diag - qubit_entropy(r));
  return c;
}

inline Eigen::Matrix2cd pauli(int i) {
  Eigen::Matrix2cd s;
  const std::complex<double> I(0.0, 1.0);
  switch (i) {
    case 0: s << 0, 1, 1, 0; break;
    case 1: s << 0, -I, I, 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

inline Eigen::Matrix2cd pauli_eigenbasis(int i) {
  Eigen::Matrix2cd u;
  const std::complex<double> I(0.0, 1.0);
  const double r = 1.0 / std::sqrt(2.0);
  switch (i) {
    case 0: u << r, r, r, -r; break;
    case 1: u << r, r, I * r, -I * r; break;
    default: u = Eigen::Matrix2cd::Identity(); break;
  }
  return u;
}

// Golden-section maximization of a unimodal objective on [a, b].
inline double golden_max(const std::function<double(double)>& f, double a, double b, double* xbest) {
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 80 && (b - a) > 1e-12; ++it) {
    if (f1 < f2) {
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
  *xbest = 0.5 * (a + b);
  return f(*xbest);
}

}  // namespace lmg::detail
