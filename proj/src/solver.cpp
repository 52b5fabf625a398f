#include "lmg/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace lmg {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kBisectionCap = 200;
constexpr int kInverseIterationCap = 50;
constexpr double kBisectionRelTol = 1e-13;

double inf_norm(const std::vector<double>& d, const std::vector<double>& e) {
  double norm = 0.0;
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    double row = std::fabs(d[i]);
    if (i > 0) row += std::fabs(e[i - 1]);
    if (i + 1 < n) row += std::fabs(e[i]);
    norm = std::max(norm, row);
  }
  return norm;
}

// Gershgorin bounds [lo, hi] containing the whole spectrum.
std::pair<double, double> spectrum_bounds(const std::vector<double>& d, const std::vector<double>& e) {
  double lo = d[0], hi = d[0];
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::fabs(e[i - 1]);
    if (i + 1 < n) r += std::fabs(e[i]);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  return {lo, hi};
}

void normalize(std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  s = std::sqrt(s);
  for (double& x : v) x /= s;
}

void fix_sign(std::vector<double>& v) {
  for (double x : v) {
    if (std::fabs(x) > 1e-12) {
      if (x < 0.0)
        for (double& y : v) y = -y;
      return;
    }
  }
}

double rayleigh_and_residual(const std::vector<double>& d, const std::vector<double>& e,
                             const std::vector<double>& v, double* residual) {
  const std::size_t n = d.size();
  std::vector<double> hv(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = d[i] * v[i];
    if (i > 0) s += e[i - 1] * v[i - 1];
    if (i + 1 < n) s += e[i] * v[i + 1];
    hv[i] = s;
  }
  double theta = 0.0;
  for (std::size_t i = 0; i < n; ++i) theta += v[i] * hv[i];
  double r2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ri = hv[i] - theta * v[i];
    r2 += ri * ri;
  }
  *residual = std::sqrt(r2);
  return theta;
}

// LU factorization of (T - sigma I) with partial pivoting.  Fill-in adds a
// second superdiagonal.  Layout follows the classic tridiagonal inverse
// iteration kernels (dstein-style).
struct TridiagLU {
  std::vector<double> u0, u1, u2;  // diagonal and two superdiagonals of U
  std::vector<double> mult;        // elimination multipliers
  std::vector<char> swapped;       // pivot row exchanged with the next one

  void factor(const std::vector<double>& d, const std::vector<double>& e, double sigma) {
    const std::size_t n = d.size();
    u0.assign(n, 0.0);
    u1.assign(n, 0.0);
    u2.assign(n, 0.0);
    mult.assign(n, 0.0);
    swapped.assign(n, 0);

    // Running row (a, b) is the current pivot candidate: a on the
    // diagonal, b on the superdiagonal.
    double a = d[0] - sigma;
    double b = n > 1 ? e[0] : 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double sub = e[i];              // subdiagonal entry of row i+1
      const double dnext = d[i + 1] - sigma;
      if (std::fabs(sub) > std::fabs(a)) {
        // Swap rows i and i+1.
        swapped[i] = 1;
        u0[i] = sub;
        u1[i] = dnext;
        u2[i] = (i + 2 < n) ? e[i + 1] : 0.0;
        const double m = a / sub;
        mult[i] = m;
        a = b - m * dnext;
        b = (i + 2 < n) ? -m * e[i + 1] : 0.0;
      } else {
        u0[i] = a;
        u1[i] = b;
        u2[i] = 0.0;
        const double m = (a != 0.0) ? sub / a : 0.0;
        mult[i] = m;
        a = dnext - m * b;
        b = (i + 2 < n) ? e[i + 1] : 0.0;
      }
    }
    u0[n - 1] = a;
  }

  // Solve (T - sigma I) x = rhs in place.
  void solve(std::vector<double>& x) const {
    const std::size_t n = u0.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swapped[i]) std::swap(x[i], x[i + 1]);
      x[i + 1] -= mult[i] * x[i];
    }
    const double tiny = std::numeric_limits<double>::min() / kEps;
    for (std::size_t k = n; k-- > 0;) {
      double s = x[k];
      if (k + 1 < n) s -= u1[k] * x[k + 1];
      if (k + 2 < n) s -= u2[k] * x[k + 2];
      double piv = u0[k];
      if (std::fabs(piv) < tiny) piv = (piv < 0.0 ? -tiny : tiny);
      x[k] = s / piv;
    }
  }
};

// Implicit-shift QL with eigenvector accumulation; used for small blocks.
// Classic tqli adapted to 0-based vectors.
void ql_implicit(std::vector<double> d, std::vector<double> e, double* min_eval,
                 std::vector<double>* min_evec) {
  const std::size_t n = d.size();
  e.push_back(0.0);
  std::vector<std::vector<double>> z(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) z[i][i] = 1.0;

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= kEps * dd) break;
      }
      if (m != l) {
        if (iter++ == 100) throw SolverError("ql_implicit: too many iterations", 0.0);
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::fabs(r) : -std::fabs(r)));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (std::size_t i = m; i-- > l;) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (std::size_t k = 0; k < n; ++k) {
            f = z[k][i + 1];
            z[k][i + 1] = s * z[k][i] + c * f;
            z[k][i] = c * z[k][i] - s * f;
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (d[i] < d[best]) best = i;
  *min_eval = d[best];
  min_evec->resize(n);
  for (std::size_t i = 0; i < n; ++i) (*min_evec)[i] = z[i][best];
}

}  // namespace

std::size_t sturm_count(const std::vector<double>& diag, const std::vector<double>& offdiag, double x) {
  const std::size_t n = diag.size();
  std::size_t count = 0;
  double q = diag[0] - x;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < n; ++i) {
    const double e = offdiag[i - 1];
    const double v = (q != 0.0) ? (e * e) / q : std::fabs(e) / kEps;
    q = diag[i] - x - v;
    if (q < 0.0) ++count;
  }
  return count;
}

GroundStateSolution ground_state(const TridiagonalHamiltonian& ham) {
  const std::vector<double>& d = ham.diag;
  const std::vector<double>& e = ham.offdiag;
  const std::size_t n = d.size();
  if (n == 0) throw std::invalid_argument("ground_state: empty block");

  GroundStateSolution sol;
  sol.sector = ham.sector;

  // Diagonal block (gamma = 1): the ground state is a basis vector.
  const bool diagonal = std::all_of(e.begin(), e.end(), [](double x) { return x == 0.0; });
  if (diagonal) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (d[i] < d[best]) best = i;
    sol.energy = d[best];
    sol.vector.assign(n, 0.0);
    sol.vector[best] = 1.0;
    sol.residual = 0.0;
    return sol;
  }

  if (n < 64) {
    ql_implicit(d, e, &sol.energy, &sol.vector);
    normalize(sol.vector);
    fix_sign(sol.vector);
    sol.energy = rayleigh_and_residual(d, e, sol.vector, &sol.residual);
    return sol;
  }

  // Sturm bisection brackets the smallest eigenvalue.
  auto [lo, hi] = spectrum_bounds(d, e);
  int iter = 0;
  while (hi - lo > kBisectionRelTol * std::max({1.0, std::fabs(lo), std::fabs(hi)})) {
    if (++iter > kBisectionCap)
      throw SolverError("ground_state: bisection did not converge", hi - lo);
    const double mid = 0.5 * (lo + hi);
    if (sturm_count(d, e, mid) >= 1)
      hi = mid;
    else
      lo = mid;
  }
  const double sigma = 0.5 * (lo + hi);

  // Inverse iteration with the fixed shift from bisection.
  TridiagLU lu;
  lu.factor(d, e, sigma);
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  const double norm_t = inf_norm(d, e);
  const double target = std::max(1e-12 * std::max(1.0, std::fabs(sigma)), 100.0 * kEps * norm_t);
  double residual = std::numeric_limits<double>::infinity();
  double theta = sigma;
  for (int sweep = 0; sweep < kInverseIterationCap; ++sweep) {
    lu.solve(v);
    normalize(v);
    theta = rayleigh_and_residual(d, e, v, &residual);
    if (residual <= target) break;
  }
  if (residual > std::max(target, 1e-10 * std::max(1.0, std::fabs(theta))))
    throw SolverError("ground_state: inverse iteration stalled at residual " + std::to_string(residual),
                      residual);

  fix_sign(v);
  sol.energy = theta;
  sol.vector = std::move(v);
  sol.residual = residual;
  return sol;
}

GroundStateSolution global_ground_state(const ModelParams& params) {
  params.validate();
  GroundStateSolution a = ground_state(build_sector(params, Parity::M1));
  GroundStateSolution b = ground_state(build_sector(params, Parity::M2));

  if (std::fabs(a.energy - b.energy) <= 1e-10) {
    // Tie: prefer the class containing the fully polarized state M = N/2.
    return a.sector.contains_polarized() ? std::move(a) : std::move(b);
  }
  return a.energy < b.energy ? std::move(a) : std::move(b);
}

}  // namespace lmg
