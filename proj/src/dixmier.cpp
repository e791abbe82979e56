#include "ncsym/dixmier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ncsym/lattice.hpp"
#include "ncsym/summation.hpp"
#include "ncsym/symbol.hpp"

namespace ncsym {

LatticeDiagonal symbol_diagonal(const SpherePoly& y) {
  const int d = y.dim();
  return {d, [y, d](std::span<const int> n, long long n2) {
            return pi2_value(y, n) * std::pow(1.0 + static_cast<double>(n2), -0.5 * d);
          }};
}

long long lattice_count(int d, double N) {
  long long k = 0;
  for_each_lattice_point(d, 0, static_cast<long long>(std::floor(N * N)), [&](std::span<const int>, long long) { ++k; });
  return k;
}

PartialSums lattice_partial_sums(const LatticeDiagonal& diag, const std::vector<double>& N_grid) {
  if (N_grid.empty()) throw std::invalid_argument("empty radius grid");
  std::vector<long long> r2;
  for (size_t i = 0; i < N_grid.size(); ++i) {
    if (N_grid[i] < 1.0) throw std::invalid_argument("radii must be >= 1");
    if (i && !(N_grid[i] > N_grid[i - 1])) throw std::invalid_argument("radius grid must be strictly increasing");
    r2.push_back(static_cast<long long>(std::floor(N_grid[i] * N_grid[i])));
  }
  std::vector<NeumaierSum<cplx>> bucket(r2.size());
  std::vector<long long> count(r2.size(), 0);
  for_each_lattice_point(diag.d, 0, r2.back(), [&](std::span<const int> n, long long n2) {
    const size_t b = std::lower_bound(r2.begin(), r2.end(), n2) - r2.begin();
    bucket[b] += diag.entry(n, n2);
    ++count[b];
  });
  PartialSums out;
  out.N = N_grid;
  cplx s{};
  long long k = 0;
  for (size_t i = 0; i < r2.size(); ++i) {
    s += bucket[i].value();
    k += count[i];
    out.S.push_back(s);
    out.K.push_back(k);
  }
  return out;
}

cplx lattice_partial_sum(const LatticeDiagonal& diag, double N) { return lattice_partial_sums(diag, {N}).S[0]; }

LogFit log_fit(const LatticeDiagonal& diag, const std::vector<double>& N_grid) {
  if (N_grid.size() < 4) throw std::invalid_argument("log fit needs at least 4 radii");
  const PartialSums ps = lattice_partial_sums(diag, N_grid);
  const size_t m = N_grid.size();
  Eigen::MatrixXd A(m, 2);
  Eigen::VectorXd b(m);
  for (size_t i = 0; i < m; ++i) {
    A(i, 0) = std::log(N_grid[i]);
    A(i, 1) = 1.0;
    b[i] = ps.S[i].real();
  }
  const Eigen::Vector2d c = A.colPivHouseholderQr().solve(b);
  LogFit f;
  f.slope = c[0];
  f.intercept = c[1];
  f.N_grid = N_grid;
  for (size_t i = 0; i < m; ++i) {
    f.S.push_back(b[i]);
    f.max_residual = std::max(f.max_residual, std::abs(b[i] - c[0] * A(i, 0) - c[1]));
  }
  return f;
}

double radial_integral_check(int d, double N) {
  if (!(N > 1.0)) throw std::invalid_argument("radial check needs N > 1");
  using boost::math::quadrature::gauss_kronrod;
  auto f = [d](double r) { return std::pow(r, d - 1) * std::pow(1.0 + r * r, -0.5 * d); };
  const double head = gauss_kronrod<double, 31>::integrate(f, 0.0, 1.0, 15, 1e-14);
  // r = e^u on [1, N]
  auto g = [&](double u) {
    const double r = std::exp(u);
    return r * f(r);
  };
  const double tail = gauss_kronrod<double, 31>::integrate(g, 0.0, std::log(N), 20, 1e-14);
  return head + tail - std::log(N);
}

TraceEstimate normalised_trace_estimate(const LatticeDiagonal& diag, double N) {
  if (N < 2.0) throw std::invalid_argument("estimator needs N >= 2");
  const PartialSums ps = lattice_partial_sums(diag, {0.5 * N, N});
  TraceEstimate e;
  e.S = ps.S[1];
  e.K = ps.K[1];
  e.cesaro = ps.S[1] / std::log(static_cast<double>(ps.K[1]));
  const double dl = std::log(static_cast<double>(ps.K[1])) - std::log(static_cast<double>(ps.K[0]));
  e.value = (ps.S[1] - ps.S[0]) / dl;
  return e;
}

ConnesTorusResult connes_trace_torus(const TorusElement& x, const SpherePoly& y, double N) {
  if (x.dim() != y.dim()) throw std::invalid_argument("dimension mismatch");
  const int d = x.dim();
  const cplx tau = torus_trace(x);
  ConnesTorusResult r;
  double dev = 0.0;
  IVec nv(d);
  LatticeDiagonal model{d, [&](std::span<const int> n, long long n2) {
                          std::copy(n.begin(), n.end(), nv.begin());
                          const cplx v = model_diagonal_entry(x, y, nv);
                          const cplx closed = tau * pi2_value(y, n) * std::pow(1.0 + static_cast<double>(n2), -0.5 * d);
                          dev = std::max(dev, std::abs(v - closed));
                          return v;
                        }};
  const TraceEstimate e = normalised_trace_estimate(model, N);
  r.estimate = e.value;
  r.cesaro = e.cesaro;
  r.reference = tau * sphere_integrate(y) / static_cast<double>(d);
  r.max_diagonal_deviation = dev;
  return r;
}

}  // namespace ncsym
