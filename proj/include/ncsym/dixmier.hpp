#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ncsym/sphere.hpp"
#include "ncsym/torus.hpp"

namespace ncsym {

// Diagonal operator on l2(Z^d); the entry rule receives n and |n|^2.
struct LatticeDiagonal {
  int d;
  std::function<cplx(std::span<const int>, long long)> entry;
};

// n -> y(n/|n|) (1 + |n|^2)^{-d/2}
LatticeDiagonal symbol_diagonal(const SpherePoly& y);

// K(N) = #{0 < |n| <= N}
long long lattice_count(int d, double N);

struct PartialSums {
  std::vector<double> N;
  std::vector<cplx> S;
  std::vector<long long> K;
};

// S(N) = sum over 0 < |n| <= N for every N of the (strictly increasing) grid, in one pass
PartialSums lattice_partial_sums(const LatticeDiagonal& diag, const std::vector<double>& N_grid);
cplx lattice_partial_sum(const LatticeDiagonal& diag, double N);

struct LogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
  std::vector<double> N_grid;
  std::vector<double> S;  // real parts used in the fit
};

// least squares of Re S(N) against log N
LogFit log_fit(const LatticeDiagonal& diag, const std::vector<double>& N_grid);

// int_0^N r^{d-1} (1 + r^2)^{-d/2} dr - log N
double radial_integral_check(int d, double N);

struct TraceEstimate {
  cplx value;   // (S(N) - S(N/2)) / (log K(N) - log K(N/2))
  cplx cesaro;  // S(N) / log K(N)
  cplx S;
  long long K = 0;
};

TraceEstimate normalised_trace_estimate(const LatticeDiagonal& diag, double N);

struct ConnesTorusResult {
  cplx estimate;
  cplx reference;
  cplx cesaro;
  double max_diagonal_deviation = 0.0;  // model entry vs tau(x) y(n^) (1+|n|^2)^{-d/2}
};

ConnesTorusResult connes_trace_torus(const TorusElement& x, const SpherePoly& y, double N);

}  // namespace ncsym
