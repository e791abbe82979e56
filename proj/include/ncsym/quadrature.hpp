#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "ncsym/sphere.hpp"

namespace ncsym {

enum class QuadratureKind { Product, LowDiscrepancy };

// Product: d=2 trapezoid in the angle (resolution points); d=3 Gauss-Legendre in t_1 x
// trapezoid (resolution x 2*resolution); d=4 Hopf coordinates, Gauss-Legendre in the
// latitude x two trapezoids (resolution^3).
// LowDiscrepancy: Halton points with a seeded Cranley-Patterson shift, pushed to the
// sphere through the Gaussian quantile.
struct QuadratureRule {
  QuadratureKind kind = QuadratureKind::Product;
  int resolution = 64;
  long samples = 1L << 16;
  std::uint64_t seed = 1;

  static QuadratureRule product(int resolution) { return {QuadratureKind::Product, resolution, 0, 0}; }
  static QuadratureRule low_discrepancy(long samples, std::uint64_t seed) {
    return {QuadratureKind::LowDiscrepancy, 0, samples, seed};
  }
  QuadratureRule coarsened() const;
};

struct QuadratureNodes {
  int d = 0;
  Eigen::MatrixXd points;  // d x N, unit columns
  Eigen::VectorXd weights;
};

QuadratureNodes quadrature_nodes(int d, const QuadratureRule& rule);

struct QuadratureResult {
  cplx value;
  double error_proxy;  // |Q - Q_coarse|
  long nodes;
};

QuadratureResult quadrature_integrate(const SphereFunction& f, const QuadratureRule& rule);

// Gauss-Legendre nodes and weights on [-1, 1]
void gauss_legendre(int n, Eigen::VectorXd& x, Eigen::VectorXd& w);

// |m(V_g b) - |det g|^{-1} m(b)| with m(V_g b) by quadrature and m(b) exact
double invariance_residual(const Eigen::MatrixXd& g, const SpherePoly& b, const QuadratureRule& rule);

// sum_i w_i f_i with compensated summation
cplx weighted_sum(const Eigen::VectorXd& w, const std::function<cplx(long)>& f);

}  // namespace ncsym
