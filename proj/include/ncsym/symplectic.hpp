#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "ncsym/quadrature.hpp"
#include "ncsym/random.hpp"
#include "ncsym/sphere.hpp"

namespace ncsym {

// [[0,1],[-1,0]] repeated d/2 times
Eigen::MatrixXd omega(int d);

struct NormalForm {
  Eigen::MatrixXd beta;  // beta^T theta beta = Omega
  double residual = 0.0;
  double condition = 0.0;
  Eigen::MatrixXd beta_beta_t;  // for inspection only
};

NormalForm antisymmetric_normal_form(const Eigen::MatrixXd& theta);

// beta g beta^{-1}, an element of Sp(theta, d)
Eigen::MatrixXd sp_theta_conjugate(const Eigen::MatrixXd& g, const NormalForm& nf, const Eigen::MatrixXd& theta);

// Q blockdiag(lambda_j Omega_2) Q^T with Q random orthogonal and lambda_j uniform in [lo, hi]
Eigen::MatrixXd random_nondegenerate_theta(int d, Rng& rng, double lo = 0.5, double hi = 2.0);

// exp(s A) with A a unit random generator of sp(Omega, d)
Eigen::MatrixXd random_sp_element(int d, double s, Rng& rng);

// int V_g b_n over the sphere for each monomial, one pass over the nodes
std::vector<double> vg_moments(const Eigen::MatrixXd& g, const std::vector<MultiIndex>& monomials,
                               const QuadratureNodes& nodes);

struct SpInvarianceReport {
  int d = 0;
  int degree = 0;
  std::vector<double> per_g_max;  // max over monomials of |m(V_g b) - m(b)|
  double max_residual = 0.0;
  double max_det_defect = 0.0;    // | |det g| - 1 |
  long nodes = 0;
};

SpInvarianceReport sp_invariant_functional_check(const Eigen::MatrixXd& theta, int degree, const QuadratureRule& rule,
                                                 int group_samples, std::uint64_t seed, double step = 0.3);

struct Grid {
  int d = 2;
  int half_width = 16;  // points -K..K per axis
  double h = 1.0;
};

// max over interior points of |U(t)U(s) xi - e^{(i/2)(t, theta s)} U(t+s) xi| for seeded unimodular xi
double ccr_phase_residual(const Eigen::VectorXd& t, const Eigen::VectorXd& s, const Eigen::MatrixXd& theta,
                          const Grid& grid, std::uint64_t seed = 3, int vectors = 3);
cplx ccr_phase(const Eigen::VectorXd& t, const Eigen::VectorXd& s, const Eigen::MatrixXd& theta);

double multiplier_identity_residual(const Eigen::MatrixXd& g, const SpherePoly& b, int samples, std::uint64_t seed);

// |gt|^d/|t|^d (1+|gt|^2)^{-d/2} - (1+|t|^2)^{-d/2}
double h_function(const Eigen::MatrixXd& g, const Eigen::VectorXd& t);
// t_k/|t| - t_k/(1+|t|^2)^{1/2}, k zero-based
double riesz_difference(int k, const Eigen::VectorXd& t);

struct DecayProfile {
  std::vector<double> radii;
  std::vector<double> profile;
  bool bounded() const;  // max of the last two <= 1.05 x max of the first two
};

// sup over sampled |t| in [R, 2R] of |h(t)| |t|^{d+2}
DecayProfile h_decay_profile(const Eigen::MatrixXd& g, const std::vector<double>& shell_radii, int samples,
                             std::uint64_t seed);

// sum over unit cells with centre in the ball of the sampled per-cell sup of |h|, for each radius
std::vector<double> h_cell_sums(const Eigen::MatrixXd& g, const std::vector<double>& radii);

// sup over the sphere |t| = R of |h_k(t)| R^2
DecayProfile riesz_difference_decay(int k, int d, const std::vector<double>& radii, int samples, std::uint64_t seed);

}  // namespace ncsym
