#pragma once

#include <random>

#include <Eigen/Dense>

#include "ncsym/sphere.hpp"
#include "ncsym/torus.hpp"

namespace ncsym {

using Rng = std::mt19937_64;

// random complex coefficients on indices with |n|_1 <= max_index
TorusElement random_torus_element(const ThetaMatrix& theta, int max_index, int terms, Rng& rng);
SpherePoly random_sphere_poly(int d, int max_degree, int terms, Rng& rng);
ThetaMatrix random_theta(int d, Rng& rng);
Eigen::MatrixXd random_matrix(int rows, int cols, Rng& rng);
// A = Omega S with S symmetric, normalised to unit Frobenius norm
Eigen::MatrixXd random_sp_generator(const Eigen::MatrixXd& omega, Rng& rng);
Eigen::Matrix2cd random_su2(Rng& rng);

}  // namespace ncsym
