#include <cmath>
#include <numbers>

#include <unsupported/Eigen/MatrixFunctions>

#include "doctest.h"
#include "ncsym/random.hpp"
#include "ncsym/symplectic.hpp"

using namespace ncsym;

namespace {
const double pi = std::numbers::pi;
}

TEST_CASE("omega") {
  for (int d : {2, 4, 6}) {
    const Eigen::MatrixXd o = omega(d);
    CHECK((o * o + Eigen::MatrixXd::Identity(d, d)).norm() == 0.0);
    CHECK((o.transpose() + o).norm() == 0.0);
  }
  CHECK_THROWS(omega(3));
}

TEST_CASE("normal form") {
  const NormalForm a = antisymmetric_normal_form(2.5 * omega(2));
  CHECK((a.beta - Eigen::MatrixXd::Identity(2, 2) / std::sqrt(2.5)).norm() < 1e-14);
  CHECK(a.residual < 1e-14);
  Rng rng(1);
  for (int d : {2, 4, 6})
    for (int k = 0; k < 30; ++k) {
      const Eigen::MatrixXd th = random_theta(d, rng).matrix();
      const NormalForm nf = antisymmetric_normal_form(th);
      CHECK(nf.residual < 1e-10);
      CHECK((nf.beta.transpose() * th * nf.beta - omega(d)).norm() < 1e-10);
    }
  CHECK_THROWS(antisymmetric_normal_form(Eigen::MatrixXd::Zero(2, 2)));
  CHECK_THROWS(antisymmetric_normal_form(Eigen::MatrixXd::Identity(2, 2)));
}

TEST_CASE("conjugation into Sp(theta)") {
  Rng rng(2);
  const Eigen::MatrixXd th = random_nondegenerate_theta(4, rng);
  const NormalForm nf = antisymmetric_normal_form(th);
  CHECK((sp_theta_conjugate(Eigen::MatrixXd::Identity(4, 4), nf, th) - Eigen::MatrixXd::Identity(4, 4)).norm() < 1e-12);
  for (int k = 0; k < 10; ++k) {
    const Eigen::MatrixXd h = sp_theta_conjugate(random_sp_element(4, 0.6, rng), nf, th);
    CHECK((h.transpose() * th * h - th).norm() < 1e-9);
  }
  const Eigen::MatrixXd a = 3.0 * omega(4);
  const NormalForm na = antisymmetric_normal_form(a);
  const Eigen::MatrixXd g = random_sp_element(4, 0.5, rng);
  CHECK((sp_theta_conjugate(g, na, a) - g).norm() < 1e-12);
  Eigen::MatrixXd bad = Eigen::MatrixXd::Identity(4, 4);
  bad(0, 0) = 2.0;
  CHECK_THROWS(sp_theta_conjugate(bad, nf, th));
}

TEST_CASE("sp invariance of the moment functional") {
  const Eigen::MatrixXd o = omega(2);
  const auto r0 = sp_invariant_functional_check(o, 6, QuadratureRule::product(128), 3, 1, 0.0);
  CHECK(r0.max_residual < 1e-12);
  Rng rng(3);
  const auto r2 = sp_invariant_functional_check(random_nondegenerate_theta(2, rng), 6, QuadratureRule::product(512), 5, 2);
  CHECK(r2.max_residual < 1e-9);
  const auto r4 = sp_invariant_functional_check(random_nondegenerate_theta(4, rng), 4, QuadratureRule::product(60), 4, 3);
  CHECK(r4.max_residual < 1e-6);
  CHECK(r4.max_det_defect < 1e-9);
}

TEST_CASE("ccr phases") {
  const Eigen::MatrixXd th = pi * omega(2);
  const Eigen::Vector2d t(1, 0), s(0, 1);
  CHECK(std::abs(ccr_phase(t, s, th) - cplx(0, 1)) < 1e-15);
  CHECK(std::abs(ccr_phase(t, t, th) - 1.0) < 1e-15);
  const Grid g{2, 12, 1.0};
  CHECK(ccr_phase_residual(t, s, th, g) < 1e-14);
  CHECK(ccr_phase_residual(t, t, th, g) < 1e-14);
  Rng rng(4);
  const Eigen::MatrixXd r = random_nondegenerate_theta(4, rng);
  const Grid g4{4, 3, 0.5};
  CHECK(ccr_phase_residual(Eigen::Vector4d(0.5, 0, -1, 0.5), Eigen::Vector4d(0, 1, 0.5, 0), r, g4) < 1e-13);
  CHECK(std::abs(ccr_phase(t, s, r.topLeftCorner(2, 2)) * ccr_phase(s, t, r.topLeftCorner(2, 2)) - 1.0) < 1e-15);
  CHECK_THROWS(ccr_phase_residual(Eigen::Vector2d(0.3, 0), s, th, g));
}

TEST_CASE("multiplier identity") {
  CHECK(multiplier_identity_residual(Eigen::MatrixXd::Identity(2, 2), SpherePoly::coordinate(2, 0), 100, 1) < 1e-15);
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(2, 2);
  g(0, 0) = 2.0;
  CHECK(multiplier_identity_residual(g, SpherePoly::coordinate(2, 0), 10000, 1) < 1e-14);
  Rng rng(5);
  CHECK(multiplier_identity_residual(random_sp_element(4, 0.7, rng), SpherePoly::monomial({1, 1, 0, 0}), 10000, 2) <
        1e-13);
  CHECK_THROWS(multiplier_identity_residual(Eigen::MatrixXd::Zero(2, 2), SpherePoly::coordinate(2, 0), 10, 1));
}

TEST_CASE("h decay") {
  const auto z = h_decay_profile(Eigen::MatrixXd::Identity(2, 2), {10, 100}, 100, 1);
  for (double v : z.profile) CHECK(v == 0.0);
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(2, 2);
  g(0, 0) = 2.0;
  g(1, 1) = 0.5;
  const auto p = h_decay_profile(g, {10, 100, 1000}, 5000, 2);
  CHECK(p.bounded());
  CHECK(std::abs(p.profile[2] - p.profile[1]) < 0.2 * p.profile[1]);
  const auto cs = h_cell_sums(g, {1000, 2000});
  CHECK(std::abs(cs[1] - cs[0]) < 0.01 * cs[1]);
}

TEST_CASE("riesz differences") {
  const double R = 100.0;
  CHECK(std::abs(riesz_difference(0, Eigen::Vector2d(R, 0)) * R * R - 0.4999625) < 1e-6);
  CHECK(riesz_difference(0, Eigen::Vector2d(0, 7)) == 0.0);
  const auto p = riesz_difference_decay(0, 2, {10, 100, 1000}, 1000, 3);
  CHECK(std::abs(p.profile[2] - 0.5) < 1e-4);
  CHECK(p.bounded());
  for (double v : p.profile) CHECK(v <= 0.5);
}
