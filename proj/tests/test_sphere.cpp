#include <cmath>
#include <numbers>

#include <unsupported/Eigen/MatrixFunctions>

#include "doctest.h"
#include "ncsym/quadrature.hpp"
#include "ncsym/random.hpp"
#include "ncsym/sphere.hpp"
#include "ncsym/symplectic.hpp"

using namespace ncsym;

namespace {
const double pi = std::numbers::pi;
}

TEST_CASE("exact moments") {
  CHECK(sphere_moment({1, 0, 0}) == 0.0);
  CHECK(std::abs(sphere_moment({2, 0, 0}) - 4 * pi / 3) < 1e-14);
  CHECK(std::abs(sphere_moment({2, 2}) - pi / 4) < 1e-14);
  CHECK(std::abs(sphere_moment({0, 0}) - 2 * pi) < 1e-14);
  CHECK(std::abs(sphere_volume(4) - 2 * pi * pi) < 1e-13);
}

TEST_CASE("integration") {
  CHECK(std::abs(sphere_integrate(SpherePoly::constant(2, 1.0)) - 2 * pi) < 1e-14);
  CHECK(std::abs(sphere_integrate(SpherePoly::monomial({1, 1, 0}))) == 0.0);
  const SphereFunction f = as_function(SpherePoly::monomial({2, 0, 0}));
  const auto q = quadrature_integrate(f, QuadratureRule::product(64));
  CHECK(std::abs(q.value - 4 * pi / 3) < 1e-10);
}

TEST_CASE("quadrature against exact moments") {
  for (int d : {2, 3, 4}) {
    const QuadratureNodes nodes = quadrature_nodes(d, QuadratureRule::product(d == 4 ? 40 : 64));
    for (const auto& n : multi_indices(d, 6)) {
      const SpherePoly b = SpherePoly::monomial(n);
      const cplx q = weighted_sum(nodes.weights, [&](long i) {
        return b(std::span<const double>(nodes.points.col(i).data(), static_cast<size_t>(d)));
      });
      CHECK(std::abs(q - sphere_moment(n)) < 1e-11);
    }
  }
}

TEST_CASE("low discrepancy rule") {
  const auto a = quadrature_nodes(5, QuadratureRule::low_discrepancy(1 << 14, 3));
  const auto b = quadrature_nodes(5, QuadratureRule::low_discrepancy(1 << 14, 3));
  CHECK(a.points == b.points);
  const double err = std::abs(a.weights.dot(a.points.row(0).array().square().matrix().transpose()) -
                              sphere_moment({2, 0, 0, 0, 0}));
  CHECK(err < 1e-2 * sphere_volume(5));
}

TEST_CASE("semantic distance") {
  SpherePoly a = SpherePoly::monomial({2, 0}) + SpherePoly::monomial({0, 2});
  CHECK(sphere_poly_distance(a, SpherePoly::constant(2, 1.0)) < 1e-13);
  CHECK(sphere_poly_distance(SpherePoly::monomial({1, 0}), SpherePoly::monomial({0, 1})) > 0.1);
}

TEST_CASE("vg action") {
  Rng rng(2);
  const SpherePoly b = random_sphere_poly(3, 3, 4, rng);
  const SphereFunction v = vg_action(Eigen::MatrixXd::Identity(3, 3), b);
  const double t[] = {0.6, 0.0, 0.8};
  CHECK(std::abs(v(t) - b(std::span<const double>(t))) < 1e-15);
  CHECK_THROWS(vg_action(Eigen::MatrixXd::Zero(3, 3), b));
}

TEST_CASE("invariance lemma") {
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(2, 2);
  g(0, 0) = 2.0;
  CHECK(invariance_residual(g, SpherePoly::constant(2, 1.0), QuadratureRule::product(256)) < 1e-10);
  Eigen::Matrix2d rot;
  rot << std::cos(0.4), -std::sin(0.4), std::sin(0.4), std::cos(0.4);
  CHECK(invariance_residual(rot, SpherePoly::monomial({4, 2}), QuadratureRule::product(256)) < 1e-12);
  const Eigen::MatrixXd g3 = 3.0 * Eigen::MatrixXd::Identity(3, 3);
  CHECK(invariance_residual(g3, SpherePoly::monomial({2, 0, 0}), QuadratureRule::product(64)) < 1e-8);
  Eigen::MatrixXd neg = -Eigen::MatrixXd::Identity(2, 2);
  neg(0, 0) = 1.5;
  CHECK(invariance_residual(neg, SpherePoly::monomial({2, 0}), QuadratureRule::product(256)) < 1e-10);
}

TEST_CASE("lie action") {
  const Eigen::MatrixXd A = omega(2);
  const SpherePoly l = lie_action(A, SpherePoly::coordinate(2, 0));
  CHECK(sphere_poly_distance(l, SpherePoly::coordinate(2, 1)) < 1e-13);
  Rng rng(4);
  const Eigen::MatrixXd B = random_matrix(3, 3, rng);
  SpherePoly expect(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      MultiIndex n(3, 0);
      ++n[i];
      ++n[j];
      expect.add_term(n, -3.0 * B(i, j));
    }
  CHECK(sphere_poly_distance(lie_action(B, SpherePoly::constant(3, 1.0)), expect) < 1e-12);
}

TEST_CASE("lie action is the derivative of V") {
  Rng rng(6);
  for (int d : {2, 4}) {
    const Eigen::MatrixXd A = random_sp_generator(omega(d), rng);
    const SpherePoly b = random_sphere_poly(d, 3, 3, rng);
    const double e3 = lie_action_fd_error(A, b, 1e-3), e4 = lie_action_fd_error(A, b, 1e-4);
    CHECK(e3 / e4 > 5.0);
    CHECK(e3 / e4 < 15.0);
  }
}

TEST_CASE("lie bracket is an anti-representation") {
  Rng rng(8);
  const Eigen::MatrixXd A = random_sp_generator(omega(2), rng), B = random_sp_generator(omega(2), rng);
  const SpherePoly b = random_sphere_poly(2, 3, 3, rng);
  const SpherePoly lhs = lie_action(A * B - B * A, b);
  const SpherePoly rhs = lie_action(B, lie_action(A, b)) - lie_action(A, lie_action(B, b));
  CHECK(sphere_poly_distance(lhs, rhs) < 1e-11);
}

TEST_CASE("symplectic membership") {
  CHECK(sp_algebra_membership(omega(2), omega(2)));
  Rng rng(5);
  const Eigen::MatrixXd A = random_sp_generator(omega(4), rng);
  CHECK(sp_algebra_membership(A, omega(4)));
  CHECK(sp_group_membership(Eigen::MatrixXd(0.8 * A).exp(), omega(4)));
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(2, 2);
  g(0, 0) = 2.0;
  CHECK_FALSE(sp_group_membership(g, omega(2)));
}

TEST_CASE("moment recursions") {
  for (int d : {2, 4}) {
    const RecursionReport r = moment_recursion_check(d, 10);
    CHECK(r.max_odd < 1e-12);
    CHECK(r.max_first < 1e-12);
    CHECK(r.max_main < 1e-12);
    CHECK(!r.rows.empty());
  }
  const RecursionReport bad = moment_recursion_check(2, 4, [](const MultiIndex& n) { return 1.0 + degree(n); });
  CHECK(bad.max_first > 0.1);
  CHECK_THROWS(moment_recursion_check(3, 4));
}

TEST_CASE("sampled m(pi(A) b) vanishes") {
  Rng rng(12);
  for (int d : {2, 4}) {
    const Eigen::MatrixXd A = random_sp_generator(omega(d), rng);
    for (const auto& n : multi_indices(d, 4))
      CHECK(std::abs(sphere_integrate(lie_action(A, SpherePoly::monomial(n)))) < 1e-12);
  }
}
