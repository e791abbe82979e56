#include <cmath>
#include <numbers>

#include "doctest.h"
#include "ncsym/random.hpp"
#include "ncsym/torus.hpp"

using namespace ncsym;

namespace {
const double pi = std::numbers::pi;
ThetaMatrix th2(double t) { return ThetaMatrix::from_upper(2, {t}); }
}  // namespace

TEST_CASE("theta matrix") {
  const auto t = ThetaMatrix::from_upper(3, {1.0, 2.0, 3.0});
  CHECK(t(0, 1) == 1.0);
  CHECK(t(1, 0) == -1.0);
  CHECK(t(1, 2) == 3.0);
  Eigen::MatrixXd bad = Eigen::MatrixXd::Identity(2, 2);
  CHECK_THROWS_AS(ThetaMatrix{bad}, ThetaError);
  CHECK_THROWS(ThetaMatrix::from_upper(3, {1.0}));
}

TEST_CASE("product relation") {
  const double t = 0.7;
  const auto th = th2(t);
  const auto p = TorusElement::unit(th, {1, 0}) * TorusElement::unit(th, {0, 1});
  CHECK(p.coeffs().size() == 1);
  CHECK(std::abs(p.coeff({1, 1}) - std::polar(1.0, t / 2)) < 1e-15);
}

TEST_CASE("unit is identity") {
  Rng rng(1);
  const auto th = th2(0.3);
  const auto x = random_torus_element(th, 3, 5, rng);
  CHECK(torus_distance(TorusElement::scalar(th, 1.0) * x, x) < 1e-15);
  CHECK(torus_distance(x * TorusElement::scalar(th, 1.0), x) < 1e-15);
}

TEST_CASE("commutator at theta = pi/2") {
  const auto th = th2(pi / 2);
  const auto a = TorusElement::unit(th, {1, 0}), b = TorusElement::unit(th, {0, 1});
  const auto c = a * b - b * a;
  CHECK(std::abs(c.coeff({1, 1}) - cplx(0, 2 * std::sin(pi / 4))) < 1e-15);
  CHECK(c.coeffs().size() == 1);
}

TEST_CASE("theta mismatch") {
  const auto x = TorusElement::unit(th2(0.1), {1, 0});
  const auto y = TorusElement::unit(th2(0.2), {1, 0});
  CHECK_THROWS_AS(x * y, ThetaError);
  CHECK_THROWS_AS(x + y, ThetaError);
}

TEST_CASE("adjoint") {
  const double t = 1.3;
  const auto th = th2(t);
  CHECK(std::abs(torus_adjoint(TorusElement::unit(th, {2, -1})).coeff({-2, 1}) - 1.0) < 1e-15);
  const cplx c(2.0, 3.0);
  CHECK(std::abs(torus_adjoint(TorusElement::scalar(th, c)).coeff({0, 0}) - std::conj(c)) < 1e-15);
  const auto p = torus_adjoint(TorusElement::unit(th, {1, 0}) * TorusElement::unit(th, {0, 1}));
  CHECK(std::abs(p.coeff({-1, -1}) - std::polar(1.0, -t / 2)) < 1e-15);
}

TEST_CASE("trace") {
  const auto th = th2(0.4);
  CHECK(torus_trace(TorusElement::scalar(th, 1.0)) == cplx(1.0));
  CHECK(torus_trace(TorusElement::unit(th, {3, -2})) == cplx(0.0));
  const auto u = TorusElement::unit(th, {3, -2});
  CHECK(std::abs(torus_trace(torus_adjoint(u) * u) - 1.0) < 1e-15);
}

TEST_CASE("derivations and laplacian") {
  const auto th = th2(0.4);
  const auto d = torus_derivation(0, TorusElement::unit(th, {2, 3}));
  CHECK(std::abs(d.coeff({2, 3}) - cplx(0, 2)) < 1e-15);
  CHECK(torus_derivation(1, TorusElement::scalar(th, 5.0)).empty());
  const int n[] = {3, 4};
  CHECK(torus_laplacian_eigenvalue(n) == 25.0);
}

TEST_CASE("translations") {
  const auto th = th2(0.9);
  const auto u0 = TorusElement::scalar(th, 1.0);
  CHECK(torus_distance(torus_translate(u0, Eigen::Vector2d(0.3, -1.1)), u0) < 1e-15);
  const auto u = TorusElement::unit(th, {1, 0});
  CHECK(torus_distance(torus_translate(u, Eigen::Vector2d(pi, 0)), u * cplx(-1.0)) < 1e-15);
  Rng rng(3);
  for (int k = 0; k < 10; ++k) {
    const auto x = random_torus_element(th, 3, 4, rng), y = random_torus_element(th, 3, 4, rng);
    const Eigen::Vector2d t(0.7 * k, -0.2 * k);
    CHECK(torus_distance(torus_translate(x * y, t), torus_translate(x, t) * torus_translate(y, t)) < 1e-13);
  }
}

TEST_CASE("translate average") {
  const auto th = th2(0.2);
  const auto x = TorusElement::scalar(th, 3.0) + TorusElement::unit(th, {2, 1}, 5.0);
  CHECK(std::abs(torus_translate_average(x) - 3.0 * 4 * pi * pi) < 1e-12);
  CHECK(std::abs(torus_translate_average(TorusElement::unit(th, {1, 2}))) < 1e-15);
  const auto p = TorusElement::unit(th, {1, 0}) * TorusElement::unit(th, {-1, 0});
  CHECK(std::abs(torus_translate_average(p) - 4 * pi * pi) < 1e-12);
}

TEST_CASE("json round trip") {
  Rng rng(9);
  const auto th = ThetaMatrix::from_upper(3, {0.1, 0.2, 0.3});
  const auto x = random_torus_element(th, 4, 6, rng);
  const auto y = torus_from_json(nlohmann::json::parse(to_json(x).dump()));
  CHECK(y.theta() == th);
  CHECK(torus_distance(x, y) == 0.0);
}
