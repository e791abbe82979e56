#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ncsym/random.hpp"
#include "ncsym/su2.hpp"
#include "ncsym/symbol.hpp"
#include "ncsym/torus.hpp"

namespace props {

using namespace ncsym;

struct Outcome {
  std::string name;
  double worst = 0.0;
  double tol = 0.0;
  int cases = 0;
  bool pass() const { return worst <= tol; }
};

inline ThetaMatrix any_theta(Rng& rng) {
  std::uniform_int_distribution<int> dd(2, 4);
  return random_theta(dd(rng), rng);
}

inline double scale(const TorusElement& a, const TorusElement& b, const TorusElement& c) {
  return std::max(1.0, a.coeff_norm() * b.coeff_norm() * c.coeff_norm());
}

inline Outcome torus_associativity(int n, Rng& rng) {
  Outcome o{"torus associativity", 0.0, 1e-12, n};
  for (int k = 0; k < n; ++k) {
    const ThetaMatrix th = any_theta(rng);
    const auto x = random_torus_element(th, 3, 4, rng), y = random_torus_element(th, 3, 4, rng),
               z = random_torus_element(th, 3, 4, rng);
    o.worst = std::max(o.worst, torus_distance((x * y) * z, x * (y * z)) / scale(x, y, z));
  }
  return o;
}

inline Outcome torus_trace_property(int n, Rng& rng) {
  Outcome o{"torus trace", 0.0, 1e-12, n};
  for (int k = 0; k < n; ++k) {
    const ThetaMatrix th = any_theta(rng);
    const auto x = random_torus_element(th, 3, 4, rng), y = random_torus_element(th, 3, 4, rng);
    const double s = std::max(1.0, x.coeff_norm() * y.coeff_norm());
    o.worst = std::max(o.worst, std::abs(torus_trace(x * y) - torus_trace(y * x)) / s);
    const cplx p = torus_trace(torus_adjoint(x) * x);
    o.worst = std::max(o.worst, std::abs(p.imag()) / s);
    o.worst = std::max(o.worst, std::abs(p.real() - x.coeff_norm() * x.coeff_norm()) / s);
    o.worst = std::max(o.worst, std::abs(torus_trace(TorusElement::scalar(th, 1.0)) - 1.0));
  }
  return o;
}

inline Outcome torus_leibniz(int n, Rng& rng) {
  Outcome o{"torus Leibniz rule", 0.0, 1e-12, n};
  for (int k = 0; k < n; ++k) {
    const ThetaMatrix th = any_theta(rng);
    const auto x = random_torus_element(th, 3, 4, rng), y = random_torus_element(th, 3, 4, rng);
    const double s = std::max(1.0, 10.0 * x.coeff_norm() * y.coeff_norm());
    for (int j = 0; j < th.dim(); ++j) {
      const auto lhs = torus_derivation(j, x * y);
      const auto rhs = torus_derivation(j, x) * y + x * torus_derivation(j, y);
      o.worst = std::max(o.worst, torus_distance(lhs, rhs) / s);
    }
    const auto adj = torus_adjoint(x * y) - torus_adjoint(y) * torus_adjoint(x);
    o.worst = std::max(o.worst, torus_distance(adj, TorusElement(th)) / s);
  }
  return o;
}

inline Outcome symbol_homomorphism(int n, Rng& rng) {
  Outcome o{"symbol homomorphism", 0.0, 1e-11, n};
  std::uniform_int_distribution<int> len(1, 3);
  for (int k = 0; k < n; ++k) {
    const ThetaMatrix th = random_theta(2, rng);
    const auto a = random_alternating_word(th, len(rng), rng), b = random_alternating_word(th, len(rng), rng);
    o.worst = std::max(o.worst, symbol_distance(sym(a * b), sym(a) * sym(b)));
    o.worst = std::max(o.worst, symbol_distance(sym(a.adjoint()), sym(a).adjoint()));
  }
  return o;
}

inline double opnorm(const Eigen::MatrixXcd& m) {
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0);
}

inline Outcome pinching(int n, Rng& rng) {
  Outcome o{"pinching", 0.0, 1e-12, n};
  std::uniform_int_distribution<int> tw(0, 16);
  std::vector<IrrepBlock> blocks;
  for (int t = 0; t <= 16; ++t) blocks.push_back(build_block(HalfInteger{t}));
  for (int k = 0; k < n; ++k) {
    const IrrepBlock& B = blocks[tw(rng)];
    const int m = B.dim;
    const Eigen::MatrixXcd M =
        random_matrix(m, m, rng).cast<cplx>() + cplx(0, 1) * random_matrix(m, m, rng).cast<cplx>();
    const Eigen::MatrixXcd E = block_conditional_expectation(B, M);
    const double s = std::max(1.0, M.norm());
    o.worst = std::max(o.worst, (block_conditional_expectation(B, E) - E).norm() / s);
    o.worst = std::max(o.worst, std::abs(E.trace() - M.trace()) / s);
    o.worst = std::max(o.worst, std::max(0.0, opnorm(E) - opnorm(M)) / s);
    const Eigen::MatrixXcd b1 = B.dense_b(0);
    o.worst = std::max(o.worst, (block_conditional_expectation(B, b1 * M * b1) - b1 * E * b1).norm() / s);
    const Eigen::MatrixXcd P = M.adjoint() * M;
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(block_conditional_expectation(B, P))
                                   .eigenvalues();
    o.worst = std::max(o.worst, std::max(0.0, -ev.minCoeff()) / s);
  }
  return o;
}

inline Outcome eta_homomorphism(int n, Rng& rng) {
  Outcome o{"eta homomorphism", 0.0, 1e-11, n};
  for (int k = 0; k < n; ++k) {
    const Eigen::Matrix2cd a = random_su2(rng), b = random_su2(rng);
    const Eigen::Matrix3d e = eta(a);
    o.worst = std::max(o.worst, (eta(a * b) - e * eta(b)).norm());
    o.worst = std::max(o.worst, (e.transpose() * e - Eigen::Matrix3d::Identity()).norm());
    o.worst = std::max(o.worst, std::abs(e.determinant() - 1.0));
    o.worst = std::max(o.worst, (eta(a.adjoint()) - e.transpose()).norm());
  }
  return o;
}

inline std::vector<Outcome> all(int n, std::uint64_t seed) {
  Rng rng(seed);
  return {torus_associativity(n, rng), torus_trace_property(n, rng), torus_leibniz(n, rng),
          symbol_homomorphism(n, rng), pinching(n, rng),           eta_homomorphism(n, rng)};
}

}  // namespace props
