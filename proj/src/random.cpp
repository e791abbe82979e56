#include "ncsym/random.hpp"

namespace ncsym {

TorusElement random_torus_element(const ThetaMatrix& theta, int max_index, int terms, Rng& rng) {
  const int d = theta.dim();
  std::uniform_int_distribution<int> idx(-max_index, max_index);
  std::normal_distribution<double> nd;
  TorusElement x(theta);
  for (int t = 0; t < terms; ++t) {
    IVec n(d);
    int l1 = 0;
    do {
      l1 = 0;
      for (auto& v : n) {
        v = idx(rng);
        l1 += std::abs(v);
      }
    } while (l1 > max_index);
    x.add_term(n, cplx(nd(rng), nd(rng)));
  }
  return x;
}

SpherePoly random_sphere_poly(int d, int max_degree, int terms, Rng& rng) {
  const auto idx = multi_indices(d, max_degree);
  std::uniform_int_distribution<size_t> pick(0, idx.size() - 1);
  std::normal_distribution<double> nd;
  SpherePoly p(d);
  for (int t = 0; t < terms; ++t) p.add_term(idx[pick(rng)], cplx(nd(rng), nd(rng)));
  return p;
}

Eigen::MatrixXd random_matrix(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> nd;
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = nd(rng);
  return m;
}

ThetaMatrix random_theta(int d, Rng& rng) {
  const Eigen::MatrixXd a = random_matrix(d, d, rng);
  return ThetaMatrix(a - a.transpose());
}

Eigen::MatrixXd random_sp_generator(const Eigen::MatrixXd& omega, Rng& rng) {
  const int d = static_cast<int>(omega.rows());
  const Eigen::MatrixXd a = random_matrix(d, d, rng);
  const Eigen::MatrixXd A = omega * (a + a.transpose());
  return A / A.norm();
}

Eigen::Matrix2cd random_su2(Rng& rng) {
  std::normal_distribution<double> nd;
  Eigen::Vector4d q;
  for (int i = 0; i < 4; ++i) q[i] = nd(rng);
  q.normalize();
  Eigen::Matrix2cd g;
  g << cplx(q[0], q[1]), cplx(q[2], q[3]), cplx(-q[2], q[3]), cplx(q[0], -q[1]);
  return g;
}

}  // namespace ncsym
