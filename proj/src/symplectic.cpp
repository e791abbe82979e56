#include "ncsym/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "ncsym/lattice.hpp"
#include "ncsym/summation.hpp"

namespace ncsym {

Eigen::MatrixXd omega(int d) {
  if (d < 2 || d % 2) throw std::invalid_argument("symplectic form needs even d");
  Eigen::MatrixXd o = Eigen::MatrixXd::Zero(d, d);
  for (int k = 0; k < d; k += 2) {
    o(k, k + 1) = 1.0;
    o(k + 1, k) = -1.0;
  }
  return o;
}

NormalForm antisymmetric_normal_form(const Eigen::MatrixXd& theta) {
  const int d = static_cast<int>(theta.rows());
  if (theta.cols() != d || d % 2) throw std::invalid_argument("theta must be square of even size");
  if ((theta + theta.transpose()).cwiseAbs().maxCoeff() > 1e-12) throw std::invalid_argument("theta is not antisymmetric");
  if (std::abs(theta.determinant()) <= 1e-12) throw std::invalid_argument("theta is singular");

  Eigen::RealSchur<Eigen::MatrixXd> schur(theta);
  Eigen::MatrixXd Q = schur.matrixU();
  const Eigen::MatrixXd T = schur.matrixT();
  Eigen::VectorXd scale(d);
  int k = 0;
  while (k < d) {
    if (k + 1 >= d || std::abs(T(k + 1, k)) < 1e-14) throw std::invalid_argument("theta is numerically singular");
    double a = T(k, k + 1);
    if (a < 0.0) {
      Q.col(k).swap(Q.col(k + 1));
      a = -a;
    }
    scale[k] = scale[k + 1] = 1.0 / std::sqrt(a);
    k += 2;
  }
  NormalForm nf;
  nf.beta = Q * scale.asDiagonal();
  nf.residual = (nf.beta.transpose() * theta * nf.beta - omega(d)).norm();
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(nf.beta);
  nf.condition = svd.singularValues()(0) / svd.singularValues()(d - 1);
  nf.beta_beta_t = nf.beta * nf.beta.transpose();
  return nf;
}

Eigen::MatrixXd sp_theta_conjugate(const Eigen::MatrixXd& g, const NormalForm& nf, const Eigen::MatrixXd& theta) {
  const int d = static_cast<int>(g.rows());
  if (!sp_group_membership(g, omega(d), 1e-9)) throw std::invalid_argument("g is not in Sp(Omega)");
  const Eigen::MatrixXd h = nf.beta * g * nf.beta.inverse();
  if (!sp_group_membership(h, theta, 1e-9)) throw std::runtime_error("conjugate left Sp(theta)");
  return h;
}

Eigen::MatrixXd random_nondegenerate_theta(int d, Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  const Eigen::MatrixXd Q = Eigen::HouseholderQR<Eigen::MatrixXd>(random_matrix(d, d, rng)).householderQ();
  Eigen::MatrixXd o = omega(d);
  for (int k = 0; k < d; k += 2) {
    const double l = u(rng);
    o(k, k + 1) = l;
    o(k + 1, k) = -l;
  }
  Eigen::MatrixXd th = Q * o * Q.transpose();
  return 0.5 * (th - th.transpose());
}

Eigen::MatrixXd random_sp_element(int d, double s, Rng& rng) {
  const Eigen::MatrixXd A = random_sp_generator(omega(d), rng);
  return Eigen::MatrixXd(s * A).exp();
}

std::vector<double> vg_moments(const Eigen::MatrixXd& g, const std::vector<MultiIndex>& monomials,
                               const QuadratureNodes& nodes) {
  const int d = nodes.d;
  int maxdeg = 0;
  for (const auto& n : monomials) maxdeg = std::max(maxdeg, degree(n));
  std::vector<NeumaierSum<double>> acc(monomials.size());
  Eigen::MatrixXd pw(d, maxdeg + 1);
  Eigen::VectorXd gt(d);
  for (long i = 0; i < nodes.weights.size(); ++i) {
    gt.noalias() = g * nodes.points.col(i);
    const double r = gt.norm();
    const double w = nodes.weights[i] * std::pow(r, -d);
    for (int k = 0; k < d; ++k) {
      pw(k, 0) = 1.0;
      const double u = gt[k] / r;
      for (int e = 1; e <= maxdeg; ++e) pw(k, e) = pw(k, e - 1) * u;
    }
    for (size_t j = 0; j < monomials.size(); ++j) {
      double v = w;
      for (int k = 0; k < d; ++k) v *= pw(k, monomials[j][k]);
      acc[j] += v;
    }
  }
  std::vector<double> out;
  for (const auto& a : acc) out.push_back(a.value());
  return out;
}

SpInvarianceReport sp_invariant_functional_check(const Eigen::MatrixXd& theta, int degree, const QuadratureRule& rule,
                                                 int group_samples, std::uint64_t seed, double step) {
  const int d = static_cast<int>(theta.rows());
  const NormalForm nf = antisymmetric_normal_form(theta);
  const auto mons = multi_indices(d, degree);
  const QuadratureNodes nodes = quadrature_nodes(d, rule);
  std::vector<double> exact;
  for (const auto& n : mons) exact.push_back(sphere_moment(n));
  Rng rng(seed);
  SpInvarianceReport rep;
  rep.d = d;
  rep.degree = degree;
  rep.nodes = nodes.weights.size();
  for (int s = 0; s < group_samples; ++s) {
    const Eigen::MatrixXd h = sp_theta_conjugate(random_sp_element(d, step, rng), nf, theta);
    rep.max_det_defect = std::max(rep.max_det_defect, std::abs(std::abs(h.determinant()) - 1.0));
    const auto q = vg_moments(h, mons, nodes);
    double worst = 0.0;
    for (size_t j = 0; j < mons.size(); ++j) worst = std::max(worst, std::abs(q[j] - exact[j]));
    rep.per_g_max.push_back(worst);
    rep.max_residual = std::max(rep.max_residual, worst);
  }
  return rep;
}

cplx ccr_phase(const Eigen::VectorXd& t, const Eigen::VectorXd& s, const Eigen::MatrixXd& theta) {
  return std::polar(1.0, 0.5 * t.dot(theta * s));
}

namespace {

std::vector<long> grid_steps(const Eigen::VectorXd& t, double h) {
  std::vector<long> k(t.size());
  for (int i = 0; i < t.size(); ++i) {
    const double q = t[i] / h;
    k[i] = std::lround(q);
    if (std::abs(q - k[i]) > 1e-9) throw std::invalid_argument("shift is not grid aligned");
  }
  return k;
}

}  // namespace

double ccr_phase_residual(const Eigen::VectorXd& t, const Eigen::VectorXd& s, const Eigen::MatrixXd& theta,
                          const Grid& grid, std::uint64_t seed, int vectors) {
  const int d = grid.d;
  if (t.size() != d || s.size() != d || theta.rows() != d) throw std::invalid_argument("dimension mismatch");
  const long K = grid.half_width, side = 2 * K + 1;
  long total = 1;
  for (int k = 0; k < d; ++k) total *= side;
  const auto kt = grid_steps(t, grid.h);
  const auto ks = grid_steps(s, grid.h);
  const Eigen::VectorXd ts = t + s;

  auto coords = [&](long idx, std::vector<long>& c) {
    for (int k = d - 1; k >= 0; --k) {
      c[k] = idx % side - K;
      idx /= side;
    }
  };
  auto flat = [&](const std::vector<long>& c) -> long {
    long idx = 0;
    for (int k = 0; k < d; ++k) {
      if (c[k] < -K || c[k] > K) return -1;
      idx = idx * side + (c[k] + K);
    }
    return idx;
  };
  // (U(a) xi)(u) = e^{(i/2)(a, theta u)} xi(u - a), zero outside the window.
  // With the opposite sign the product picks up e^{-(i/2)(t, theta s)} instead.
  auto apply = [&](const Eigen::VectorXd& a, const std::vector<long>& ka, const Eigen::VectorXcd& xi) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(total);
    std::vector<long> c(d), src(d);
    Eigen::VectorXd u(d);
    for (long i = 0; i < total; ++i) {
      coords(i, c);
      for (int k = 0; k < d; ++k) {
        src[k] = c[k] - ka[k];
        u[k] = c[k] * grid.h;
      }
      const long j = flat(src);
      if (j >= 0) out[i] = std::polar(1.0, 0.5 * a.dot(theta * u)) * xi[j];
    }
    return out;
  };

  std::vector<long> kts(d);
  for (int k = 0; k < d; ++k) kts[k] = kt[k] + ks[k];
  const cplx phase = ccr_phase(t, s, theta);
  Rng rng(seed);
  std::uniform_real_distribution<double> ph(0.0, 2.0 * std::numbers::pi);
  double worst = 0.0;
  for (int v = 0; v < vectors; ++v) {
    Eigen::VectorXcd xi(total);
    for (long i = 0; i < total; ++i) xi[i] = std::polar(1.0, ph(rng));
    const Eigen::VectorXcd lhs = apply(t, kt, apply(s, ks, xi));
    const Eigen::VectorXcd rhs = phase * apply(ts, kts, xi);
    std::vector<long> c(d), a(d), b(d);
    for (long i = 0; i < total; ++i) {
      coords(i, c);
      for (int k = 0; k < d; ++k) {
        a[k] = c[k] - kt[k];
        b[k] = a[k] - ks[k];
      }
      if (flat(a) < 0 || flat(b) < 0) continue;
      worst = std::max(worst, std::abs(lhs[i] - rhs[i]));
    }
  }
  return worst;
}

double multiplier_identity_residual(const Eigen::MatrixXd& g, const SpherePoly& b, int samples, std::uint64_t seed) {
  const int d = b.dim();
  if (g.rows() != d || g.cols() != d) throw std::invalid_argument("dimension mismatch");
  if (std::abs(g.determinant()) < 1e-12) throw std::invalid_argument("singular matrix");
  const SphereFunction vgb = vg_action(g, b);
  Rng rng(seed);
  std::normal_distribution<double> nd;
  std::uniform_real_distribution<double> lr(-3.0, 3.0);
  double worst = 0.0;
  Eigen::VectorXd t(d);
  for (int s = 0; s < samples; ++s) {
    for (int k = 0; k < d; ++k) t[k] = nd(rng);
    t *= std::pow(10.0, lr(rng)) / t.norm();
    const Eigen::VectorXd gt = g * t;
    const double ngt = gt.norm(), nt = t.norm();
    const double damp = std::pow(1.0 + ngt * ngt, -0.5 * d);
    const Eigen::VectorXd u = gt / ngt;
    const Eigen::VectorXd that = t / nt;
    const cplx lhs = b(u) * damp;
    const cplx rhs = vgb({that.data(), static_cast<size_t>(d)}) * std::pow(ngt / nt, d) * damp;
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

double h_function(const Eigen::MatrixXd& g, const Eigen::VectorXd& t) {
  const int d = static_cast<int>(t.size());
  const double r2 = t.squaredNorm();
  const double q2 = (g * t).squaredNorm();
  // |t|^{-d} [ (1+|gt|^{-2})^{-d/2} - (1+|t|^{-2})^{-d/2} ]
  const double a = -0.5 * d * std::log1p(1.0 / q2);
  const double b = -0.5 * d * std::log1p(1.0 / r2);
  return std::pow(r2, -0.5 * d) * std::exp(b) * std::expm1(a - b);
}

double riesz_difference(int k, const Eigen::VectorXd& t) {
  const double r = t.norm();
  const double q = std::sqrt(1.0 + r * r);
  return t[k] / (r * q * (r + q));
}

bool DecayProfile::bounded() const {
  if (profile.size() < 2) return true;
  const size_t n = profile.size();
  const double first = std::max(profile[0], profile[std::min<size_t>(1, n - 1)]);
  const double last = std::max(profile[n - 1], profile[n >= 2 ? n - 2 : 0]);
  return last <= 1.05 * first;
}

DecayProfile h_decay_profile(const Eigen::MatrixXd& g, const std::vector<double>& shell_radii, int samples,
                             std::uint64_t seed) {
  const int d = static_cast<int>(g.rows());
  Rng rng(seed);
  std::normal_distribution<double> nd;
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  DecayProfile p;
  p.radii = shell_radii;
  Eigen::VectorXd t(d);
  for (double R : shell_radii) {
    double sup = 0.0;
    for (int s = 0; s < samples; ++s) {
      for (int k = 0; k < d; ++k) t[k] = nd(rng);
      const double r = R * (1.0 + u01(rng));
      t *= r / t.norm();
      sup = std::max(sup, std::abs(h_function(g, t)) * std::pow(r, d + 2));
    }
    p.profile.push_back(sup);
  }
  return p;
}

std::vector<double> h_cell_sums(const Eigen::MatrixXd& g, const std::vector<double>& radii) {
  const int d = static_cast<int>(g.rows());
  if (radii.empty()) return {};
  for (size_t i = 1; i < radii.size(); ++i)
    if (!(radii[i] > radii[i - 1])) throw std::invalid_argument("radii must increase");
  std::vector<NeumaierSum<double>> bucket(radii.size());
  const double reach = radii.back() + std::sqrt(static_cast<double>(d));
  const long long hi2 = static_cast<long long>(std::ceil(reach * reach));
  Eigen::VectorXd c(d), t(d);
  const int corners = 1 << d;
  for_each_lattice_point(d, -1, hi2, [&](std::span<const int> m, long long) {
    for (int k = 0; k < d; ++k) c[k] = m[k] + 0.5;
    const double rc = c.norm();
    const size_t b = std::lower_bound(radii.begin(), radii.end(), rc) - radii.begin();
    if (b >= radii.size()) return;
    double sup = std::abs(h_function(g, c));
    for (int mask = 0; mask < corners; ++mask) {
      for (int k = 0; k < d; ++k) t[k] = m[k] + ((mask >> k) & 1 ? 0.75 : 0.25);
      sup = std::max(sup, std::abs(h_function(g, t)));
    }
    bucket[b] += sup;
  });
  std::vector<double> out;
  double s = 0.0;
  for (const auto& b : bucket) {
    s += b.value();
    out.push_back(s);
  }
  return out;
}

DecayProfile riesz_difference_decay(int k, int d, const std::vector<double>& radii, int samples, std::uint64_t seed) {
  if (k < 0 || k >= d) throw std::out_of_range("k out of range");
  Rng rng(seed);
  std::normal_distribution<double> nd;
  std::vector<Eigen::VectorXd> dirs;
  for (double sgn : {1.0, -1.0}) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(d);
    e[k] = sgn;
    dirs.push_back(e);
  }
  for (int s = 0; s < samples; ++s) {
    Eigen::VectorXd v(d);
    for (int j = 0; j < d; ++j) v[j] = nd(rng);
    dirs.push_back(v / v.norm());
  }
  DecayProfile p;
  p.radii = radii;
  for (double R : radii) {
    double sup = 0.0;
    for (const auto& w : dirs) sup = std::max(sup, std::abs(riesz_difference(k, R * w)) * R * R);
    p.profile.push_back(sup);
  }
  return p;
}

}  // namespace ncsym
