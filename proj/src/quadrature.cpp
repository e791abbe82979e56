#include "ncsym/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/legendre.hpp>

#include "ncsym/summation.hpp"

namespace ncsym {

namespace {

constexpr double kPi = std::numbers::pi;

double radical_inverse(long i, int base) {
  double inv = 1.0 / base, f = inv, r = 0.0;
  while (i > 0) {
    r += f * (i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

}  // namespace

QuadratureRule QuadratureRule::coarsened() const {
  QuadratureRule r = *this;
  if (kind == QuadratureKind::Product)
    r.resolution = std::max(2, resolution / 2);
  else
    r.samples = std::max(1L, samples / 2);
  return r;
}

void gauss_legendre(int n, Eigen::VectorXd& x, Eigen::VectorXd& w) {
  if (n < 1) throw std::invalid_argument("Gauss-Legendre needs n >= 1");
  x.resize(n);
  w.resize(n);
  const auto zeros = boost::math::legendre_p_zeros<double>(n);  // nonnegative half
  int k = 0;
  auto put = [&](double z) {
    const double dp = boost::math::legendre_p_prime(n, z);
    x[k] = z;
    w[k] = 2.0 / ((1.0 - z * z) * dp * dp);
    ++k;
  };
  for (auto it = zeros.rbegin(); it != zeros.rend(); ++it)
    if (*it != 0.0) put(-*it);
  for (double z : zeros) put(z);
}

QuadratureNodes quadrature_nodes(int d, const QuadratureRule& rule) {
  QuadratureNodes q;
  q.d = d;
  if (rule.kind == QuadratureKind::Product) {
    const int n = rule.resolution;
    if (n < 1) throw std::invalid_argument("resolution must be positive");
    if (d == 2) {
      q.points.resize(2, n);
      q.weights.setConstant(n, 2.0 * kPi / n);
      for (int k = 0; k < n; ++k) {
        const double a = 2.0 * kPi * k / n;
        q.points.col(k) << std::cos(a), std::sin(a);
      }
    } else if (d == 3) {
      Eigen::VectorXd x, w;
      gauss_legendre(n, x, w);
      const int m = 2 * n;
      q.points.resize(3, static_cast<long>(n) * m);
      q.weights.resize(static_cast<long>(n) * m);
      long c = 0;
      for (int i = 0; i < n; ++i) {
        const double s = std::sqrt(std::max(0.0, 1.0 - x[i] * x[i]));
        for (int j = 0; j < m; ++j, ++c) {
          const double a = 2.0 * kPi * j / m;
          q.points.col(c) << x[i], s * std::cos(a), s * std::sin(a);
          q.weights[c] = w[i] * 2.0 * kPi / m;
        }
      }
    } else if (d == 4) {
      // t = (cos e cos a, cos e sin a, sin e cos b, sin e sin b), dS = sin e cos e de da db
      Eigen::VectorXd x, w;
      gauss_legendre(n, x, w);
      const long total = static_cast<long>(n) * n * n;
      q.points.resize(4, total);
      q.weights.resize(total);
      std::vector<double> ca(n), sa(n);
      for (int j = 0; j < n; ++j) {
        ca[j] = std::cos(2.0 * kPi * j / n);
        sa[j] = std::sin(2.0 * kPi * j / n);
      }
      const double dphi = 2.0 * kPi / n;
      long c = 0;
      for (int i = 0; i < n; ++i) {
        const double e = 0.25 * kPi * (x[i] + 1.0);
        const double ce = std::cos(e), se = std::sin(e);
        const double wi = w[i] * 0.25 * kPi * se * ce * dphi * dphi;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b, ++c) {
            q.points.col(c) << ce * ca[a], ce * sa[a], se * ca[b], se * sa[b];
            q.weights[c] = wi;
          }
      }
    } else {
      throw std::invalid_argument("product rule supports d = 2, 3, 4 only");
    }
    return q;
  }

  if (d < 2 || d > static_cast<int>(std::size(kPrimes))) throw std::invalid_argument("unsupported dimension for sampler");
  const long n = rule.samples;
  if (n < 1) throw std::invalid_argument("sample count must be positive");
  std::mt19937_64 rng(rule.seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::vector<double> shift(d);
  for (auto& s : shift) s = u01(rng);
  q.points.resize(d, n);
  q.weights.setConstant(n, sphere_volume(d) / n);
  for (long i = 0; i < n; ++i) {
    double r2 = 0.0;
    for (int k = 0; k < d; ++k) {
      double u = radical_inverse(i + 1, kPrimes[k]) + shift[k];
      u -= std::floor(u);
      u = std::clamp(u, 1e-16, 1.0 - 1e-16);
      const double z = std::numbers::sqrt2 * boost::math::erf_inv(2.0 * u - 1.0);
      q.points(k, i) = z;
      r2 += z * z;
    }
    q.points.col(i) /= std::sqrt(r2);
  }
  return q;
}

cplx weighted_sum(const Eigen::VectorXd& w, const std::function<cplx(long)>& f) {
  NeumaierSum<cplx> acc;
  for (long i = 0; i < w.size(); ++i) acc += w[i] * f(i);
  return acc.value();
}

QuadratureResult quadrature_integrate(const SphereFunction& f, const QuadratureRule& rule) {
  auto run = [&](const QuadratureRule& r) {
    const QuadratureNodes q = quadrature_nodes(f.d, r);
    return std::pair{weighted_sum(q.weights,
                                  [&](long i) {
                                    return f({q.points.col(i).data(), static_cast<size_t>(f.d)});
                                  }),
                     static_cast<long>(q.weights.size())};
  };
  const auto [fine, nodes] = run(rule);
  const auto [coarse, unused] = run(rule.coarsened());
  (void)unused;
  return {fine, std::abs(fine - coarse), nodes};
}

double invariance_residual(const Eigen::MatrixXd& g, const SpherePoly& b, const QuadratureRule& rule) {
  const QuadratureResult q = quadrature_integrate(vg_action(g, b), rule);
  return std::abs(q.value - sphere_integrate(b) / std::abs(g.determinant()));
}

}  // namespace ncsym
