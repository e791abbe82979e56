#include "ncsym/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include <boost/math/special_functions/gamma.hpp>

namespace ncsym {

int degree(const MultiIndex& n) {
  int s = 0;
  for (int v : n) s += v;
  return s;
}

namespace {

void fill_indices(int d, int k, int remaining, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (k == d - 1) {
    cur[k] = remaining;
    out.push_back(cur);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur[k] = v;
    fill_indices(d, k + 1, remaining - v, cur, out);
  }
}

}  // namespace

std::vector<MultiIndex> multi_indices(int d, int max_degree) {
  std::vector<MultiIndex> out;
  MultiIndex cur(d, 0);
  for (int deg = 0; deg <= max_degree; ++deg) fill_indices(d, 0, deg, cur, out);
  return out;
}

SpherePoly::SpherePoly(int d) : d_(d) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
}

SpherePoly::SpherePoly(int d, Coeffs coeffs) : SpherePoly(d) {
  for (const auto& [n, c] : coeffs) add_term(n, c);
}

SpherePoly SpherePoly::constant(int d, cplx c) {
  SpherePoly p(d);
  p.add_term(MultiIndex(d, 0), c);
  return p;
}

SpherePoly SpherePoly::monomial(const MultiIndex& n, cplx c) {
  SpherePoly p(static_cast<int>(n.size()));
  p.add_term(n, c);
  return p;
}

SpherePoly SpherePoly::coordinate(int d, int k) {
  MultiIndex n(d, 0);
  n.at(k) = 1;
  return monomial(n);
}

int SpherePoly::degree() const {
  int m = 0;
  for (const auto& [n, c] : coeffs_) m = std::max(m, ncsym::degree(n));
  return m;
}

void SpherePoly::add_term(const MultiIndex& n, cplx c) {
  if (static_cast<int>(n.size()) != d_) throw std::invalid_argument("multi-index dimension mismatch");
  for (int v : n)
    if (v < 0) throw std::invalid_argument("negative exponent");
  cplx& v = coeffs_[n];
  v += c;
  if (std::abs(v) < 1e-15) coeffs_.erase(n);
}

cplx SpherePoly::operator()(std::span<const double> t) const {
  cplx s{};
  for (const auto& [n, c] : coeffs_) {
    double m = 1.0;
    for (int k = 0; k < d_; ++k)
      for (int e = 0; e < n[k]; ++e) m *= t[k];
    s += c * m;
  }
  return s;
}

void SpherePoly::check_dim(const SpherePoly& o) const {
  if (o.d_ != d_) throw std::invalid_argument("sphere polynomials of different dimension");
}

SpherePoly& SpherePoly::operator+=(const SpherePoly& o) {
  check_dim(o);
  for (const auto& [n, c] : o.coeffs_) add_term(n, c);
  return *this;
}

SpherePoly SpherePoly::operator+(const SpherePoly& o) const {
  SpherePoly r = *this;
  r += o;
  return r;
}

SpherePoly SpherePoly::operator-(const SpherePoly& o) const { return *this + o * cplx(-1.0); }

SpherePoly SpherePoly::operator*(cplx c) const {
  SpherePoly r(d_);
  for (const auto& [n, v] : coeffs_) r.add_term(n, v * c);
  return r;
}

SpherePoly SpherePoly::operator*(const SpherePoly& o) const {
  check_dim(o);
  SpherePoly r(d_);
  MultiIndex p(d_);
  for (const auto& [n, a] : coeffs_)
    for (const auto& [m, b] : o.coeffs_) {
      for (int k = 0; k < d_; ++k) p[k] = n[k] + m[k];
      r.add_term(p, a * b);
    }
  return r;
}

SpherePoly SpherePoly::conj() const {
  SpherePoly r(d_);
  for (const auto& [n, c] : coeffs_) r.add_term(n, std::conj(c));
  return r;
}

SpherePoly SpherePoly::partial(int k) const {
  SpherePoly r(d_);
  for (const auto& [n, c] : coeffs_) {
    if (n[k] == 0) continue;
    MultiIndex m = n;
    --m[k];
    r.add_term(m, c * static_cast<double>(n[k]));
  }
  return r;
}

SpherePoly SpherePoly::times_coordinate(int k) const {
  SpherePoly r(d_);
  for (const auto& [n, c] : coeffs_) {
    MultiIndex m = n;
    ++m[k];
    r.add_term(m, c);
  }
  return r;
}

double SpherePoly::sup_bound() const {
  double s = 0.0;
  for (const auto& [n, c] : coeffs_) s += std::abs(c);
  return s;
}

double SpherePoly::lipschitz_bound() const {
  double s = 0.0;
  for (const auto& [n, c] : coeffs_) {
    double q = 0.0;
    for (int v : n) q += static_cast<double>(v) * v;
    s += std::abs(c) * std::sqrt(q);
  }
  return s;
}

SphereFunction as_function(const SpherePoly& p) {
  return {p.dim(), [p](std::span<const double> t) { return p(t); }, p.lipschitz_bound()};
}

double sphere_volume(int d) {
  return 2.0 * std::pow(std::numbers::pi, 0.5 * d) / boost::math::tgamma(0.5 * d);
}

double sphere_moment(const MultiIndex& n) {
  const int d = static_cast<int>(n.size());
  if (d < 2) throw std::invalid_argument("sphere moments need d >= 2");
  double lg = 0.0;
  for (int v : n) {
    if (v < 0) throw std::invalid_argument("negative exponent");
    if (v % 2) return 0.0;
    lg += boost::math::lgamma(0.5 * (v + 1));
  }
  lg -= boost::math::lgamma(0.5 * (degree(n) + d));
  return 2.0 * std::exp(lg);
}

cplx sphere_integrate(const SpherePoly& b) {
  cplx s{};
  for (const auto& [n, c] : b.coeffs()) s += c * sphere_moment(n);
  return s;
}

double sphere_poly_distance(const SpherePoly& a, const SpherePoly& b, int samples, unsigned seed) {
  const SpherePoly diff = a - b;
  if (diff.is_zero()) return 0.0;
  const int d = diff.dim();
  double defect = 0.0;
  for (const auto& m : multi_indices(d, diff.degree()))
    defect = std::max(defect, std::abs(sphere_integrate(diff * SpherePoly::monomial(m))));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  std::vector<double> t(d);
  double sup = 0.0;
  for (int s = 0; s < samples; ++s) {
    double r = 0.0;
    for (auto& v : t) {
      v = nd(rng);
      r += v * v;
    }
    r = std::sqrt(r);
    for (auto& v : t) v /= r;
    sup = std::max(sup, std::abs(diff(t)));
  }
  return std::max(defect, sup);
}

SphereFunction vg_action(const Eigen::MatrixXd& g, const SphereFunction& b) {
  if (g.rows() != b.d || g.cols() != b.d) throw std::invalid_argument("matrix dimension mismatch");
  if (std::abs(g.determinant()) < 1e-12) throw std::invalid_argument("singular matrix in V_g");
  const int d = b.d;
  auto f = [g, b, d](std::span<const double> t) {
    Eigen::Map<const Eigen::VectorXd> tv(t.data(), d);
    Eigen::VectorXd gt = g * tv;
    const double r = gt.norm();
    gt /= r;
    return b.eval({gt.data(), static_cast<size_t>(d)}) * std::pow(r, -d);
  };
  return {d, f, std::nullopt};
}

SphereFunction vg_action(const Eigen::MatrixXd& g, const SpherePoly& b) { return vg_action(g, as_function(b)); }

SpherePoly lie_action(const Eigen::MatrixXd& A, const SpherePoly& b) {
  const int d = b.dim();
  if (A.rows() != d || A.cols() != d) throw std::invalid_argument("matrix dimension mismatch");
  // (At)_k as linear polynomials
  std::vector<SpherePoly> At(d, SpherePoly(d));
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < d; ++j)
      if (A(k, j) != 0.0) At[k] += SpherePoly::coordinate(d, j) * A(k, j);
  SpherePoly grad_At(d), grad_t(d), quad(d);
  for (int k = 0; k < d; ++k) {
    const SpherePoly pk = b.partial(k);
    grad_At += pk * At[k];
    grad_t += pk.times_coordinate(k);
    quad += At[k].times_coordinate(k);
  }
  return grad_At - (grad_t + b * static_cast<double>(d)) * quad;
}

double lie_action_fd_error(const Eigen::MatrixXd& A, const SpherePoly& b, double s, int samples, unsigned seed) {
  const int d = b.dim();
  const Eigen::MatrixXd g = Eigen::MatrixXd(s * A).exp();
  const SphereFunction vb = vg_action(g, b);
  const SpherePoly lb = lie_action(A, b);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  Eigen::VectorXd t(d);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    for (int k = 0; k < d; ++k) t[k] = nd(rng);
    t /= t.norm();
    const std::span<const double> ts(t.data(), static_cast<size_t>(d));
    worst = std::max(worst, std::abs((vb(ts) - b(ts)) / s - lb(ts)));
  }
  return worst;
}

double sp_algebra_residual(const Eigen::MatrixXd& A, const Eigen::MatrixXd& form) {
  if (A.rows() != form.rows() || A.cols() != form.cols() || A.rows() != A.cols())
    throw std::invalid_argument("dimension mismatch");
  return (form * A + A.transpose() * form).norm() / std::max(1.0, A.norm() * form.norm());
}

double sp_group_residual(const Eigen::MatrixXd& g, const Eigen::MatrixXd& form) {
  if (g.rows() != form.rows() || g.cols() != form.cols() || g.rows() != g.cols())
    throw std::invalid_argument("dimension mismatch");
  return (g.transpose() * form * g - form).norm() / std::max(1.0, g.squaredNorm() * form.norm());
}

bool sp_algebra_membership(const Eigen::MatrixXd& A, const Eigen::MatrixXd& form, double tol) {
  return sp_algebra_residual(A, form) < tol;
}

bool sp_group_membership(const Eigen::MatrixXd& g, const Eigen::MatrixXd& form, double tol) {
  return sp_group_residual(g, form) < tol;
}

RecursionReport moment_recursion_check(int d, int max_degree, const MomentFn& l) {
  if (d < 2 || d % 2) throw std::invalid_argument("recursion identities need even d");
  RecursionReport rep;
  rep.d = d;
  rep.max_degree = max_degree;
  for (const auto& n : multi_indices(d, max_degree)) {
    RecursionRow row;
    row.n = n;
    bool odd = false;
    for (int v : n) odd = odd || (v % 2);
    if (odd) row.odd = std::abs(l(n));
    const int nn = degree(n);
    for (int k = 0; k < d / 2; ++k) {
      MultiIndex a = n, b = n;
      a[2 * k] += 2;
      b[2 * k + 1] += 2;
      const double lhs = l(a);
      const double rhs = (n[2 * k] + 1.0) / (n[2 * k + 1] + 1.0) * l(b);
      row.first_reduction = std::max(row.first_reduction, std::abs(lhs - rhs));
    }
    const double ln = l(n);
    for (int k = 0; k < d; ++k) {
      MultiIndex a = n;
      a[k] += 2;
      const double rhs = (n[k] + 1.0) / (nn + d) * ln;
      row.main_reduction = std::max(row.main_reduction, std::abs(l(a) - rhs));
    }
    rep.max_odd = std::max(rep.max_odd, row.odd);
    rep.max_first = std::max(rep.max_first, row.first_reduction);
    rep.max_main = std::max(rep.max_main, row.main_reduction);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace ncsym
