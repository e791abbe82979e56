#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace ncsym {

using cplx = std::complex<double>;
using MultiIndex = std::vector<int>;

int degree(const MultiIndex& n);
// all multi-indices in d variables with |n| <= max_degree, graded then lexicographic
std::vector<MultiIndex> multi_indices(int d, int max_degree);

// Polynomial on S^{d-1}; the coefficient map is a representative, not a canonical form.
class SpherePoly {
 public:
  using Coeffs = std::map<MultiIndex, cplx>;

  explicit SpherePoly(int d);
  SpherePoly(int d, Coeffs coeffs);
  static SpherePoly constant(int d, cplx c);
  static SpherePoly monomial(const MultiIndex& n, cplx c = 1.0);
  // t_k, zero-based
  static SpherePoly coordinate(int d, int k);

  int dim() const { return d_; }
  const Coeffs& coeffs() const { return coeffs_; }
  int degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  void add_term(const MultiIndex& n, cplx c);

  cplx operator()(std::span<const double> t) const;
  cplx operator()(const Eigen::VectorXd& t) const { return (*this)(std::span<const double>(t.data(), static_cast<size_t>(t.size()))); }

  SpherePoly operator+(const SpherePoly& o) const;
  SpherePoly operator-(const SpherePoly& o) const;
  SpherePoly operator*(const SpherePoly& o) const;
  SpherePoly operator*(cplx c) const;
  SpherePoly& operator+=(const SpherePoly& o);

  SpherePoly conj() const;
  // d/dt_k of the polynomial extension
  SpherePoly partial(int k) const;
  SpherePoly times_coordinate(int k) const;

  // sup over the unit ball; also valid on the sphere
  double sup_bound() const;
  // Lipschitz constant of the extension on the unit ball (chordal on the sphere)
  double lipschitz_bound() const;

 private:
  void check_dim(const SpherePoly& o) const;
  int d_;
  Coeffs coeffs_;
};

inline SpherePoly operator*(cplx c, const SpherePoly& p) { return p * c; }

struct SphereFunction {
  int d;
  std::function<cplx(std::span<const double>)> eval;
  std::optional<double> lipschitz;

  cplx operator()(std::span<const double> t) const { return eval(t); }
};

SphereFunction as_function(const SpherePoly& p);

double sphere_volume(int d);
// exact integral of prod t_k^{n_k} over S^{d-1}, d = n.size()
double sphere_moment(const MultiIndex& n);
cplx sphere_integrate(const SpherePoly& b);

// Semantic comparison: zero on the sphere iff orthogonal to all monomials up to its degree.
// Returns the max of the moment defect and a sampled sup-norm.
double sphere_poly_distance(const SpherePoly& a, const SpherePoly& b, int samples = 256, unsigned seed = 7);

// (V_g b)(t) = |gt|^{-d} b(gt/|gt|)
SphereFunction vg_action(const Eigen::MatrixXd& g, const SphereFunction& b);
SphereFunction vg_action(const Eigen::MatrixXd& g, const SpherePoly& b);

// <grad b, At> - (<grad b, t> + d b) <At, t>, kept as a raw polynomial of degree <= deg b + 2
SpherePoly lie_action(const Eigen::MatrixXd& A, const SpherePoly& b);

// max over sampled t of |(V_{exp(sA)} b - b)(t)/s - (lie_action(A, b))(t)|
double lie_action_fd_error(const Eigen::MatrixXd& A, const SpherePoly& b, double s, int samples = 200,
                           unsigned seed = 5);

bool sp_algebra_membership(const Eigen::MatrixXd& A, const Eigen::MatrixXd& form, double tol = 1e-10);
bool sp_group_membership(const Eigen::MatrixXd& g, const Eigen::MatrixXd& form, double tol = 1e-10);
double sp_algebra_residual(const Eigen::MatrixXd& A, const Eigen::MatrixXd& form);
double sp_group_residual(const Eigen::MatrixXd& g, const Eigen::MatrixXd& form);

struct RecursionRow {
  MultiIndex n;
  double odd = 0.0;
  double first_reduction = 0.0;
  double main_reduction = 0.0;
};

struct RecursionReport {
  int d = 0;
  int max_degree = 0;
  std::vector<RecursionRow> rows;
  double max_odd = 0.0;
  double max_first = 0.0;
  double max_main = 0.0;
};

using MomentFn = std::function<double(const MultiIndex&)>;

// d must be even. l defaults to the exact moment functional.
RecursionReport moment_recursion_check(int d, int max_degree, const MomentFn& l = sphere_moment);

}  // namespace ncsym
