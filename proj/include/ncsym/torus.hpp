#pragma once

#include <complex>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include "json.hpp"

namespace ncsym {

using cplx = std::complex<double>;
using IVec = std::vector<int>;

class ThetaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Real antisymmetric d x d matrix.
class ThetaMatrix {
 public:
  explicit ThetaMatrix(Eigen::MatrixXd m);
  // entries theta_{ij}, i < j, row by row
  static ThetaMatrix from_upper(int d, const std::vector<double>& upper);
  static ThetaMatrix zero(int d);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXd& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  // (n, theta m)
  double form(std::span<const int> n, std::span<const int> m) const;
  double form(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const { return a.dot(m_ * b); }

  bool operator==(const ThetaMatrix& o) const { return m_ == o.m_; }

 private:
  Eigen::MatrixXd m_;
};

class TorusElement {
 public:
  using Coeffs = std::map<IVec, cplx>;
  static constexpr double kDefaultPrune = 1e-15;

  explicit TorusElement(ThetaMatrix theta, double prune = kDefaultPrune);
  TorusElement(ThetaMatrix theta, Coeffs coeffs, double prune = kDefaultPrune);

  static TorusElement unit(const ThetaMatrix& theta, const IVec& n, cplx c = 1.0);
  static TorusElement scalar(const ThetaMatrix& theta, cplx c);

  int dim() const { return theta_.dim(); }
  const ThetaMatrix& theta() const { return theta_; }
  const Coeffs& coeffs() const { return coeffs_; }
  double prune_threshold() const { return prune_; }
  cplx coeff(const IVec& n) const;
  bool empty() const { return coeffs_.empty(); }
  // max |n|_2 over the support
  double support_radius() const;

  void add_term(const IVec& n, cplx c);

  TorusElement operator+(const TorusElement& o) const;
  TorusElement operator-(const TorusElement& o) const;
  TorusElement operator*(const TorusElement& o) const;
  TorusElement operator*(cplx c) const;
  TorusElement& operator+=(const TorusElement& o);

  // l2 norm of coefficients
  double coeff_norm() const;

 private:
  void check_same(const TorusElement& o) const;
  void prune();

  ThetaMatrix theta_;
  Coeffs coeffs_;
  double prune_;
};

inline TorusElement operator*(cplx c, const TorusElement& x) { return x * c; }

TorusElement torus_mul(const TorusElement& x, const TorusElement& y);
TorusElement torus_adjoint(const TorusElement& x);
cplx torus_trace(const TorusElement& x);
// j is zero-based
TorusElement torus_derivation(int j, const TorusElement& x);
double torus_laplacian_eigenvalue(std::span<const int> n);
TorusElement torus_translate(const TorusElement& x, const Eigen::VectorXd& t);
cplx torus_translate_average(const TorusElement& x);

// max coefficientwise distance
double torus_distance(const TorusElement& a, const TorusElement& b);

nlohmann::json to_json(const TorusElement& x);
TorusElement torus_from_json(const nlohmann::json& j);

}  // namespace ncsym
