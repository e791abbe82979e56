#include "ncsym/torus.hpp"

#include <cmath>
#include <numbers>

namespace ncsym {

ThetaMatrix::ThetaMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 2)
    throw ThetaError("theta must be square with d >= 2");
  if ((m_ + m_.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw ThetaError("theta is not antisymmetric");
}

ThetaMatrix ThetaMatrix::from_upper(int d, const std::vector<double>& upper) {
  if (d < 2) throw ThetaError("d must be >= 2");
  if (upper.size() != static_cast<size_t>(d * (d - 1) / 2))
    throw ThetaError("expected d(d-1)/2 upper-triangular entries");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  size_t k = 0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      m(i, j) = upper[k++];
      m(j, i) = -m(i, j);
    }
  return ThetaMatrix(m);
}

ThetaMatrix ThetaMatrix::zero(int d) { return ThetaMatrix(Eigen::MatrixXd::Zero(d, d)); }

double ThetaMatrix::form(std::span<const int> n, std::span<const int> m) const {
  const int d = dim();
  double s = 0.0;
  for (int i = 0; i < d; ++i) {
    if (n[i] == 0) continue;
    double r = 0.0;
    for (int j = 0; j < d; ++j) r += m_(i, j) * m[j];
    s += n[i] * r;
  }
  return s;
}

TorusElement::TorusElement(ThetaMatrix theta, double prune) : theta_(std::move(theta)), prune_(prune) {}

TorusElement::TorusElement(ThetaMatrix theta, Coeffs coeffs, double prune)
    : theta_(std::move(theta)), coeffs_(std::move(coeffs)), prune_(prune) {
  for (const auto& [n, c] : coeffs_)
    if (static_cast<int>(n.size()) != dim()) throw std::invalid_argument("index dimension mismatch");
  this->prune();
}

TorusElement TorusElement::unit(const ThetaMatrix& theta, const IVec& n, cplx c) {
  TorusElement x(theta);
  x.add_term(n, c);
  return x;
}

TorusElement TorusElement::scalar(const ThetaMatrix& theta, cplx c) {
  return unit(theta, IVec(theta.dim(), 0), c);
}

cplx TorusElement::coeff(const IVec& n) const {
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? cplx{} : it->second;
}

double TorusElement::support_radius() const {
  double r = 0.0;
  for (const auto& [n, c] : coeffs_) r = std::max(r, std::sqrt(torus_laplacian_eigenvalue(n)));
  return r;
}

void TorusElement::add_term(const IVec& n, cplx c) {
  if (static_cast<int>(n.size()) != dim()) throw std::invalid_argument("index dimension mismatch");
  cplx& v = coeffs_[n];
  v += c;
  if (std::abs(v) < prune_) coeffs_.erase(n);
}

void TorusElement::check_same(const TorusElement& o) const {
  if (!(theta_ == o.theta_)) throw ThetaError("elements over different theta");
}

void TorusElement::prune() {
  std::erase_if(coeffs_, [this](const auto& kv) { return std::abs(kv.second) < prune_; });
}

TorusElement TorusElement::operator+(const TorusElement& o) const {
  TorusElement r = *this;
  r += o;
  return r;
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  check_same(o);
  for (const auto& [n, c] : o.coeffs_) add_term(n, c);
  return *this;
}

TorusElement TorusElement::operator-(const TorusElement& o) const { return *this + o * cplx(-1.0); }

TorusElement TorusElement::operator*(cplx c) const {
  TorusElement r(theta_, prune_);
  for (const auto& [n, v] : coeffs_) r.add_term(n, v * c);
  return r;
}

TorusElement TorusElement::operator*(const TorusElement& o) const { return torus_mul(*this, o); }

double TorusElement::coeff_norm() const {
  double s = 0.0;
  for (const auto& [n, c] : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

TorusElement torus_mul(const TorusElement& x, const TorusElement& y) {
  if (!(x.theta() == y.theta())) throw ThetaError("elements over different theta");
  const int d = x.dim();
  TorusElement::Coeffs acc;
  IVec p(d);
  for (const auto& [n, a] : x.coeffs())
    for (const auto& [m, b] : y.coeffs()) {
      for (int k = 0; k < d; ++k) p[k] = n[k] + m[k];
      acc[p] += a * b * std::polar(1.0, 0.5 * x.theta().form(n, m));
    }
  return TorusElement(x.theta(), std::move(acc), std::min(x.prune_threshold(), y.prune_threshold()));
}

TorusElement torus_adjoint(const TorusElement& x) {
  TorusElement r(x.theta(), x.prune_threshold());
  for (const auto& [n, c] : x.coeffs()) {
    IVec m(n);
    for (int& v : m) v = -v;
    r.add_term(m, std::conj(c));
  }
  return r;
}

cplx torus_trace(const TorusElement& x) { return x.coeff(IVec(x.dim(), 0)); }

TorusElement torus_derivation(int j, const TorusElement& x) {
  if (j < 0 || j >= x.dim()) throw std::out_of_range("derivation index out of range");
  TorusElement r(x.theta(), x.prune_threshold());
  for (const auto& [n, c] : x.coeffs()) r.add_term(n, c * cplx(0.0, n[j]));
  return r;
}

double torus_laplacian_eigenvalue(std::span<const int> n) {
  long long s = 0;
  for (int v : n) s += static_cast<long long>(v) * v;
  return static_cast<double>(s);
}

TorusElement torus_translate(const TorusElement& x, const Eigen::VectorXd& t) {
  if (t.size() != x.dim()) throw std::invalid_argument("translation dimension mismatch");
  TorusElement r(x.theta(), x.prune_threshold());
  for (const auto& [n, c] : x.coeffs()) {
    double ph = 0.0;
    for (int k = 0; k < x.dim(); ++k) ph += n[k] * t[k];
    r.add_term(n, c * std::polar(1.0, ph));
  }
  return r;
}

cplx torus_translate_average(const TorusElement& x) {
  return std::pow(2.0 * std::numbers::pi, x.dim()) * torus_trace(x);
}

double torus_distance(const TorusElement& a, const TorusElement& b) {
  double m = 0.0;
  const TorusElement diff = a - b;
  for (const auto& [n, c] : diff.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

nlohmann::json to_json(const TorusElement& x) {
  nlohmann::json j;
  j["d"] = x.dim();
  nlohmann::json th = nlohmann::json::array();
  for (int i = 0; i < x.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < x.dim(); ++k) row.push_back(x.theta()(i, k));
    th.push_back(row);
  }
  j["theta"] = th;
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& [n, c] : x.coeffs()) cs.push_back({{"n", n}, {"re", c.real()}, {"im", c.imag()}});
  j["coeffs"] = cs;
  return j;
}

TorusElement torus_from_json(const nlohmann::json& j) {
  const int d = j.at("d").get<int>();
  Eigen::MatrixXd m(d, d);
  const auto& th = j.at("theta");
  if (th.size() != static_cast<size_t>(d)) throw std::invalid_argument("theta has wrong shape");
  for (int i = 0; i < d; ++i) {
    if (th[i].size() != static_cast<size_t>(d)) throw std::invalid_argument("theta has wrong shape");
    for (int k = 0; k < d; ++k) m(i, k) = th[i][k].get<double>();
  }
  TorusElement x{ThetaMatrix(m)};
  for (const auto& c : j.at("coeffs"))
    x.add_term(c.at("n").get<IVec>(), cplx(c.at("re").get<double>(), c.value("im", 0.0)));
  return x;
}

}  // namespace ncsym
