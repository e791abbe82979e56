#include "ncsym/su2.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/special_functions/beta.hpp>
#include <unsupported/Eigen/MatrixFunctions>

namespace ncsym {

namespace {

using Trip = Eigen::Triplet<cplx>;

SpMat from_triplets(int n, const std::vector<Trip>& t) {
  SpMat m(n, n);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

Eigen::MatrixXcd unitary_exp(const Eigen::MatrixXcd& H, double s) {
  // exp(i s H) for Hermitian H
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
  const Eigen::VectorXcd ph = (es.eigenvalues() * s).unaryExpr([](double a) { return std::polar(1.0, a); });
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

double op_norm(const Eigen::MatrixXcd& M) {
  if (M.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
  return svd.singularValues()[0];
}

}  // namespace

HalfInteger HalfInteger::from_double(double l) {
  const double t = 2.0 * l;
  const long r = std::lround(t);
  if (l < 0 || std::abs(t - r) > 1e-9) throw std::invalid_argument("l must be a nonnegative half-integer");
  return {static_cast<int>(r)};
}

IrrepBlock build_block(HalfInteger l) {
  if (l.twice < 0) throw std::invalid_argument("negative spin");
  IrrepBlock B;
  B.l = l;
  const int n = l.twice + 1;
  B.dim = n;
  B.peter_weyl_weight = static_cast<long long>(n) * n;
  const double lv = l.value();
  B.laplacian_eig = lv * (lv + 1.0);
  if (l.twice == 0) {
    for (int k = 0; k < 3; ++k) {
      B.D[k] = from_triplets(1, {});
      B.b[k] = from_triplets(1, {Trip(0, 0, 1.0 / std::sqrt(3.0))});
    }
    return B;
  }
  // basis index i carries m = l - i
  std::vector<Trip> z, x, y;
  for (int i = 0; i < n; ++i) {
    const double m = lv - i;
    z.emplace_back(i, i, 2.0 * m);
    if (i > 0) {
      // J+ e_i = c e_{i-1}
      const double c = std::sqrt(lv * (lv + 1.0) - m * (m + 1.0));
      x.emplace_back(i - 1, i, c);
      x.emplace_back(i, i - 1, c);
      y.emplace_back(i - 1, i, cplx(0.0, -c));
      y.emplace_back(i, i - 1, cplx(0.0, c));
    }
  }
  // D1 = 2Jz, D2 = 2Jx, D3 = 2Jy
  B.D[0] = from_triplets(n, z);
  B.D[1] = from_triplets(n, x);
  B.D[2] = from_triplets(n, y);
  const double scale = 1.0 / std::sqrt(4.0 * B.laplacian_eig);
  for (int k = 0; k < 3; ++k) B.b[k] = B.D[k] * cplx(scale);
  return B;
}

BWord BWord::identity() {
  BWord w;
  w.add_term({}, 1.0);
  return w;
}

BWord BWord::letter(int k) {
  if (k < 0 || k > 2) throw std::out_of_range("letter index must be 0, 1 or 2");
  BWord w;
  w.add_term({k}, 1.0);
  return w;
}

BWord BWord::parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') t += c;
  if (t == "1") return identity();
  if (t.empty()) throw std::invalid_argument("empty word");
  std::vector<int> letters;
  size_t i = 0;
  while (i < t.size()) {
    if (t[i] != 'b' || i + 1 >= t.size() || t[i + 1] < '1' || t[i + 1] > '3')
      throw std::invalid_argument("malformed word: " + s);
    const int k = t[i + 1] - '1';
    i += 2;
    int p = 1;
    if (i < t.size() && t[i] == '^') {
      size_t used = 0;
      p = std::stoi(t.substr(i + 1), &used);
      if (p < 0) throw std::invalid_argument("negative power in word");
      i += 1 + used;
    }
    letters.insert(letters.end(), p, k);
  }
  BWord w;
  w.add_term(letters, 1.0);
  return w;
}

void BWord::add_term(const std::vector<int>& letters, cplx c) {
  for (int k : letters)
    if (k < 0 || k > 2) throw std::out_of_range("letter index must be 0, 1 or 2");
  cplx& v = terms_[letters];
  v += c;
  if (std::abs(v) == 0.0) terms_.erase(letters);
}

BWord BWord::operator+(const BWord& o) const {
  BWord r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

BWord BWord::operator*(cplx c) const {
  BWord r;
  for (const auto& [w, v] : terms_) r.add_term(w, v * c);
  return r;
}

BWord BWord::operator-(const BWord& o) const { return *this + o * cplx(-1.0); }

BWord BWord::operator*(const BWord& o) const {
  BWord r;
  for (const auto& [a, x] : terms_)
    for (const auto& [b, y] : o.terms_) {
      std::vector<int> w = a;
      w.insert(w.end(), b.begin(), b.end());
      r.add_term(w, x * y);
    }
  return r;
}

SpMat evaluate(const BWord& w, const IrrepBlock& block) {
  SpMat out(block.dim, block.dim);
  SpMat id(block.dim, block.dim);
  id.setIdentity();
  for (const auto& [letters, c] : w.terms()) {
    SpMat p = id;
    for (int k : letters) p = SpMat(p * block.b[k]);
    out += p * c;
  }
  return out;
}

double block_commutator_norm(const IrrepBlock& block, int j, int k) {
  if (j == k) return 0.0;
  const Eigen::MatrixXcd C = Eigen::MatrixXcd(SpMat(block.b[j] * block.b[k] - block.b[k] * block.b[j]));
  // i C is Hermitian
  const Eigen::MatrixXcd H = cplx(0.0, 1.0) * C;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

const std::array<Eigen::Matrix2cd, 3>& pauli() {
  static const std::array<Eigen::Matrix2cd, 3> s = [] {
    const cplx I(0.0, 1.0);
    std::array<Eigen::Matrix2cd, 3> m;
    m[0] << 1.0, 0.0, 0.0, -1.0;
    m[1] << 0.0, -I, I, 0.0;
    m[2] << 0.0, 1.0, 1.0, 0.0;
    return m;
  }();
  return s;
}

Eigen::Matrix3d eta(const Eigen::Matrix2cd& g) {
  if ((g.adjoint() * g - Eigen::Matrix2cd::Identity()).norm() > 1e-10 || std::abs(g.determinant() - 1.0) > 1e-10)
    throw std::invalid_argument("eta needs a special unitary matrix");
  const auto& s = pauli();
  Eigen::Matrix3d e;
  for (int j = 0; j < 3; ++j) {
    const Eigen::Matrix2cd c = g * s[j] * g.adjoint();
    for (int k = 0; k < 3; ++k) e(k, j) = 0.5 * (s[k] * c).trace().real();
  }
  return e;
}

double conjugation_covariance_check(const IrrepBlock& block, int j, double s) {
  const cplx I(0.0, 1.0);
  const Eigen::Matrix2cd g = (I * s * pauli()[j]).exp();
  const Eigen::Matrix3d E = eta(g);
  const Eigen::MatrixXcd U = unitary_exp(block.dense_D(j), -s);
  double worst = 0.0;
  for (int k = 0; k < 3; ++k) {
    Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(block.dim, block.dim);
    for (int m = 0; m < 3; ++m) rhs += E(m, k) * block.dense_D(m);
    worst = std::max(worst, op_norm(U * block.dense_D(k) * U.adjoint() - rhs));
  }
  return worst;
}

Eigen::MatrixXcd block_conditional_expectation(const IrrepBlock& block, const Eigen::MatrixXcd& M) {
  if (M.rows() != block.dim || M.cols() != block.dim) throw std::invalid_argument("matrix does not match the block");
  return M.diagonal().asDiagonal();
}

double beta_coefficient(int n2, int n3) {
  if (n2 % 2 || n3 % 2) return 0.0;
  return boost::math::beta(0.5 * (n2 + 1), 0.5 * (n3 + 1)) / std::numbers::pi;
}

double beta_formula_residual(HalfInteger l, int n1, int n2, int n3) {
  if (n1 < 0 || n2 < 0 || n3 < 0) throw std::invalid_argument("negative exponent");
  const IrrepBlock B = build_block(l);
  BWord w;
  std::vector<int> letters;
  letters.insert(letters.end(), n1, 0);
  letters.insert(letters.end(), n2, 1);
  letters.insert(letters.end(), n3, 2);
  w.add_term(letters, 1.0);
  const SpMat X = evaluate(w, B);
  const double c = beta_coefficient(n2, n3);
  double r = 0.0;
  for (int i = 0; i < B.dim; ++i) {
    const double x = B.b[0].coeff(i, i).real();
    const double model = c * std::pow(x, n1) * std::pow(std::max(0.0, 1.0 - x * x), 0.5 * (n2 + n3));
    r = std::max(r, std::abs(X.coeff(i, i) - model));
  }
  return r;
}

SpherePoly su2_symbol(const BWord& w) {
  SpherePoly p(3);
  for (const auto& [letters, c] : w.terms()) {
    MultiIndex n(3, 0);
    for (int k : letters) ++n[k];
    p.add_term(n, c);
  }
  return p;
}

std::vector<NormGap> block_norm_vs_symbol(const std::vector<HalfInteger>& l_list, const BWord& w) {
  const SpherePoly p = su2_symbol(w);
  double sup = 0.0;
  const int nt = 400, nf = 800;
  for (int i = 0; i <= nt; ++i) {
    const double th = std::numbers::pi * i / nt;
    for (int j = 0; j < nf; ++j) {
      const double ph = 2.0 * std::numbers::pi * j / nf;
      const double t[3] = {std::cos(th), std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph)};
      sup = std::max(sup, std::abs(p(t)));
    }
  }
  for (int k = 0; k < 3; ++k)
    for (double sgn : {-1.0, 1.0}) {
      double t[3] = {0.0, 0.0, 0.0};
      t[k] = sgn;
      sup = std::max(sup, std::abs(p(t)));
    }
  std::vector<NormGap> out;
  for (const auto& l : l_list) {
    const IrrepBlock B = build_block(l);
    const double nrm = op_norm(Eigen::MatrixXcd(evaluate(w, B)));
    out.push_back({l, nrm, sup, std::abs(nrm - sup)});
  }
  return out;
}

Su2Ratio su2_dixmier_ratio(const BWord& w, HalfInteger L_max) {
  if (L_max.twice < 4) throw std::invalid_argument("ratio needs L_max >= 2");
  cplx num_all{}, num_top{};
  double den_all = 0.0, den_top = 0.0;
  for (int t = 0; t <= L_max.twice; ++t) {
    const IrrepBlock B = build_block({t});
    const double l = B.l.value();
    const double weight = std::pow(1.0 + l * (l + 1.0), -1.5);
    const double mult = B.dim;
    const cplx tr = SpMat(evaluate(w, B)).diagonal().sum();
    const cplx nu = mult * tr * weight;
    const double de = mult * mult * weight;
    num_all += nu;
    den_all += de;
    if (2 * t > L_max.twice) {
      num_top += nu;
      den_top += de;
    }
  }
  Su2Ratio r;
  r.estimate = num_top / den_top;
  r.cesaro = num_all / den_all;
  r.reference = sphere_integrate(su2_symbol(w)) / (4.0 * std::numbers::pi);
  return r;
}

}  // namespace ncsym
