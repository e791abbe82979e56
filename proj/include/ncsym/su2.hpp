#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "ncsym/sphere.hpp"

namespace ncsym {

using SpMat = Eigen::SparseMatrix<cplx>;

struct HalfInteger {
  int twice = 0;
  double value() const { return 0.5 * twice; }
  static HalfInteger from_double(double l);
  bool operator==(const HalfInteger&) const = default;
};

// Spin-l block. D[0] is diagonal; [D1,D2] = 2i D3 cyclically.
// At l = 0 the D's vanish and b_k = 1/sqrt(3).
struct IrrepBlock {
  HalfInteger l;
  int dim = 1;
  std::array<SpMat, 3> D;
  std::array<SpMat, 3> b;
  double laplacian_eig = 0.0;  // l(l+1)
  long long peter_weyl_weight = 1;

  Eigen::MatrixXcd dense_D(int k) const { return Eigen::MatrixXcd(D[k]); }
  Eigen::MatrixXcd dense_b(int k) const { return Eigen::MatrixXcd(b[k]); }
};

IrrepBlock build_block(HalfInteger l);

// Complex combination of words in b1, b2, b3 (letters stored zero-based).
class BWord {
 public:
  BWord() = default;
  static BWord identity();
  static BWord letter(int k);
  // "1", "b1b2b2", "b3^4"; products only
  static BWord parse(const std::string& s);

  const std::map<std::vector<int>, cplx>& terms() const { return terms_; }
  void add_term(const std::vector<int>& letters, cplx c);

  BWord operator+(const BWord& o) const;
  BWord operator-(const BWord& o) const;
  BWord operator*(const BWord& o) const;
  BWord operator*(cplx c) const;

 private:
  std::map<std::vector<int>, cplx> terms_;
};

SpMat evaluate(const BWord& w, const IrrepBlock& block);

// j, k zero-based
double block_commutator_norm(const IrrepBlock& block, int j, int k);

// the paper's labels: sigma1 = diag(1,-1), sigma2 = [[0,-i],[i,0]], sigma3 = [[0,1],[1,0]]
const std::array<Eigen::Matrix2cd, 3>& pauli();

// g sigma_j g* = sum_k eta(g)_{kj} sigma_k
Eigen::Matrix3d eta(const Eigen::Matrix2cd& g);

// max over k of || e^{-isD_j} D_k e^{isD_j} - sum_m eta(e^{is sigma_j})_{mk} D_m ||
double conjugation_covariance_check(const IrrepBlock& block, int j, double s);

// pinching onto the D1 eigenspaces
Eigen::MatrixXcd block_conditional_expectation(const IrrepBlock& block, const Eigen::MatrixXcd& M);

double beta_coefficient(int n2, int n3);
double beta_formula_residual(HalfInteger l, int n1, int n2, int n3);

SpherePoly su2_symbol(const BWord& w);

struct NormGap {
  HalfInteger l;
  double block_norm;
  double symbol_sup;
  double gap;
};

std::vector<NormGap> block_norm_vs_symbol(const std::vector<HalfInteger>& l_list, const BWord& w);

struct Su2Ratio {
  cplx estimate;   // blocks with L/2 < l <= L
  cplx cesaro;     // all blocks l <= L
  cplx reference;  // (1/4pi) int sym
};

Su2Ratio su2_dixmier_ratio(const BWord& w, HalfInteger L_max);

}  // namespace ncsym
