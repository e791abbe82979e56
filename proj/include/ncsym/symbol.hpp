#pragma once

#include <map>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "ncsym/random.hpp"
#include "ncsym/sphere.hpp"
#include "ncsym/torus.hpp"

namespace ncsym {

struct SymbolTerm {
  TorusElement x;
  SpherePoly y;
};

// Element of C(T^d_theta) (x) C(S^{d-1}) as a finite sum of elementary tensors.
class Symbol {
 public:
  explicit Symbol(ThetaMatrix theta);
  static Symbol tensor(const TorusElement& x, const SpherePoly& y);

  int dim() const { return theta_.dim(); }
  const ThetaMatrix& theta() const { return theta_; }
  const std::vector<SymbolTerm>& terms() const { return terms_; }
  void add_term(const TorusElement& x, const SpherePoly& y);

  Symbol operator+(const Symbol& o) const;
  Symbol operator-(const Symbol& o) const;
  Symbol operator*(const Symbol& o) const;
  Symbol operator*(cplx c) const;
  Symbol adjoint() const;

  // coefficient of u_n, as a sphere polynomial
  std::map<IVec, SpherePoly> by_shift() const;

 private:
  void check_same(const Symbol& o) const;
  ThetaMatrix theta_;
  std::vector<SymbolTerm> terms_;
};

// max over shifts of the semantic sphere-polynomial distance
double symbol_distance(const Symbol& a, const Symbol& b);

struct Letter {
  std::variant<TorusElement, SpherePoly> value;
  bool is_p1() const { return value.index() == 0; }
  const TorusElement& x() const { return std::get<0>(value); }
  const SpherePoly& y() const { return std::get<1>(value); }
};

inline Letter P1(const TorusElement& x) { return {x}; }
inline Letter P2(const SpherePoly& y) { return {y}; }

class OperatorWord {
 public:
  OperatorWord(ThetaMatrix theta, std::vector<Letter> letters);

  int dim() const { return theta_.dim(); }
  const ThetaMatrix& theta() const { return theta_; }
  const std::vector<Letter>& letters() const { return letters_; }

  OperatorWord operator*(const OperatorWord& o) const;
  OperatorWord adjoint() const;

 private:
  ThetaMatrix theta_;
  std::vector<Letter> letters_;
};

Symbol sym(const OperatorWord& word);

// y at n/|n|; at n = 0 the normalised spherical mean
cplx pi2_value(const SpherePoly& y, std::span<const int> n);

// Term of a word acting as  e_n -> coef * prod_j y_j((n + s_j)^) * pi1(u_shift) e_n.
struct PathTerm {
  cplx coef;
  IVec shift;
  std::vector<SpherePoly> factors;
  std::vector<IVec> offsets;
};

std::vector<PathTerm> expand_word(const OperatorWord& word);

// (word applied to e_n) as a sparse vector
std::map<IVec, cplx> apply_word(const OperatorWord& word, const IVec& n);

// <e_n, pi1(x) pi2(y) (1 - Delta)^{-d/2} e_n> computed by applying the operators
cplx model_diagonal_entry(const TorusElement& x, const SpherePoly& y, const IVec& n);

class LatticeWindow {
 public:
  LatticeWindow(int d, double radius);
  int dim() const { return d_; }
  double radius() const { return radius_; }
  long size() const { return static_cast<long>(points_.size()); }
  const IVec& point(long i) const { return points_[i]; }
  // -1 if outside
  long index(const IVec& n) const;

 private:
  int d_;
  double radius_;
  std::vector<IVec> points_;
  std::map<IVec, long> index_;
};

struct WindowMatrix {
  Eigen::MatrixXcd matrix;
  double escaped_mass = 0.0;  // squared l2 mass of columns pushed outside the window
};

WindowMatrix build_pi1_matrix(const TorusElement& x, const LatticeWindow& w);
Eigen::MatrixXcd build_pi2_matrix(const SpherePoly& y, const LatticeWindow& w);

struct TailNorm {
  double R = 0.0;
  double outer = 0.0;
  double lower = 0.0;      // max over shifts of the shell sup
  double upper = 0.0;      // sum over shifts of max(shell sup, remainder)
  double remainder = 0.0;  // largest per-shift bound beyond the shell
  bool exact = false;      // single shift and remainder below the shell sup
  int shifts = 0;
};

// Norm on {|n| > R} of sum_terms coef * pi1(u_shift) diag(prod y_j((n+s_j)^) - prod y_j(n^)).
// The shell R < |n| <= outer is scanned; beyond it a Lipschitz bound is used. outer <= 0 means 2R.
TailNorm difference_tail_norm(const std::vector<PathTerm>& terms, double R, double outer = 0.0);

// [pi1(x), pi2(y)] on {|n| > R}
TailNorm commutator_tail_norm(const TorusElement& x, const SpherePoly& y, double R, double outer = 0.0);

struct CompactnessReport {
  std::vector<TailNorm> rows;
  // a run of exact zeros counts as converged
  bool strictly_decreasing() const;
};

// represented word minus the normal-ordered representative of sym(word)
CompactnessReport residual_compactness_report(const OperatorWord& word, const std::vector<double>& R_list,
                                              double outer_factor = 2.0);

// P1, P2, P1, P2, ... with |n|_1 <= 1 torus supports and degree <= 2 polynomials, each P1 shifting and each P2 nonconstant
OperatorWord random_alternating_word(const ThetaMatrix& theta, int letters, Rng& rng);

struct InjectivityWitness {
  double window_norm;   // norm of sum tau(x_k) pi2(y_k) on the window
  double sampled_sup;   // max over sampled directions of |sum tau(x_k) y_k(s)|
};

InjectivityWitness injectivity_witness(const Symbol& s, double window_radius, int samples = 2000,
                                       unsigned seed = 11);

}  // namespace ncsym
