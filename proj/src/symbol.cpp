#include "ncsym/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "ncsym/lattice.hpp"

namespace ncsym {

Symbol::Symbol(ThetaMatrix theta) : theta_(std::move(theta)) {}

Symbol Symbol::tensor(const TorusElement& x, const SpherePoly& y) {
  Symbol s(x.theta());
  s.add_term(x, y);
  return s;
}

void Symbol::add_term(const TorusElement& x, const SpherePoly& y) {
  if (!(x.theta() == theta_)) throw ThetaError("symbol term over a different theta");
  if (y.dim() != dim()) throw std::invalid_argument("symbol term dimension mismatch");
  if (x.empty() || y.is_zero()) return;
  terms_.push_back({x, y});
}

void Symbol::check_same(const Symbol& o) const {
  if (!(theta_ == o.theta_)) throw ThetaError("symbols over different theta");
}

Symbol Symbol::operator+(const Symbol& o) const {
  check_same(o);
  Symbol r = *this;
  for (const auto& t : o.terms_) r.terms_.push_back(t);
  return r;
}

Symbol Symbol::operator*(cplx c) const {
  Symbol r(theta_);
  for (const auto& t : terms_) r.add_term(t.x * c, t.y);
  return r;
}

Symbol Symbol::operator-(const Symbol& o) const { return *this + o * cplx(-1.0); }

Symbol Symbol::operator*(const Symbol& o) const {
  check_same(o);
  Symbol r(theta_);
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) r.add_term(torus_mul(a.x, b.x), a.y * b.y);
  return r;
}

Symbol Symbol::adjoint() const {
  Symbol r(theta_);
  for (const auto& t : terms_) r.add_term(torus_adjoint(t.x), t.y.conj());
  return r;
}

std::map<IVec, SpherePoly> Symbol::by_shift() const {
  std::map<IVec, SpherePoly> out;
  for (const auto& t : terms_)
    for (const auto& [n, c] : t.x.coeffs()) {
      auto it = out.try_emplace(n, SpherePoly(dim())).first;
      it->second += t.y * c;
    }
  return out;
}

double symbol_distance(const Symbol& a, const Symbol& b) {
  const auto ma = a.by_shift();
  const auto mb = b.by_shift();
  const SpherePoly zero(a.dim());
  double r = 0.0;
  for (const auto& [n, p] : ma) {
    auto it = mb.find(n);
    r = std::max(r, sphere_poly_distance(p, it == mb.end() ? zero : it->second));
  }
  for (const auto& [n, p] : mb)
    if (!ma.count(n)) r = std::max(r, sphere_poly_distance(p, zero));
  return r;
}

OperatorWord::OperatorWord(ThetaMatrix theta, std::vector<Letter> letters)
    : theta_(std::move(theta)), letters_(std::move(letters)) {
  if (letters_.empty()) throw std::invalid_argument("empty operator word");
  for (const auto& l : letters_) {
    if (l.is_p1()) {
      if (!(l.x().theta() == theta_)) throw ThetaError("word letter over a different theta");
    } else if (l.y().dim() != dim()) {
      throw std::invalid_argument("word letter dimension mismatch");
    }
  }
}

OperatorWord OperatorWord::operator*(const OperatorWord& o) const {
  if (!(theta_ == o.theta_)) throw ThetaError("words over different theta");
  std::vector<Letter> l = letters_;
  l.insert(l.end(), o.letters_.begin(), o.letters_.end());
  return OperatorWord(theta_, std::move(l));
}

OperatorWord OperatorWord::adjoint() const {
  std::vector<Letter> l;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    l.push_back(it->is_p1() ? P1(torus_adjoint(it->x())) : P2(it->y().conj()));
  return OperatorWord(theta_, std::move(l));
}

Symbol sym(const OperatorWord& word) {
  const ThetaMatrix& th = word.theta();
  const int d = word.dim();
  Symbol s = Symbol::tensor(TorusElement::scalar(th, 1.0), SpherePoly::constant(d, 1.0));
  for (const auto& l : word.letters()) {
    if (l.is_p1())
      s = s * Symbol::tensor(l.x(), SpherePoly::constant(d, 1.0));
    else
      s = s * Symbol::tensor(TorusElement::scalar(th, 1.0), l.y());
  }
  return s;
}

cplx pi2_value(const SpherePoly& y, std::span<const int> n) {
  const int d = y.dim();
  double r2 = 0.0;
  for (int k = 0; k < d; ++k) r2 += static_cast<double>(n[k]) * n[k];
  if (r2 == 0.0) return sphere_integrate(y) / sphere_volume(d);
  const double r = std::sqrt(r2);
  double t[16];
  std::vector<double> big;
  double* p = t;
  if (d > 16) {
    big.resize(d);
    p = big.data();
  }
  for (int k = 0; k < d; ++k) p[k] = n[k] / r;
  return y(std::span<const double>(p, static_cast<size_t>(d)));
}

std::vector<PathTerm> expand_word(const OperatorWord& word) {
  const int d = word.dim();
  const ThetaMatrix& th = word.theta();
  std::vector<PathTerm> cur{{cplx(1.0), IVec(d, 0), {}, {}}};
  const auto& L = word.letters();
  for (auto it = L.rbegin(); it != L.rend(); ++it) {
    std::vector<PathTerm> next;
    if (it->is_p1()) {
      for (const auto& t : cur)
        for (const auto& [m, c] : it->x().coeffs()) {
          PathTerm u = t;
          u.coef *= c * std::polar(1.0, 0.5 * th.form(m, t.shift));
          for (int k = 0; k < d; ++k) u.shift[k] += m[k];
          next.push_back(std::move(u));
        }
    } else {
      for (auto& t : cur) {
        t.factors.push_back(it->y());
        t.offsets.push_back(t.shift);
        next.push_back(std::move(t));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::map<IVec, cplx> apply_word(const OperatorWord& word, const IVec& n) {
  const int d = word.dim();
  std::map<IVec, cplx> v{{n, cplx(1.0)}};
  const auto& L = word.letters();
  for (auto it = L.rbegin(); it != L.rend(); ++it) {
    std::map<IVec, cplx> w;
    for (const auto& [p, a] : v) {
      if (it->is_p1()) {
        for (const auto& [m, c] : it->x().coeffs()) {
          IVec q(d);
          for (int k = 0; k < d; ++k) q[k] = p[k] + m[k];
          w[q] += a * c * std::polar(1.0, 0.5 * word.theta().form(m, p));
        }
      } else {
        w[p] += a * pi2_value(it->y(), p);
      }
    }
    v = std::move(w);
  }
  return v;
}

cplx model_diagonal_entry(const TorusElement& x, const SpherePoly& y, const IVec& n) {
  const int d = x.dim();
  // (1 - Delta)^{-d/2}
  const double w = std::pow(1.0 + torus_laplacian_eigenvalue(n), -0.5 * d);
  const cplx a = w * pi2_value(y, n);
  // pi1(x) e_n = sum_m c_m e^{(i/2)(m, theta n)} e_{n+m}; read off the e_n component
  cplx diag{};
  IVec q(d);
  for (const auto& [m, c] : x.coeffs()) {
    for (int k = 0; k < d; ++k) q[k] = n[k] + m[k];
    if (q == n) diag += c * std::polar(1.0, 0.5 * x.theta().form(m, n)) * a;
  }
  return diag;
}

LatticeWindow::LatticeWindow(int d, double radius) : d_(d), radius_(radius) {
  if (radius < 1.0) throw std::invalid_argument("window radius must be >= 1");
  std::vector<std::pair<long long, IVec>> pts;
  for_each_lattice_point(d, -1, static_cast<long long>(std::floor(radius * radius)),
                         [&](std::span<const int> n, long long n2) { pts.emplace_back(n2, IVec(n.begin(), n.end())); });
  std::sort(pts.begin(), pts.end());
  for (auto& [n2, n] : pts) {
    index_[n] = static_cast<long>(points_.size());
    points_.push_back(std::move(n));
  }
}

long LatticeWindow::index(const IVec& n) const {
  auto it = index_.find(n);
  return it == index_.end() ? -1 : it->second;
}

WindowMatrix build_pi1_matrix(const TorusElement& x, const LatticeWindow& w) {
  if (x.dim() != w.dim()) throw std::invalid_argument("window dimension mismatch");
  const int d = w.dim();
  WindowMatrix out;
  out.matrix = Eigen::MatrixXcd::Zero(w.size(), w.size());
  IVec q(d);
  for (long j = 0; j < w.size(); ++j) {
    const IVec& n = w.point(j);
    for (const auto& [m, c] : x.coeffs()) {
      for (int k = 0; k < d; ++k) q[k] = n[k] + m[k];
      const cplx v = c * std::polar(1.0, 0.5 * x.theta().form(m, n));
      const long i = w.index(q);
      if (i < 0)
        out.escaped_mass += std::norm(v);
      else
        out.matrix(i, j) += v;
    }
  }
  return out;
}

Eigen::MatrixXcd build_pi2_matrix(const SpherePoly& y, const LatticeWindow& w) {
  if (y.dim() != w.dim()) throw std::invalid_argument("window dimension mismatch");
  Eigen::VectorXcd diag(w.size());
  for (long j = 0; j < w.size(); ++j) diag[j] = pi2_value(y, w.point(j));
  return diag.asDiagonal();
}

namespace {

double norm_of(const IVec& s) {
  double r = 0.0;
  for (int v : s) r += static_cast<double>(v) * v;
  return std::sqrt(r);
}

}  // namespace

TailNorm difference_tail_norm(const std::vector<PathTerm>& terms, double R, double outer) {
  if (outer <= 0.0) outer = 2.0 * R;
  if (outer <= R) throw std::invalid_argument("outer radius must exceed R");
  TailNorm res;
  res.R = R;
  res.outer = outer;
  if (terms.empty()) {
    res.exact = true;
    return res;
  }
  const int d = static_cast<int>(terms.front().shift.size());

  std::map<IVec, std::vector<const PathTerm*>> groups;
  for (const auto& t : terms) {
    bool moves = false;
    for (const auto& o : t.offsets)
      for (int v : o) moves = moves || v != 0;
    if (moves) groups[t.shift].push_back(&t);
  }
  res.shifts = static_cast<int>(groups.size());
  if (groups.empty()) {
    res.exact = true;
    return res;
  }

  std::vector<double> rem;
  for (const auto& [s, g] : groups) {
    double b = 0.0;
    for (const PathTerm* t : g) {
      const size_t k = t->factors.size();
      double inner = 0.0;
      for (size_t j = 0; j < k; ++j) {
        const double sj = norm_of(t->offsets[j]);
        if (sj == 0.0) continue;
        if (outer <= sj) {
          inner = std::numeric_limits<double>::infinity();
          break;
        }
        double others = 1.0;
        for (size_t i = 0; i < k; ++i)
          if (i != j) others *= t->factors[i].sup_bound();
        inner += t->factors[j].lipschitz_bound() * others * sj / (outer - sj);
      }
      b += std::abs(t->coef) * inner;
    }
    rem.push_back(b);
  }

  std::vector<double> sup(groups.size(), 0.0);
  std::vector<int> q(d);
  std::vector<double> u(d);
  const long long lo2 = static_cast<long long>(std::floor(R * R));
  const long long hi2 = static_cast<long long>(std::floor(outer * outer));
  for_each_lattice_point(d, lo2, hi2, [&](std::span<const int> n, long long n2) {
    const double r = std::sqrt(static_cast<double>(n2));
    for (int k = 0; k < d; ++k) u[k] = n[k] / r;
    size_t gi = 0;
    for (const auto& [s, g] : groups) {
      cplx acc{};
      for (const PathTerm* t : g) {
        cplx moved = 1.0, fixed = 1.0;
        for (size_t j = 0; j < t->factors.size(); ++j) {
          for (int k = 0; k < d; ++k) q[k] = n[k] + t->offsets[j][k];
          moved *= pi2_value(t->factors[j], q);
          fixed *= t->factors[j](u);
        }
        acc += t->coef * (moved - fixed);
      }
      sup[gi] = std::max(sup[gi], std::abs(acc));
      ++gi;
    }
  });

  for (size_t i = 0; i < sup.size(); ++i) {
    res.lower = std::max(res.lower, sup[i]);
    res.upper += std::max(sup[i], rem[i]);
    res.remainder = std::max(res.remainder, rem[i]);
  }
  res.exact = (sup.size() == 1 && rem[0] <= sup[0]);
  return res;
}

TailNorm commutator_tail_norm(const TorusElement& x, const SpherePoly& y, double R, double outer) {
  // [pi1(x), pi2(y)] = -(pi2(y) pi1(x) - normal-ordered twin)
  const OperatorWord w(x.theta(), {P2(y), P1(x)});
  return difference_tail_norm(expand_word(w), R, outer);
}

bool CompactnessReport::strictly_decreasing() const {
  for (size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i].upper < rows[i - 1].upper) && !(rows[i].upper == 0.0 && rows[i - 1].upper == 0.0)) return false;
  return true;
}

CompactnessReport residual_compactness_report(const OperatorWord& word, const std::vector<double>& R_list,
                                              double outer_factor) {
  CompactnessReport rep;
  const auto terms = expand_word(word);
  for (double R : R_list) rep.rows.push_back(difference_tail_norm(terms, R, outer_factor * R));
  return rep;
}

OperatorWord random_alternating_word(const ThetaMatrix& theta, int letters, Rng& rng) {
  const int d = theta.dim();
  std::uniform_int_distribution<int> axis(0, d - 1), sign(0, 1);
  std::normal_distribution<double> nd;
  std::vector<Letter> l;
  for (int k = 0; k < letters; ++k) {
    // a nonzero shift in every P1 and a linear term in every P2 keep the word away from normal order
    if (k % 2 == 0) {
      IVec e(d, 0);
      e[axis(rng)] = sign(rng) ? 1 : -1;
      l.push_back(P1(random_torus_element(theta, 1, 2, rng) + TorusElement::unit(theta, e, cplx(1.0 + std::abs(nd(rng)), nd(rng)))));
    } else {
      l.push_back(P2(random_sphere_poly(d, 2, 3, rng) + SpherePoly::coordinate(d, axis(rng)) * cplx(1.0 + std::abs(nd(rng)))));
    }
  }
  return OperatorWord(theta, std::move(l));
}

InjectivityWitness injectivity_witness(const Symbol& s, double window_radius, int samples, unsigned seed) {
  const int d = s.dim();
  const double vol = std::pow(2.0 * std::numbers::pi, d);
  SpherePoly f(d);
  for (const auto& t : s.terms()) f += t.y * (torus_translate_average(t.x) / vol);
  InjectivityWitness w{0.0, 0.0};
  const LatticeWindow win(d, window_radius);
  for (long i = 0; i < win.size(); ++i) w.window_norm = std::max(w.window_norm, std::abs(pi2_value(f, win.point(i))));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  std::vector<double> t(d);
  for (int k = 0; k < samples; ++k) {
    double r = 0.0;
    for (auto& v : t) {
      v = nd(rng);
      r += v * v;
    }
    r = std::sqrt(r);
    for (auto& v : t) v /= r;
    w.sampled_sup = std::max(w.sampled_sup, std::abs(f(t)));
  }
  return w;
}

}  // namespace ncsym
