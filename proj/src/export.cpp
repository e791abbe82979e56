#include "ncsym/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ncsym/sphere.hpp"

namespace ncsym {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> lx, ly;
  for (size_t k = 0; k < x.size(); ++k)
    if (x[k] > 0 && y[k] > 0) {
      lx.push_back(std::log(x[k]));
      ly.push_back(std::log(y[k]));
    }
  if (lx.size() < 2) return 0.0;
  const double n = static_cast<double>(lx.size());
  double mx = 0, my = 0;
  for (size_t k = 0; k < lx.size(); ++k) {
    mx += lx[k] / n;
    my += ly[k] / n;
  }
  double sxy = 0, sxx = 0;
  for (size_t k = 0; k < lx.size(); ++k) {
    sxy += (lx[k] - mx) * (ly[k] - my);
    sxx += (lx[k] - mx) * (lx[k] - mx);
  }
  return sxy / sxx;
}

}  // namespace

std::string moment_table_csv(int d, int max_degree) {
  std::string s;
  for (int k = 1; k <= d; ++k) s += "n_" + std::to_string(k) + ",";
  s += "value\n";
  for (const auto& n : multi_indices(d, max_degree)) {
    for (int v : n) s += std::to_string(v) + ",";
    s += num(sphere_moment(n)) + "\n";
  }
  return s;
}

nlohmann::json tail_report_json(const std::vector<double>& R, const std::vector<double>& tail) {
  if (R.size() != tail.size()) throw std::invalid_argument("R and tail differ in length");
  return {{"R", R}, {"tail_norm", tail}, {"fit_slope", loglog_slope(R, tail)}};
}

nlohmann::json tail_report_json(const CompactnessReport& rep) {
  std::vector<double> R, t;
  for (const auto& row : rep.rows) {
    R.push_back(row.R);
    t.push_back(row.upper);
  }
  return tail_report_json(R, t);
}

std::string partial_sums_csv(const LatticeDiagonal& diag, const std::vector<double>& N_grid) {
  std::vector<double> all;
  for (double N : N_grid) {
    if (N < 2.0) throw std::invalid_argument("radii must be >= 2");
    all.push_back(0.5 * N);
    all.push_back(N);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  const PartialSums ps = lattice_partial_sums(diag, all);
  auto at = [&](double N) { return std::lower_bound(ps.N.begin(), ps.N.end(), N) - ps.N.begin(); };
  std::string s = "N,S,K,estimate\n";
  for (double N : N_grid) {
    const auto i = at(N), h = at(0.5 * N);
    const double est = (ps.S[i] - ps.S[h]).real() /
                       (std::log(static_cast<double>(ps.K[i])) - std::log(static_cast<double>(ps.K[h])));
    s += num(N) + "," + num(ps.S[i].real()) + "," + std::to_string(ps.K[i]) + "," + num(est) + "\n";
  }
  return s;
}

nlohmann::json trace_summary_json(const LogFit& fit, double reference) {
  return {{"slope", fit.slope},
          {"reference", reference},
          {"relative_error", std::abs(fit.slope - reference) / std::max(std::abs(reference), 1e-300)},
          {"intercept", fit.intercept},
          {"N", fit.N_grid}};
}

std::string su2_block_table_csv(const BWord& w, HalfInteger L_max) {
  const double ref = sphere_integrate(su2_symbol(w)).real() / (4.0 * std::numbers::pi);
  std::string s = "l,block_trace_re,block_trace_im,average_minus_reference\n";
  for (int t = 0; t <= L_max.twice; ++t) {
    const IrrepBlock B = build_block({t});
    const cplx tr = SpMat(evaluate(w, B)).diagonal().sum();
    s += num(B.l.value()) + "," + num(tr.real()) + "," + num(tr.imag()) + "," + num(tr.real() / B.dim - ref) + "\n";
  }
  return s;
}

nlohmann::json su2_summary_json(const std::string& word, const Su2Ratio& r) {
  return {{"word", word},
          {"estimate", r.estimate.real()},
          {"estimate_im", r.estimate.imag()},
          {"all_blocks", r.cesaro.real()},
          {"reference", r.reference.real()},
          {"abs_error", std::abs(r.estimate - r.reference)}};
}

std::string matrix_to_csv(const Eigen::MatrixXd& m) {
  std::string s;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) s += (j ? "," : "") + num(m(i, j));
    s += "\n";
  }
  return s;
}

Eigen::MatrixXd matrix_from_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::stringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> r;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) r.push_back(std::stod(cell));
    if (!rows.empty() && r.size() != rows[0].size()) throw std::invalid_argument("ragged matrix csv");
    rows.push_back(std::move(r));
  }
  Eigen::MatrixXd m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace ncsym
