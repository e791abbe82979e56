#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"
#include "ncsym/dixmier.hpp"
#include "ncsym/su2.hpp"
#include "ncsym/symbol.hpp"

namespace ncsym {

// n_1,...,n_d,value for every multi-index of degree <= max_degree
std::string moment_table_csv(int d, int max_degree);

// {"R", "tail_norm", "fit_slope"}; fit_slope is the least-squares slope of log tail against log R
nlohmann::json tail_report_json(const std::vector<double>& R, const std::vector<double>& tail);
nlohmann::json tail_report_json(const CompactnessReport& rep);

// N,S(N),K(N),estimate with the two-radius estimator at each N
std::string partial_sums_csv(const LatticeDiagonal& diag, const std::vector<double>& N_grid);
nlohmann::json trace_summary_json(const LogFit& fit, double reference);

// l,block_trace_re,block_trace_im,average_minus_reference for 0 <= l <= L_max
std::string su2_block_table_csv(const BWord& w, HalfInteger L_max);
nlohmann::json su2_summary_json(const std::string& word, const Su2Ratio& r);

std::string matrix_to_csv(const Eigen::MatrixXd& m);
Eigen::MatrixXd matrix_from_csv(const std::string& text);

}  // namespace ncsym
