#include "ncsym/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "ncsym/dixmier.hpp"
#include "ncsym/export.hpp"
#include "ncsym/quadrature.hpp"
#include "ncsym/random.hpp"
#include "ncsym/sphere.hpp"
#include "ncsym/su2.hpp"
#include "ncsym/symbol.hpp"
#include "ncsym/symplectic.hpp"
#include "ncsym/torus.hpp"

namespace ncsym {

namespace {

constexpr double kPi = std::numbers::pi;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_double(const std::string& key, const std::string& v) {
  try {
    size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("bad number for " + key + ": '" + v + "'");
  }
}

long to_long(const std::string& key, const std::string& v) {
  const double x = to_double(key, v);
  if (x != std::floor(x)) throw ConfigError("expected an integer for " + key + ": '" + v + "'");
  return static_cast<long>(x);
}

std::vector<double> to_doubles(const std::string& key, const std::string& v) {
  std::vector<double> out;
  for (const auto& p : split(v, ',')) out.push_back(to_double(key, p));
  return out;
}

ThetaMatrix theta_for(const VerifyConfig& cfg, int d) {
  if (!cfg.theta.empty()) return ThetaMatrix::from_upper(d, cfg.theta);
  std::vector<double> up(d * (d - 1) / 2);
  for (size_t k = 0; k < up.size(); ++k) up[k] = 0.5 + 0.25 * k;
  return ThetaMatrix::from_upper(d, up);
}

std::vector<double> doubling_grid(double top, int points) {
  std::vector<double> g;
  for (int k = points - 1; k >= 0; --k) g.push_back(top / std::pow(2.0, k));
  return g;
}

void suite_torus_trace(const VerifyConfig& cfg, VerifyReport& rep) {
  const int d = cfg.d ? cfg.d : 2;
  if (d < 2) throw ConfigError("torus-trace needs d >= 2");
  const double N = cfg.nmax;
  if (N < 32) throw ConfigError("torus-trace needs nmax >= 32");
  const auto grid = doubling_grid(N, 5);
  const auto one = symbol_diagonal(SpherePoly::constant(d, 1.0));
  const LogFit fit = log_fit(one, grid);
  const double vol = sphere_volume(d);
  rep.records.push_back(rel_record("slope", fit.slope, vol, cfg.tol("slope", 0.02)));
  const TraceEstimate est = normalised_trace_estimate(one, N);
  rep.records.push_back(rel_record("estimate", est.value.real(), vol / d, cfg.tol("estimate", 0.03)));
  rep.records.push_back(max_record("radial_integral_offset", std::abs(radial_integral_check(d, N)),
                                   cfg.tol("radial_integral_offset", 1.0)));
  rep.info["summary"] = trace_summary_json(fit, vol);
  rep.table_csv = partial_sums_csv(one, grid);
  rep.info["fit_intercept"] = fit.intercept;
  rep.info["fit_max_residual"] = fit.max_residual;
  rep.info["cesaro_ratio"] = est.cesaro.real();
  rep.info["K"] = est.K;

  const ThetaMatrix th = theta_for(cfg, d);
  IVec e(d, 0);
  e[0] = 1;
  e[1] = 1;
  IVec me(d, 0);
  me[0] = -1;
  me[1] = -1;
  const TorusElement x = TorusElement::scalar(th, 1.0) + TorusElement::unit(th, e, 0.5) + TorusElement::unit(th, me, 0.5);
  const SpherePoly y = SpherePoly::monomial([&] {
    MultiIndex n(d, 0);
    n[1] = 2;
    return n;
  }());
  const double Nc = std::min(N, d == 2 ? 1024.0 : 128.0);
  const ConnesTorusResult c = connes_trace_torus(x, y, Nc);
  rep.records.push_back(rel_record("connes_trace", c.estimate.real(), c.reference.real(), cfg.tol("connes_trace", 0.05), 0.01));
  rep.records.push_back(max_record("model_diagonal", c.max_diagonal_deviation, cfg.tol("model_diagonal", 1e-12)));
}

void suite_moments(const VerifyConfig& cfg, VerifyReport& rep) {
  const int d = cfg.d ? cfg.d : 2;
  if (d < 2 || d % 2) throw ConfigError("moments needs even d");
  if (cfg.max_degree < 0 || cfg.max_degree > 40) throw ConfigError("max-degree out of range");
  const RecursionReport r = moment_recursion_check(d, cfg.max_degree);
  const double tol = cfg.tol("recursion", 1e-12);
  rep.records.push_back(max_record("odd_vanishing", r.max_odd, tol));
  rep.records.push_back(max_record("first_reduction", r.max_first, tol));
  rep.records.push_back(max_record("main_reduction", r.max_main, tol));
  rep.table_csv = moment_table_csv(d, cfg.max_degree);

  Rng rng(cfg.seed);
  const Eigen::MatrixXd om = omega(d);
  double worst = 0.0;
  for (int s = 0; s < 5; ++s) {
    const Eigen::MatrixXd A = random_sp_generator(om, rng);
    for (const auto& n : multi_indices(d, std::min(cfg.max_degree, 8)))
      worst = std::max(worst, std::abs(sphere_integrate(lie_action(A, SpherePoly::monomial(n)))));
  }
  rep.records.push_back(max_record("lie_action_invariance", worst, cfg.tol("lie_action_invariance", 1e-12)));
}

void suite_su2(const VerifyConfig& cfg, VerifyReport& rep) {
  const HalfInteger L = HalfInteger::from_double(cfg.lmax);
  if (L.twice < 4) throw ConfigError("su2 needs lmax >= 2");
  std::vector<std::string> words = cfg.words;
  if (words.empty()) words = {"1", "b1b1", "b1b2", "b3^4"};
  for (const auto& ws : words) {
    BWord w;
    try {
      w = BWord::parse(ws);
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
    const Su2Ratio r = su2_dixmier_ratio(w, L);
    if (std::abs(r.reference) < 1e-12)
      rep.records.push_back(abs_record("ratio_" + ws, std::abs(r.estimate), 0.0, cfg.tol("ratio_zero", 0.01)));
    else
      rep.records.push_back(rel_record("ratio_" + ws, r.estimate.real(), r.reference.real(), cfg.tol("ratio", 0.02)));
    rep.info["words"].push_back(su2_summary_json(ws, r));
    if (rep.table_csv.empty()) rep.table_csv = su2_block_table_csv(w, L);
  }
  const IrrepBlock B = build_block(L);
  rep.records.push_back(abs_record("commutator_norm", block_commutator_norm(B, 0, 1), 1.0 / (L.value() + 1.0),
                                   cfg.tol("commutator_norm", 1e-12)));
  double worst = 0.0;
  for (const auto& n : multi_indices(3, 6)) worst = std::max(worst, beta_formula_residual(L, n[0], n[1], n[2]));
  rep.records.push_back(max_record("beta_formula", worst, cfg.tol("beta_formula", 0.05)));
  const IrrepBlock B2 = build_block({4});
  rep.records.push_back(max_record("conjugation_covariance", conjugation_covariance_check(B2, 0, 0.3),
                                   cfg.tol("conjugation_covariance", 1e-9)));
}

void suite_symplectic(const VerifyConfig& cfg, VerifyReport& rep) {
  const int d = cfg.d ? cfg.d : 4;
  if (d < 2 || d % 2) throw ConfigError("symplectic needs even d");
  Rng rng(cfg.seed);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const ThetaMatrix th = random_theta(d, rng);
    worst = std::max(worst, antisymmetric_normal_form(th.matrix()).residual);
  }
  rep.records.push_back(max_record("normal_form", worst, cfg.tol("normal_form", 1e-10)));

  const Eigen::MatrixXd theta = cfg.theta.empty() ? random_nondegenerate_theta(d, rng)
                                                  : ThetaMatrix::from_upper(d, cfg.theta).matrix();
  const NormalForm nf = antisymmetric_normal_form(theta);
  double mem = 0.0;
  for (int k = 0; k < 20; ++k) {
    const Eigen::MatrixXd h = sp_theta_conjugate(random_sp_element(d, 0.5, rng), nf, theta);
    mem = std::max(mem, sp_group_residual(h, theta));
  }
  rep.records.push_back(max_record("sp_theta_membership", mem, cfg.tol("sp_theta_membership", 1e-9)));

  if (d <= 4) {
    const QuadratureRule rule = QuadratureRule::product(d == 4 ? 100 : 256);
    const SpInvarianceReport inv = sp_invariant_functional_check(theta, 4, rule, 20, cfg.seed + 1);
    rep.records.push_back(max_record("sp_invariance", inv.max_residual, cfg.tol("sp_invariance", 1e-6)));
    rep.info["quadrature_nodes"] = inv.nodes;
  } else {
    const long n = cfg.samples ? cfg.samples : 1L << 20;
    const SpInvarianceReport inv =
        sp_invariant_functional_check(theta, 2, QuadratureRule::low_discrepancy(n, cfg.seed), 5, cfg.seed + 1);
    rep.records.push_back(max_record("sp_invariance", inv.max_residual, cfg.tol("sp_invariance", 1e-3)));
    rep.info["quadrature_nodes"] = inv.nodes;
  }
  rep.info["beta_condition"] = nf.condition;
  rep.table_csv = matrix_to_csv(nf.beta);
}

void suite_moyal(const VerifyConfig& cfg, VerifyReport& rep) {
  const int d = cfg.d ? cfg.d : 2;
  if (d < 2 || d % 2) throw ConfigError("moyal needs even d");
  Rng rng(cfg.seed);
  const Eigen::MatrixXd theta = cfg.theta.empty() ? random_nondegenerate_theta(d, rng)
                                                  : ThetaMatrix::from_upper(d, cfg.theta).matrix();
  Grid grid{d, d == 2 ? 24 : 4, 0.5};
  std::uniform_int_distribution<int> step(-3, 3);
  double ccr = 0.0;
  for (int k = 0; k < 5; ++k) {
    Eigen::VectorXd t(d), s(d);
    for (int j = 0; j < d; ++j) {
      t[j] = step(rng) * grid.h;
      s[j] = step(rng) * grid.h;
    }
    ccr = std::max(ccr, ccr_phase_residual(t, s, theta, grid, cfg.seed + k));
  }
  rep.records.push_back(max_record("ccr_phase", ccr, cfg.tol("ccr_phase", 1e-13)));

  const Eigen::MatrixXd g = random_sp_element(d, 0.5, rng);
  MultiIndex n(d, 0);
  n[0] = 1;
  n[1] = 1;
  rep.records.push_back(max_record("multiplier_identity",
                                   multiplier_identity_residual(g, SpherePoly::monomial(n), 10000, cfg.seed),
                                   cfg.tol("multiplier_identity", 1e-13)));

  Eigen::MatrixXd g2 = Eigen::MatrixXd::Identity(d, d);
  g2(0, 0) = 2.0;
  g2(1, 1) = 0.5;
  const std::vector<double> radii = cfg.radii.empty() ? std::vector<double>{10.0, 100.0, 1000.0} : cfg.radii;
  const DecayProfile hp = h_decay_profile(g2, radii, 20000, cfg.seed);
  const double h_first = std::max(hp.profile[0], hp.profile[std::min<size_t>(1, hp.profile.size() - 1)]);
  const double h_last = std::max(hp.profile.back(), hp.profile[hp.profile.size() >= 2 ? hp.profile.size() - 2 : 0]);
  rep.records.push_back(max_record("h_decay_bounded", h_last / h_first, cfg.tol("h_decay_bounded", 1.05)));
  rep.info["h_profile"] = hp.profile;

  const DecayProfile rp = riesz_difference_decay(0, d, radii, 4000, cfg.seed);
  rep.records.push_back(abs_record("riesz_limit", rp.profile.back(), 0.5, cfg.tol("riesz_limit", 1e-4)));
  rep.records.push_back(max_record("riesz_bounded", rp.profile.back() / std::max(rp.profile[0], rp.profile[1]),
                                   cfg.tol("riesz_bounded", 1.05)));
  if (d == 2) {
    const auto cs = h_cell_sums(g2, {1000.0, 2000.0});
    rep.records.push_back(max_record("h_cell_sum_convergence", std::abs(cs[1] - cs[0]) / cs[1],
                                     cfg.tol("h_cell_sum_convergence", 0.01)));
  }
}

void suite_symbol_compactness(const VerifyConfig& cfg, VerifyReport& rep) {
  const int d = cfg.d ? cfg.d : 2;
  const ThetaMatrix th = theta_for(cfg, d);
  const std::vector<double> radii = cfg.radii.empty() ? std::vector<double>{50.0, 100.0, 200.0, 400.0} : cfg.radii;
  IVec e(d, 0);
  e[0] = 1;
  const TorusElement u = TorusElement::unit(th, e);
  const SpherePoly t1 = SpherePoly::coordinate(d, 0);
  std::vector<double> tails;
  for (double R : radii) tails.push_back(commutator_tail_norm(u, t1, R).upper);
  for (size_t k = 1; k < tails.size(); ++k)
    rep.records.push_back(range_record("commutator_ratio_" + std::to_string(k), tails[k - 1] / tails[k],
                                       cfg.tol("ratio_lo", 1.8), cfg.tol("ratio_hi", 2.2)));
  rep.info["commutator"] = tail_report_json(radii, tails);

  Rng rng(cfg.seed);
  for (int w = 0; w < 3; ++w) {
    const CompactnessReport r = residual_compactness_report(random_alternating_word(th, 4, rng), radii);
    double worst = 0.0;
    for (size_t k = 0; k < r.rows.size(); ++k) {
      if (k && r.rows[k - 1].upper > 0.0) worst = std::max(worst, r.rows[k].upper / r.rows[k - 1].upper);
    }
    rep.records.push_back(max_record("word_" + std::to_string(w) + "_decrease", worst, cfg.tol("word_decrease", 1.0 - 1e-12)));
    rep.info["word_" + std::to_string(w)] = tail_report_json(r);
  }
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

double VerifyConfig::tol(const std::string& check, double fallback) const {
  auto it = tolerances.find(check);
  return it == tolerances.end() ? fallback : it->second;
}

nlohmann::json VerifyConfig::echo() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["d"] = d;
  j["theta"] = theta;
  j["nmax"] = nmax;
  j["lmax"] = lmax;
  j["max_degree"] = max_degree;
  j["words"] = words;
  j["radii"] = radii;
  j["samples"] = samples;
  j["seed"] = seed;
  j["tolerances"] = tolerances;
  j["format"] = format;
  j["table"] = table;
  return j;
}

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> s = {"torus-trace", "su2", "moments", "symplectic", "moyal", "symbol-compactness"};
  return s;
}

void apply_setting(VerifyConfig& cfg, const std::string& key_in, const std::string& value_in) {
  const std::string key = trim(key_in);
  const std::string value = trim(value_in);
  if (key == "suite") {
    cfg.suite = value;
  } else if (key == "d") {
    cfg.d = static_cast<int>(to_long(key, value));
  } else if (key == "theta") {
    cfg.theta = to_doubles(key, value);
  } else if (key == "nmax") {
    cfg.nmax = to_double(key, value);
  } else if (key == "lmax") {
    cfg.lmax = to_double(key, value);
  } else if (key == "max-degree" || key == "max_degree") {
    cfg.max_degree = static_cast<int>(to_long(key, value));
  } else if (key == "word" || key == "words") {
    for (const auto& w : split(value, ',')) cfg.words.push_back(w);
  } else if (key == "radii") {
    cfg.radii = to_doubles(key, value);
  } else if (key == "samples") {
    cfg.samples = to_long(key, value);
  } else if (key == "seed") {
    const long s = to_long(key, value);
    if (s < 0) throw ConfigError("seed must be nonnegative");
    cfg.seed = static_cast<std::uint64_t>(s);
  } else if (key == "out") {
    cfg.out = value;
  } else if (key == "table") {
    cfg.table = value;
  } else if (key == "format") {
    cfg.format = value;
  } else if (key.rfind("tol.", 0) == 0 && key.size() > 4) {
    cfg.tolerances[key.substr(4)] = to_double(key, value);
  } else {
    throw ConfigError("unknown setting: " + key);
  }
}

VerifyConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path);
  VerifyConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    apply_setting(cfg, line.substr(0, eq), line.substr(eq + 1));
  }
  return cfg;
}

void validate(const VerifyConfig& cfg) {
  const auto& s = known_suites();
  if (std::find(s.begin(), s.end(), cfg.suite) == s.end()) throw ConfigError("unknown suite: '" + cfg.suite + "'");
  if (cfg.format != "json" && cfg.format != "csv") throw ConfigError("format must be json or csv");
  for (const auto& [k, v] : cfg.tolerances)
    if (!(v > 0.0)) throw ConfigError("tolerance " + k + " must be positive");
  if (cfg.d < 0) throw ConfigError("d must be positive");
  if (cfg.d && !cfg.theta.empty() && cfg.theta.size() != static_cast<size_t>(cfg.d * (cfg.d - 1) / 2))
    throw ConfigError("theta needs d(d-1)/2 entries");
  if (cfg.nmax <= 0 || cfg.lmax <= 0) throw ConfigError("nmax and lmax must be positive");
}

Record abs_record(const std::string& name, double measured, double reference, double tol) {
  return {name, measured, reference, tol, std::abs(measured - reference) <= tol, "abs"};
}

Record rel_record(const std::string& name, double measured, double reference, double tol, double floor) {
  const double scale = std::max(std::abs(reference), floor);
  return {name, measured, reference, tol, std::abs(measured - reference) <= tol * scale, "rel"};
}

Record max_record(const std::string& name, double measured, double tol) {
  return {name, measured, 0.0, tol, measured <= tol, "max"};
}

Record range_record(const std::string& name, double measured, double lo, double hi) {
  return {name, measured, lo, hi, lo <= measured && measured <= hi, "range"};
}

bool VerifyReport::pass() const {
  for (const auto& r : records)
    if (!r.pass) return false;
  return true;
}

VerifyReport run_suite(const VerifyConfig& cfg) {
  validate(cfg);
  VerifyReport rep;
  rep.suite = cfg.suite;
  rep.config = cfg.echo();
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (cfg.suite == "torus-trace")
      suite_torus_trace(cfg, rep);
    else if (cfg.suite == "moments")
      suite_moments(cfg, rep);
    else if (cfg.suite == "su2")
      suite_su2(cfg, rep);
    else if (cfg.suite == "symplectic")
      suite_symplectic(cfg, rep);
    else if (cfg.suite == "moyal")
      suite_moyal(cfg, rep);
    else
      suite_symbol_compactness(cfg, rep);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::string render_report(const VerifyReport& r, const std::string& format) {
  if (format == "csv") {
    std::string s = "name,measured,reference,tolerance,pass\n";
    for (const auto& x : r.records)
      s += x.name + "," + fmt(x.measured) + "," + fmt(x.reference) + "," + fmt(x.tolerance) + "," +
           (x.pass ? "true" : "false") + "\n";
    return s;
  }
  nlohmann::json j;
  j["suite"] = r.suite;
  j["pass"] = r.pass();
  j["config"] = r.config;
  j["info"] = r.info;
  j["wall_time_s"] = r.wall_time_s;
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& x : r.records)
    recs.push_back({{"name", x.name},
                    {"measured", x.measured},
                    {"reference", x.reference},
                    {"tolerance", x.tolerance},
                    {"kind", x.kind},
                    {"pass", x.pass}});
  j["records"] = recs;
  return j.dump(2) + "\n";
}

void emit_report(const VerifyReport& r, const std::string& format, const std::string& path) {
  write_text(render_report(r, format), path);
}

void write_text(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!std::cout) throw IoError("cannot write to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path);
  out << text;
  out.close();
  if (!out) throw IoError("cannot write " + path);
}

}  // namespace ncsym
