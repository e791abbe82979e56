#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace ncsym {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VerifyConfig {
  std::string suite;
  int d = 0;                   // 0: suite default
  std::vector<double> theta;   // upper-triangular entries, row by row
  double nmax = 4096;
  double lmax = 200;
  int max_degree = 10;
  std::vector<std::string> words;
  std::vector<double> radii;
  long samples = 0;            // 0: suite default
  std::uint64_t seed = 1;
  std::map<std::string, double> tolerances;
  std::string out;             // empty: stdout
  std::string table;           // optional CSV side table
  std::string format = "json";

  double tol(const std::string& check, double fallback) const;
  nlohmann::json echo() const;
};

const std::vector<std::string>& known_suites();

// key = value lines, '#' comments; keys as the long flags without dashes
VerifyConfig parse_config_file(const std::string& path);
void apply_setting(VerifyConfig& cfg, const std::string& key, const std::string& value);
void validate(const VerifyConfig& cfg);

struct Record {
  std::string name;
  double measured = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string kind;  // abs | rel | max | range
};

Record abs_record(const std::string& name, double measured, double reference, double tol);
Record rel_record(const std::string& name, double measured, double reference, double tol, double floor = 0.0);
Record max_record(const std::string& name, double measured, double tol);
// lo <= measured <= hi, stored as reference = lo, tolerance = hi
Record range_record(const std::string& name, double measured, double lo, double hi);

struct VerifyReport {
  std::string suite;
  std::vector<Record> records;
  nlohmann::json info = nlohmann::json::object();
  nlohmann::json config;
  double wall_time_s = 0.0;
  std::string table_csv;  // partial sums, per-l traces, moment table or beta matrix

  bool pass() const;
};

VerifyReport run_suite(const VerifyConfig& cfg);

std::string render_report(const VerifyReport& r, const std::string& format);
void emit_report(const VerifyReport& r, const std::string& format, const std::string& path);
void write_text(const std::string& text, const std::string& path);

}  // namespace ncsym
