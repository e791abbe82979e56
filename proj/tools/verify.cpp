#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ncsym/verify.hpp"

int main(int argc, char** argv) {
  using namespace ncsym;
  CLI::App app{"Numerical verification suites for noncommutative symbol calculus"};
  app.allow_extras();

  std::string suite, config_path;
  std::vector<std::pair<std::string, std::string>> flags;
  auto opt = [&](const std::string& name, const std::string& help) {
    app.add_option_function<std::string>(
        "--" + name, [&flags, name](const std::string& v) { flags.emplace_back(name, v); }, help);
  };
  app.add_option("suite_pos", suite, "suite name");
  app.add_option("--suite", suite, "torus-trace | su2 | moments | symplectic | moyal | symbol-compactness");
  app.add_option("--config", config_path, "key = value configuration file");
  opt("d", "dimension");
  opt("theta", "upper-triangular entries of theta, comma separated");
  opt("nmax", "largest lattice radius");
  opt("lmax", "largest SU(2) spin");
  opt("max-degree", "largest moment degree");
  app.add_option_function<std::vector<std::string>>(
      "--word",
      [&flags](const std::vector<std::string>& ws) {
        for (const auto& w : ws) flags.emplace_back("word", w);
      },
      "word in b1, b2, b3 such as b1b2 or b3^4");
  opt("radii", "comma separated radii");
  opt("samples", "sample count");
  opt("seed", "random seed");
  opt("out", "output path, stdout when absent");
  opt("format", "json | csv");
  opt("table", "path for the suite's CSV side table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    VerifyConfig cfg;
    if (!config_path.empty()) cfg = parse_config_file(config_path);
    if (!suite.empty()) cfg.suite = suite;
    if (std::any_of(flags.begin(), flags.end(), [](const auto& f) { return f.first == "word"; })) cfg.words.clear();
    for (const auto& [k, v] : flags) apply_setting(cfg, k, v);
    const auto extras = app.remaining();
    for (size_t i = 0; i < extras.size(); ++i) {
      const std::string& a = extras[i];
      if (a.rfind("--tol.", 0) != 0) throw ConfigError("unexpected argument: " + a);
      const auto eq = a.find('=');
      if (eq != std::string::npos) {
        apply_setting(cfg, a.substr(2, eq - 2), a.substr(eq + 1));
      } else {
        if (i + 1 >= extras.size()) throw ConfigError("missing value for " + a);
        apply_setting(cfg, a.substr(2), extras[++i]);
      }
    }
    if (cfg.suite.empty()) throw ConfigError("no suite given");
    const VerifyReport rep = run_suite(cfg);
    emit_report(rep, cfg.format, cfg.out);
    if (!cfg.table.empty()) {
      if (rep.table_csv.empty()) throw ConfigError("suite " + cfg.suite + " has no side table");
      write_text(rep.table_csv, cfg.table);
    }
    for (const auto& r : rep.records)
      if (!r.pass) std::cerr << "FAIL " << r.name << " measured " << r.measured << "\n";
    return rep.pass() ? 0 : 1;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
