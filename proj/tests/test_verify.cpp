#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "ncsym/verify.hpp"

using namespace ncsym;
namespace fs = std::filesystem;

namespace {

std::string bin() {
  const char* b = std::getenv("NCSYM_VERIFY_BIN");
  return b ? b : "./verify";
}

int run(const std::string& args) {
  const int st = std::system((bin() + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path tmp(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "ncsym_verify_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("config parsing") {
  const fs::path p = tmp("cfg.txt");
  {
    std::ofstream out(p);
    out << "# pinned run\nsuite = su2\nlmax = 20   # small\nword = b1b1, b3^4\ntol.ratio = 0.05\nseed = 7\n";
  }
  const VerifyConfig cfg = parse_config_file(p.string());
  CHECK(cfg.suite == "su2");
  CHECK(cfg.lmax == 20);
  CHECK(cfg.words.size() == 2);
  CHECK(cfg.tol("ratio", 1.0) == 0.05);
  CHECK(cfg.tol("other", 1.0) == 1.0);
  CHECK(cfg.seed == 7);
  VerifyConfig c2;
  CHECK_THROWS_AS(apply_setting(c2, "bogus", "1"), ConfigError);
  CHECK_THROWS_AS(apply_setting(c2, "nmax", "abc"), ConfigError);
  CHECK_THROWS_AS(apply_setting(c2, "d", "2.5"), ConfigError);
  CHECK_THROWS_AS(parse_config_file(tmp("missing.txt").string()), IoError);
  c2.suite = "nope";
  CHECK_THROWS_AS(validate(c2), ConfigError);
  c2.suite = "moments";
  c2.tolerances["x"] = -1.0;
  CHECK_THROWS_AS(validate(c2), ConfigError);
}

TEST_CASE("records") {
  CHECK(rel_record("a", 1.01, 1.0, 0.02).pass);
  CHECK_FALSE(rel_record("a", 1.03, 1.0, 0.02).pass);
  CHECK(rel_record("a", 0.001, 0.0, 0.5, 0.01).pass);
  CHECK(abs_record("a", 0.5, 0.4, 0.2).pass);
  CHECK_FALSE(max_record("a", 2.0, 1.0).pass);
  CHECK(range_record("a", 2.0, 1.8, 2.2).pass);
  CHECK_FALSE(range_record("a", 2.3, 1.8, 2.2).pass);
}

TEST_CASE("report schema") {
  VerifyConfig cfg;
  cfg.suite = "moments";
  cfg.d = 2;
  cfg.max_degree = 6;
  const VerifyReport r = run_suite(cfg);
  CHECK(r.pass());
  const auto j = nlohmann::json::parse(render_report(r, "json"));
  CHECK(j.is_object());
  CHECK(j["records"].is_array());
  CHECK(j["suite"] == "moments");
  CHECK(j["pass"] == true);
  for (const auto& rec : j["records"])
    for (const char* k : {"name", "measured", "reference", "tolerance", "pass"}) CHECK(rec.contains(k));
  const std::string csv = render_report(r, "csv");
  CHECK(csv.rfind("name,measured,reference,tolerance,pass\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(r.records.size()) + 1);
}

TEST_CASE("overall pass follows records") {
  VerifyReport r;
  r.records.push_back(max_record("a", 0.0, 1.0));
  CHECK(r.pass());
  r.records.push_back(max_record("b", 2.0, 1.0));
  CHECK_FALSE(r.pass());
}

TEST_CASE("cli exit codes") {
  CHECK(run("moments --d 2 --max-degree 10") == 0);
  CHECK(run("--suite su2 --lmax 20 --word b1b1") == 0);
  CHECK(run("su2 --lmax 20 --word b3^4 --tol.ratio 1e-9") == 1);
  CHECK(run("moments --tol.recursion=1e-30") == 1);
  CHECK(run("nosuch") == 2);
  CHECK(run("") == 2);
  CHECK(run("moments --d 3") == 2);
  CHECK(run("moments --nmax abc") == 2);
  CHECK(run("moments --format xml") == 2);
  CHECK(run("su2 --word q7") == 2);
  CHECK(run("moments --config " + tmp("absent.cfg").string()) == 3);
  CHECK(run("moments --out /nonexistent_dir/x/report.json") == 3);
}

TEST_CASE("cli output is deterministic") {
  const fs::path a = tmp("a.json"), b = tmp("b.json"), c = tmp("c.csv");
  REQUIRE(run("symbol-compactness --seed 5 --radii 50,100 --out " + a.string()) == 0);
  REQUIRE(run("symbol-compactness --seed 5 --radii 50,100 --out " + b.string()) == 0);
  auto ja = nlohmann::json::parse(slurp(a)), jb = nlohmann::json::parse(slurp(b));
  ja.erase("wall_time_s");
  jb.erase("wall_time_s");
  CHECK(ja.dump() == jb.dump());
  CHECK(ja["config"]["seed"] == 5);
  REQUIRE(run("su2 --lmax 10 --format csv --out " + c.string()) == 0);
  const std::string first = slurp(c);
  REQUIRE(run("su2 --lmax 10 --format csv --out " + c.string()) == 0);
  CHECK(slurp(c) == first);
  CHECK(first.rfind("name,measured,reference,tolerance,pass", 0) == 0);
}

TEST_CASE("flags override the config file") {
  const fs::path cfg = tmp("over.cfg"), out = tmp("over.json");
  {
    std::ofstream o(cfg);
    o << "suite = su2\nlmax = 200\nword = b1b1\n";
  }
  REQUIRE(run("--config " + cfg.string() + " --lmax 12 --out " + out.string()) == 0);
  const auto j = nlohmann::json::parse(slurp(out));
  CHECK(j["config"]["lmax"] == 12);
  CHECK(j["suite"] == "su2");
}

TEST_CASE("side tables") {
  const fs::path t = tmp("moments.csv");
  REQUIRE(run("moments --d 2 --max-degree 4 --table " + t.string()) == 0);
  CHECK(slurp(t).rfind("n_1,n_2,value", 0) == 0);
  CHECK(run("moyal --table " + tmp("none.csv").string()) == 2);
}
