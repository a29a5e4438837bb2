#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "flamewave/cli.hpp"

using namespace flamewave;
using namespace flamewave::cli;
namespace fs = std::filesystem;

namespace {

int run_cli(std::vector<std::string> args, std::string* out = nullptr, std::string* err = nullptr) {
  args.insert(args.begin(), "flamewave");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), o, e);
  if (out) *out = o.str();
  if (err) *err = e.str();
  return code;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("flamewave_test_" + name);
  fs::remove_all(d);
  return d;
}

std::optional<RunSpec> parse(std::vector<std::string> args) {
  args.insert(args.begin(), "flamewave");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return parse_args(static_cast<int>(argv.size()), argv.data(), nullptr);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("parse solve") {
    const auto s = parse({"solve", "--alpha", "0.5", "--lambda", "1", "--theta", "0.5", "--out", "run1/"});
    REQUIRE(s);
    CHECK(s->command == Command::Solve);
    CHECK(s->alphas == std::vector<double>{0.5});
    CHECK(s->output_dir == "run1/");
  }

  TEST_CASE("range expansion") {
    const auto v = expand_range("0.1:0.9:0.1");
    REQUIRE(v.size() == 9);
    CHECK(v[2] == 0.3);
    CHECK(v.back() == 0.9);
    const auto s = parse({"sweep", "--alpha", "0.1:0.9:0.1", "--alpha", "0.95"});
    REQUIRE(s);
    CHECK(s->alphas.size() == 10);
    CHECK(s->param_grid().size() == 10);
    CHECK_THROWS_AS(expand_range("0.1:0.9"), UsageError);
    CHECK_THROWS_AS(expand_range("abc"), UsageError);
  }

  TEST_CASE("exit codes") {
    CHECK(run_cli({"solve", "--alpha", "1.5"}) == kValidation);
    CHECK(run_cli({"solve", "--theta", "0"}) == kValidation);
    CHECK(run_cli({}) == kUsage);
    CHECK(run_cli({"solve", "--bogus"}) == kUsage);
    CHECK(run_cli({"limit"}) == kUsage);
    CHECK(run_cli({"limit", "--kind", "what"}) == kUsage);
    CHECK(run_cli({"solve", "--config", "/nonexistent/flamewave.cfg"}) == kIo);
    std::string out;
    CHECK(run_cli({"--help"}, &out) == kOk);
    CHECK(out.find("solve") != std::string::npos);
  }

  TEST_CASE("config file with command-line override") {
    const fs::path d = scratch("cfg");
    fs::create_directories(d);
    std::ofstream(d / "run.cfg") << "# comment\nalpha = 0.3\ntheta=0.4\ngrid=512\n";
    const auto s = parse({"solve", "--config", (d / "run.cfg").string(), "--theta", "0.6"});
    REQUIRE(s);
    CHECK(s->alphas == std::vector<double>{0.3});
    CHECK(s->thetas == std::vector<double>{0.6});
    CHECK(s->cfg.grid_points == 512);
    std::ofstream(d / "bad.cfg") << "colour=blue\n";
    CHECK_THROWS_AS(parse({"solve", "--config", (d / "bad.cfg").string()}), UsageError);
  }

  TEST_CASE("solve writes exactly two files, deterministically") {
    const fs::path a = scratch("solve_a"), b = scratch("solve_b");
    REQUIRE(run_cli({"solve", "--alpha", "0.5", "--lambda", "2", "--theta", "0.5", "--out", a.string()}) == kOk);
    REQUIRE(run_cli({"solve", "--alpha", "0.5", "--lambda", "2", "--theta", "0.5", "--out", b.string()}) == kOk);
    std::vector<std::string> names;
    for (const auto& e : fs::directory_iterator(a)) names.push_back(e.path().filename().string());
    std::sort(names.begin(), names.end());
    CHECK(names == std::vector<std::string>{"profile.csv", "summary.json"});
    CHECK(slurp(a / "profile.csv") == slurp(b / "profile.csv"));
    CHECK(slurp(a / "summary.json") == slurp(b / "summary.json"));
    const std::string csv = slurp(a / "profile.csv");
    CHECK(csv.rfind("xi,v,vp,u,up,region\n", 0) == 0);
    const auto j = nlohmann::json::parse(slurp(a / "summary.json"));
    CHECK(j["alpha"] == 0.5);
    CHECK(j["lambda"] == 2.0);
    CHECK(j["all_pass"] == true);
    CHECK(j["v0"].get<double>() > 0.25);
    CHECK(j["branch"].is_string());
    CHECK(j["checks"].size() > 20);
  }

  TEST_CASE("sweep outputs") {
    const fs::path d = scratch("sweep");
    REQUIRE(run_cli({"sweep", "--alpha", "0.2:0.6:0.2", "--out", d.string(), "--threads", "2"}) == kOk);
    const std::string csv = slurp(d / "sweep.csv");
    CHECK(csv.rfind("alpha,c,R,v0\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
    CHECK(fs::exists(d / "row_000.json"));
    CHECK(fs::exists(d / "row_002.json"));
    const fs::path d2 = scratch("sweep2");
    REQUIRE(run_cli({"sweep", "--alpha", "0.5", "--lambda", "0.5", "--lambda", "2", "--out", d2.string()}) == kOk);
    CHECK(slurp(d2 / "sweep.csv").rfind("alpha,lambda,theta,c,R,v0\n", 0) == 0);
  }

  TEST_CASE("verify, limit and portrait") {
    const fs::path d = scratch("verify");
    CHECK(run_cli({"verify", "--out", d.string()}) == kOk);
    CHECK(fs::exists(d / "summary.json"));
    const fs::path l = scratch("limit");
    REQUIRE(run_cli({"limit", "--kind", "lambda0", "--alpha", "0.5", "--out", l.string()}) == kOk);
    const auto j = nlohmann::json::parse(slurp(l / "summary.json"));
    CHECK(j["kind"] == "lambda0");
    CHECK(std::abs(j["c"].get<double>() - 1.130692063632302) < 1e-10);
    REQUIRE(run_cli({"limit", "--kind", "alpha1", "--out", l.string()}) == kOk);
    CHECK(nlohmann::json::parse(slurp(l / "summary.json"))["R"].is_null());
    const fs::path p = scratch("portrait");
    REQUIRE(run_cli({"portrait", "--c", "0.9", "--seed", "0.5,-0.2", "--seed", "-0.5,0.2", "--out", p.string()}) == kOk);
    CHECK(slurp(p / "portrait_000.csv").rfind("t,x,y\n", 0) == 0);
    CHECK(fs::exists(p / "portrait_001.csv"));
  }

  TEST_CASE("number formatting") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(json_number(std::nan("")) == "null");
    CHECK(format_double(std::nan("")).empty());
  }
}
