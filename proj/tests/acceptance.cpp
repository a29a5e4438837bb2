// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "flamewave/cli.hpp"
#include "flamewave/diagnostics.hpp"
#include "flamewave/limits.hpp"
#include "flamewave/oracle.hpp"
#include "flamewave/parallel.hpp"
#include "flamewave/speed.hpp"
#include "flamewave/wave.hpp"

namespace fw = flamewave;
namespace fs = std::filesystem;

namespace {

// Pinned tolerances.
constexpr double kAlphaOneRel = 0.05;
constexpr double kAlphaZeroRel = 0.03;
constexpr double kDivergenceRatio = 5.0;
constexpr double kLambdaZeroAbs = 1e-10;
constexpr double kIdentityRel = 1e-8;
constexpr double kBoundaryAbs = 1e-7;
constexpr double kHolderRel = 0.05;
constexpr double kOracleSpeedRel = 1e-6;
constexpr double kGoldenRel = 1e-9;
constexpr int kEnvelopeSamples = 1000;
constexpr int kPsiGrid = 50;
constexpr int kClosureGridN = 21;
constexpr double kOracleDt = 1e-3;

const std::vector<double> kAlphas = {0.25, 0.5, 0.75};
const std::vector<double> kLambdas = {0.5, 1.0, 2.0};
const std::vector<double> kThetas = {0.3, 0.5, 0.7};

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::vector<fw::PhysicalParams> full_grid() {
  std::vector<fw::PhysicalParams> g;
  for (double a : kAlphas)
    for (double l : kLambdas)
      for (double t : kThetas) g.push_back({a, l, t});
  return g;
}

// Solutions on the 3x3x3 grid, shared by criteria 5 to 8.
std::vector<fw::WaveSolution>& grid_solutions() {
  static std::vector<fw::WaveSolution> sols;
  if (sols.empty()) {
    const auto g = full_grid();
    sols.resize(g.size());
    fw::DiagnosticsOptions dopt;
    dopt.envelope_samples = kEnvelopeSamples;
    fw::SolverConfig cfg;
    fw::parallel_for(g.size(), 0, [&](std::size_t i) {
      auto s = fw::solve_traveling_wave(g[i], cfg, false);
      s.diagnostics = fw::run_diagnostics(s, cfg, dopt);
      sols[i] = std::move(s);
    });
  }
  return sols;
}

Outcome criterion1() {
  Outcome o;
  double worst = 0.0;
  for (double t : {0.3, 0.5, 0.7})
    for (double l : {0.5, 1.0, 2.0}) {
      const auto r = fw::solve_wave({0.995, l, t}, fw::SolverConfig{});
      const double e = rel(r.c, fw::speed_alpha_one(t, l));
      worst = std::max(worst, e);
      if (!(e < kAlphaOneRel)) o.pass = false;
    }
  o.detail = "worst rel err " + fmt(worst) + " (tol " + fmt(kAlphaOneRel) + ")";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const double c0 = fw::speed_alpha_zero(0.5).c;
  double worst_c = 0.0, worst_r = 0.0;
  for (double l : {0.5, 2.0}) {
    const auto r = fw::solve_wave({0.01, l, 0.5}, fw::SolverConfig{});
    worst_c = std::max(worst_c, rel(r.c, c0));
    worst_r = std::max(worst_r, rel(r.R, c0));
  }
  o.pass = worst_c < kAlphaZeroRel && worst_r < kAlphaZeroRel;
  o.detail = "c rel err " + fmt(worst_c) + ", R rel err " + fmt(worst_r) + " (tol " +
             fmt(kAlphaZeroRel) + ")";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::vector<double> alphas;
  for (int k = 1; k <= 9; ++k) alphas.push_back(0.1 * k);
  alphas.push_back(0.95);
  const auto rows = fw::sweep_alpha({0.5, 1.0, 0.5}, alphas, fw::SolverConfig{});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].ok) {
      o.pass = false;
      o.detail = "row " + std::to_string(i) + " failed: " + rows[i].error;
      return o;
    }
    if (i > 0 && !(rows[i].R > rows[i - 1].R)) o.pass = false;
  }
  const double ratio = rows.back().R / rows.front().R;
  if (!(ratio > kDivergenceRatio)) o.pass = false;
  o.detail = std::string(o.pass ? "strictly increasing" : "not increasing or ratio too small") +
             ", R(0.95)/R(0.1) = " + fmt(ratio);
  return o;
}

// Bisection on an explicit closed form, independent of the library root finder.
double invert_decreasing(const std::function<double(double)>& theta_of_c, double theta) {
  double lo = 1e-6, hi = 50.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (theta_of_c(mid) > theta) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

Outcome criterion4() {
  Outcome o;
  double worst0 = 0.0, worst_half = 0.0;
  for (double t : {0.2, 0.5, 0.8}) {
    const double ref0 = invert_decreasing(
        [](double c) { return (1.0 - std::exp(-c * c)) / (c * c); }, t);
    worst0 = std::max(worst0, std::abs(fw::lambda_zero_solution(0.0, t).c - ref0));
    const double ref_half = invert_decreasing(
        [](double c) {
          const double c2 = c * c;
          return 1.0 / c2 - 0.5 / (c2 * c2) * (1.0 - std::exp(-2.0 * c2));
        },
        t);
    worst_half = std::max(worst_half, std::abs(fw::lambda_zero_solution(0.5, t).c - ref_half));
  }
  o.pass = worst0 < kLambdaZeroAbs && worst_half < kLambdaZeroAbs;
  o.detail = "alpha=0 |dc| " + fmt(worst0) + ", alpha=1/2 |dc| " + fmt(worst_half) + " (tol " +
             fmt(kLambdaZeroAbs) + ")";
  return o;
}

Outcome criterion5() {
  Outcome o;
  double wi = 0.0, we = 0.0, wx = 0.0;
  for (const auto& s : grid_solutions()) {
    wi = std::max(wi, s.diagnostics.at("integral_v").residual);
    we = std::max(we, s.diagnostics.at("energy_vprime").residual);
    wx = std::max(wx, s.diagnostics.at("equiv_cross").residual);
  }
  o.pass = wi < kIdentityRel && we < kIdentityRel && wx < kIdentityRel;
  o.detail = "integral_v " + fmt(wi) + ", energy " + fmt(we) + ", cross " + fmt(wx) + " (tol " +
             fmt(kIdentityRel) + ")";
  return o;
}

Outcome criterion6() {
  Outcome o;
  double worst = 1e300;
  std::string where;
  for (const auto& s : grid_solutions()) {
    for (const char* name : {"c_lower_bound", "c_upper_bound", "R_lower_bound", "R_upper_bound",
                             "envelope_lower", "envelope_upper", "lower_curve"}) {
      const auto& c = s.diagnostics.at(name);
      if (c.residual < worst) {
        worst = c.residual;
        where = std::string(name) + " at " + fw::describe(s.params());
      }
      if (!(c.residual > 0.0)) o.pass = false;
    }
  }
  o.detail = "smallest margin " + fmt(worst) + " (" + where + ")";
  return o;
}

Outcome criterion7() {
  Outcome o;
  double worst = 0.0;
  for (const auto& s : grid_solutions()) {
    const auto& pr = s.profile;
    const double th = pr.params.theta;
    const double e = std::max({std::abs(pr.u.front() - th), std::abs(pr.u.back() - 1.0),
                               std::abs(pr.up.back()), std::abs(pr.v.back()),
                               std::abs(pr.vp.back()), std::abs(pr.up.front() - pr.c * th)});
    worst = std::max(worst, e);
  }
  o.pass = worst < kBoundaryAbs;
  o.detail = "max boundary error " + fmt(worst) + " (tol " + fmt(kBoundaryAbs) + ")";
  return o;
}

Outcome criterion8() {
  Outcome o;
  double worst = 0.0;
  for (const auto& s : grid_solutions()) {
    const double a = s.params().alpha;
    const double slope = fw::holder_slope(s.profile.tau, s.profile.v);
    const double e = std::abs(slope / (2.0 / (1.0 - a)) - 1.0);
    if (!(e < kHolderRel)) o.pass = false;
    worst = std::max(worst, std::isfinite(e) ? e : 1e300);
  }
  o.detail = "worst rel exponent err " + fmt(worst) + " (tol " + fmt(kHolderRel) + ")";
  return o;
}

std::vector<std::vector<double>> read_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing " + path.string());
  std::vector<std::vector<double>> rows;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<double> r;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) r.push_back(std::stod(cell));
    rows.push_back(r);
  }
  return rows;
}

Outcome criterion9() {
  Outcome o;
  const fs::path golden = FLAMEWAVE_GOLDEN_DIR;
  // Speed: live oracle run, also checked against the pinned fixture.
  const auto pinned = read_csv(golden / "oracle_speed.csv");
  double worst_speed = 0.0;
  std::vector<double> errs(pinned.size());
  fw::parallel_for(pinned.size(), 0, [&](std::size_t i) {
    const auto& r = pinned[i];
    const fw::PhysicalParams p{r[0], r[1], 0.5};
    const double c_main = fw::solve_speed(p, r[2], fw::SolverConfig{}).c;
    const double c_live = fw::oracle::shooting_speed(p, r[2], kOracleDt).c;
    errs[i] = std::max(rel(c_main, c_live), rel(c_main, r[4]));
  });
  for (double e : errs) worst_speed = std::max(worst_speed, e);
  if (!(worst_speed < kOracleSpeedRel)) o.pass = false;

  // Closure: main solver inside one refined cell of the grid search.
  const auto closure = read_csv(golden / "oracle_closure.csv");
  double worst_cells = 0.0;
  std::vector<double> cells(closure.size());
  fw::parallel_for(closure.size(), 0, [&](std::size_t i) {
    const auto& r = closure[i];
    const fw::PhysicalParams p{r[0], r[1], r[2]};
    fw::oracle::GridSearchOptions opt;
    opt.n = kClosureGridN;
    const auto g = fw::oracle::grid_search_closure(p, opt);
    const auto m = fw::solve_wave(p, fw::SolverConfig{});
    auto in_cells = [](double d, double cell) { return cell > 0.0 ? d / cell : (d == 0.0 ? 0.0 : 1e300); };
    cells[i] = std::max({in_cells(std::abs(m.v0_star - g.v0), g.cell_v0),
                         in_cells(std::abs(m.c - g.c), g.cell_c),
                         in_cells(std::abs(g.v0 - r[4]), g.cell_v0),
                         in_cells(std::abs(g.c - r[5]), g.cell_c)});
  });
  for (double c : cells) worst_cells = std::max(worst_cells, c);
  if (!(worst_cells <= 1.0)) o.pass = false;
  o.detail = "speed rel err " + fmt(worst_speed) + " (tol " + fmt(kOracleSpeedRel) +
             "), closure offset " + fmt(worst_cells) + " cells (tol 1)";
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"flamewave"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  return fw::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
}

Outcome criterion10() {
  Outcome o;
  const fs::path base = fs::temp_directory_path() / "flamewave_acceptance";
  fs::remove_all(base);
  std::vector<std::string> grid_args = {"sweep"};
  for (double a : kAlphas) grid_args.insert(grid_args.end(), {"--alpha", fw::cli::format_double(a)});
  for (double l : kLambdas) grid_args.insert(grid_args.end(), {"--lambda", fw::cli::format_double(l)});
  for (double t : kThetas) grid_args.insert(grid_args.end(), {"--theta", fw::cli::format_double(t)});
  int files = 0, differ = 0;
  for (const std::string threads : {"1", "4"}) {
    auto args = grid_args;
    args.insert(args.end(), {"--threads", threads, "--out", (base / ("run" + threads)).string()});
    if (run_cli(args) != 0) {
      o.pass = false;
      o.detail = "sweep run failed";
      return o;
    }
  }
  // Per-point solve outputs (profile + summary) for the full grid, twice.
  for (const auto& p : full_grid()) {
    for (const std::string run : {"a", "b"}) {
      char name[64];
      std::snprintf(name, sizeof name, "solve_%s_%g_%g_%g", run.c_str(), p.alpha, p.lambda, p.theta);
      if (run_cli({"solve", "--alpha", fw::cli::format_double(p.alpha), "--lambda",
                   fw::cli::format_double(p.lambda), "--theta", fw::cli::format_double(p.theta),
                   "--out", (base / name).string()}) != 0)
        o.pass = false;
    }
  }
  for (const auto& e : fs::directory_iterator(base / "run1")) {
    ++files;
    if (slurp(e.path()) != slurp(base / "run4" / e.path().filename())) ++differ;
  }
  for (const auto& d : fs::directory_iterator(base)) {
    const std::string n = d.path().filename().string();
    if (n.rfind("solve_a_", 0) != 0) continue;
    const fs::path twin = base / ("solve_b_" + n.substr(8));
    for (const char* f : {"profile.csv", "summary.json"}) {
      ++files;
      if (slurp(d.path() / f) != slurp(twin / f)) ++differ;
    }
  }
  if (differ != 0) o.pass = false;

  // Regression against the pinned grid values.
  const auto golden = read_csv(fs::path(FLAMEWAVE_GOLDEN_DIR) / "grid.csv");
  const auto now = read_csv(base / "run1" / "sweep.csv");
  double worst = 0.0;
  if (golden.size() != now.size()) {
    o.pass = false;
    worst = 1e300;
  } else {
    for (std::size_t i = 0; i < golden.size(); ++i)
      for (std::size_t k = 0; k < golden[i].size(); ++k)
        worst = std::max(worst, std::abs(golden[i][k] - now[i][k]) /
                                    std::max(std::abs(golden[i][k]), 1e-300));
  }
  if (!(worst <= kGoldenRel)) o.pass = false;
  fs::remove_all(base);
  o.detail = std::to_string(differ) + "/" + std::to_string(files) +
             " files differ between runs, golden rel dev " + fmt(worst) + " (tol " + fmt(kGoldenRel) + ")";
  return o;
}

Outcome criterion11() {
  Outcome o;
  const fw::SolverConfig cfg;
  int combos = 0, violations = 0;
  const std::vector<std::pair<double, double>> lv = {{0.5, 0.3}, {1.0, 0.5}, {2.0, 0.8}};
  for (double a : kAlphas)
    for (const auto& [l, v0] : lv) {
      ++combos;
      const fw::PhysicalParams p{a, l, 0.5};
      const double top = 1.5 * fw::c_brackets(p, v0).hi;
      double prev = -1e300;
      for (int k = 0; k < kPsiGrid; ++k) {
        const double c = top * k / (kPsiGrid - 1);
        const double v = fw::psi(p, v0, c, cfg);
        if (!(v > prev)) ++violations;
        prev = v;
      }
    }
  if (violations != 0) o.pass = false;

  double worst = 0.0;
  int restarts = 0;
  for (double a : kAlphas)
    for (double l : {0.5, 2.0})
      for (double t : kThetas) {
        const fw::PhysicalParams p{a, l, t};
        const auto ref = fw::solve_wave(p, cfg);
        const fw::Bracket I = fw::interval_i(p);
        const double w = I.width();
        for (const auto& br : {fw::Bracket{I.lo + 0.03 * w, I.hi}, fw::Bracket{I.lo, I.hi - 0.07 * w},
                               fw::Bracket{I.lo + 0.11 * w, I.hi - 0.05 * w}}) {
          if (!br.contains_strictly(ref.v0_star)) continue;
          ++restarts;
          const auto r = fw::solve_wave(p, cfg, br);
          worst = std::max(worst, std::abs(r.v0_star - ref.v0_star));
        }
      }
  if (!(worst <= 10.0 * cfg.v0_bisect_tol)) o.pass = false;
  o.detail = std::to_string(violations) + " psi order violations over " + std::to_string(combos) +
             " grids, restart |dv0| " + fmt(worst) + " over " + std::to_string(restarts) +
             " runs (tol " + fmt(10.0 * cfg.v0_bisect_tol) + ")";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"alpha near 1 speed vs closed form", criterion1},
      {"alpha near 0 limit for c and R", criterion2},
      {"R grows with alpha", criterion3},
      {"lambda = 0 root function vs closed forms", criterion4},
      {"integral and energy identities on grid", criterion5},
      {"speed, R and manifold bounds on grid", criterion6},
      {"boundary conditions on grid", criterion7},
      {"Holder tail exponent", criterion8},
      {"agreement with brute-force oracles", criterion9},
      {"determinism and golden regression", criterion10},
      {"psi monotonicity and restart stability", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::printf("[%s] %2zu %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
