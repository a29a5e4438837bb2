// Writes the golden fixtures under tests/golden:
//   oracle_speed.csv    fixed-step shooting speed for five (alpha, lambda, v0) triples
//   oracle_closure.csv  grid-search closure (v0*, c) with its final cell widths
//   grid.csv            main-solver regression values on the 3x3x3 grid
// The two oracle tables never call into the main solver.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "flamewave/cli.hpp"
#include "flamewave/oracle.hpp"
#include "flamewave/parallel.hpp"
#include "flamewave/wave.hpp"

namespace fw = flamewave;

namespace {

struct SpeedCase {
  double alpha, lambda, v0;
};

const std::vector<SpeedCase> kSpeedCases = {
    {0.5, 1.0, 0.5}, {0.25, 0.5, 0.7}, {0.75, 2.0, 0.3}, {0.5, 2.0, 0.4}, {0.9, 1.0, 0.5}};

const std::vector<fw::PhysicalParams> kClosureCases = {
    {0.5, 0.5, 0.5}, {0.5, 2.0, 0.5}, {0.5, 1.0, 0.5}, {0.25, 0.5, 0.3}, {0.75, 2.0, 0.7}};

constexpr double kSpeedDt = 1e-3;
constexpr int kClosureN = 21;

std::string num(double v) { return fw::cli::format_double(v); }

void save(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  std::cout << "wrote " << path.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : "tests/golden";
  std::filesystem::create_directories(dir);
  try {
    std::vector<std::string> speed_rows(kSpeedCases.size());
    fw::parallel_for(kSpeedCases.size(), 0, [&](std::size_t i) {
      const auto& k = kSpeedCases[i];
      const auto r = fw::oracle::shooting_speed({k.alpha, k.lambda, 0.5}, k.v0, kSpeedDt);
      speed_rows[i] = num(k.alpha) + ',' + num(k.lambda) + ',' + num(k.v0) + ',' + num(kSpeedDt) +
                      ',' + num(r.c) + ',' + num(r.R) + '\n';
    });
    std::string speed = "alpha,lambda,v0,dt,c,R\n";
    for (const auto& r : speed_rows) speed += r;
    save(dir / "oracle_speed.csv", speed);

    std::vector<std::string> closure_rows(kClosureCases.size());
    fw::oracle::GridSearchOptions opt;
    opt.n = kClosureN;
    fw::parallel_for(kClosureCases.size(), 0, [&](std::size_t i) {
      const auto& p = kClosureCases[i];
      const auto r = fw::oracle::grid_search_closure(p, opt);
      closure_rows[i] = num(p.alpha) + ',' + num(p.lambda) + ',' + num(p.theta) + ',' +
                        std::to_string(opt.n) + ',' + num(r.v0) + ',' + num(r.c) + ',' +
                        num(r.cell_v0) + ',' + num(r.cell_c) + ',' + num(r.defect) + '\n';
    });
    std::string closure = "alpha,lambda,theta,n,v0,c,cell_v0,cell_c,defect\n";
    for (const auto& r : closure_rows) closure += r;
    save(dir / "oracle_closure.csv", closure);

    std::vector<fw::cli::SweepEntry> rows;
    for (double a : {0.25, 0.5, 0.75})
      for (double l : {0.5, 1.0, 2.0})
        for (double t : {0.3, 0.5, 0.7}) {
          const auto sol = fw::solve_traveling_wave({a, l, t}, fw::SolverConfig{}, false);
          fw::cli::SweepEntry e;
          e.params = {a, l, t};
          e.ok = true;
          e.c = sol.c();
          e.R = sol.R();
          e.v0 = sol.v0();
          rows.push_back(e);
        }
    save(dir / "grid.csv", fw::cli::sweep_csv(rows, true));
  } catch (const std::exception& e) {
    std::cerr << "pinning failed: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
