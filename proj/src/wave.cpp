#include "flamewave/wave.hpp"

namespace flamewave {

WaveSolution assemble_solution(const PhysicalParams& p, ClosureResult closure,
                               const SolverConfig& cfg, bool with_diagnostics) {
  WaveSolution sol;
  sol.closure = std::move(closure);
  const ManifoldCurve& m = *sol.closure.wave.manifold;
  sol.profile = build_v_profile(m, sol.closure.c, sol.closure.v0_star, sol.closure.R,
                                cfg.grid_points, cfg);
  sol.profile.params = p;
  build_u_profile(sol.profile, m, cfg);
  if (with_diagnostics) sol.diagnostics = run_diagnostics(sol, cfg);
  return sol;
}

WaveSolution solve_traveling_wave(const PhysicalParams& p, const SolverConfig& cfg,
                                  bool with_diagnostics) {
  ClosureResult closure = cfg.picard ? solve_wave_picard(p, cfg) : solve_wave(p, cfg);
  return assemble_solution(p, std::move(closure), cfg, with_diagnostics);
}

}  // namespace flamewave
