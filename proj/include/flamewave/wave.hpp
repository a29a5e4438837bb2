// End-to-end traveling-wave solve: closure, profiles and diagnostics.

#ifndef FLAMEWAVE_WAVE_HPP
#define FLAMEWAVE_WAVE_HPP

#include "flamewave/diagnostics.hpp"
#include "flamewave/fixedpoint.hpp"
#include "flamewave/profiles.hpp"

namespace flamewave {

struct WaveSolution {
  ClosureResult closure;
  Profile profile;
  DiagnosticsReport diagnostics;

  [[nodiscard]] const ManifoldCurve& manifold() const { return *closure.wave.manifold; }
  [[nodiscard]] double c() const { return closure.c; }
  [[nodiscard]] double R() const { return closure.R; }
  [[nodiscard]] double v0() const { return closure.v0_star; }
  [[nodiscard]] const PhysicalParams& params() const { return profile.params; }
};

/// Builds profiles for an already closed system and runs the diagnostics.
WaveSolution assemble_solution(const PhysicalParams& p, ClosureResult closure,
                               const SolverConfig& cfg, bool with_diagnostics = true);

/// solve_wave (or the Picard variant when cfg.picard) followed by assembly.
WaveSolution solve_traveling_wave(const PhysicalParams& p, const SolverConfig& cfg,
                                  bool with_diagnostics = true);

}  // namespace flamewave

#endif  // FLAMEWAVE_WAVE_HPP
