// Wave speed c(v0) for a prescribed concentration v0 at the ignition
// interface: the unique zero of psi(v0, c) = y_c(v0) + (c / lambda)(1 - v0).

#ifndef FLAMEWAVE_SPEED_HPP
#define FLAMEWAVE_SPEED_HPP

#include "flamewave/manifold.hpp"
#include "flamewave/model.hpp"

namespace flamewave {

struct SpeedResult {
  double c = 0.0;
  double psi_residual = 0.0;
  int iterations = 0;
  Bracket bracket_used;
};

/// psi(v0, c): positive when the initial slope lies below the manifold.
double psi(const PhysicalParams& p, double v0, double c, const SolverConfig& cfg);

/// Bracketed root of psi(v0, .) over c_brackets(p, v0).
SpeedResult solve_speed(const PhysicalParams& p, double v0, const SolverConfig& cfg);

}  // namespace flamewave

#endif  // FLAMEWAVE_SPEED_HPP
