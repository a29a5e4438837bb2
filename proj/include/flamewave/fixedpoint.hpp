// Closure of the coupled system: find v0* in I such that the scalar wave for
// v0* also satisfies the enthalpy integral equation, i.e. u(0) = theta.
//
//   lambda < 1:  v0 = 1 - theta + (1 - lambda) int_0^R e^{-c s} (-v'(s)) ds
//   lambda > 1:  v0 = (1/lambda) [1 - theta - c (1 - lambda) int_0^R e^{-c s} v(s) ds]
//   lambda = 1:  v0 = 1 - theta
//
// Both forms are valid for every lambda; the branch only selects which one
// drives the root search.

#ifndef FLAMEWAVE_FIXEDPOINT_HPP
#define FLAMEWAVE_FIXEDPOINT_HPP

#include <optional>

#include "flamewave/model.hpp"
#include "flamewave/settling.hpp"

namespace flamewave {

enum class ClosureBranch { LambdaBelowOne, LambdaAboveOne, LambdaEqualOne };

const char* to_string(ClosureBranch b);

struct ClosureResult {
  double v0_star = 0.0;
  double c = 0.0;
  double R = 0.0;
  double residual = 0.0;
  ClosureBranch branch = ClosureBranch::LambdaEqualOne;
  int iterations = 0;
  ScalarWave wave;
};

/// int_0^R e^{-c xi} (-v'(xi)) d xi for a solved scalar wave.
double weighted_slope_integral(const ScalarWave& w, const SolverConfig& cfg);
/// int_0^R e^{-c xi} v(xi) d xi for a solved scalar wave.
double weighted_value_integral(const ScalarWave& w, const SolverConfig& cfg);

/// Unprojected defect of the lambda < 1 map: 1-theta+(1-lambda) J - v0.
double residual_phi(const PhysicalParams& p, const ScalarWave& w, const SolverConfig& cfg);
double residual_phi(const PhysicalParams& p, double v0, const SolverConfig& cfg);

/// Unprojected defect of the lambda > 1 map.
double residual_psi(const PhysicalParams& p, const ScalarWave& w, const SolverConfig& cfg);
double residual_psi(const PhysicalParams& p, double v0, const SolverConfig& cfg);

ClosureBranch branch_for(const PhysicalParams& p);

/// Bracketed root search for v0* over interval_i(p), or over `bracket` when
/// given. For lambda = 1 the scalar wave at 1 - theta is returned directly.
ClosureResult solve_wave(const PhysicalParams& p, const SolverConfig& cfg,
                         std::optional<Bracket> bracket = std::nullopt);

/// Experimental: Picard iteration v0 <- P(Phi(v0)) (or Psi for lambda > 1)
/// from the midpoint of I. Throws SolverError when it does not settle
/// within cfg.max_iter iterations.
ClosureResult solve_wave_picard(const PhysicalParams& p, const SolverConfig& cfg);

}  // namespace flamewave

#endif  // FLAMEWAVE_FIXEDPOINT_HPP
