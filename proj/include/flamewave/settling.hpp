// Settling time T(x, c) = integral_0^x ds / |y_c(s)| along the stable
// manifold, and the trailing-interface position R(v0) = T(v0, c(v0)).

#ifndef FLAMEWAVE_SETTLING_HPP
#define FLAMEWAVE_SETTLING_HPP

#include "flamewave/manifold.hpp"
#include "flamewave/model.hpp"
#include "flamewave/speed.hpp"

namespace flamewave {

struct SettlingResult {
  double T = 0.0;
  double tail_part = 0.0;     // [0, hand-off], from the tail series
  double numeric_part = 0.0;  // [hand-off, x], adaptive quadrature
  double quad_error_estimate = 0.0;
};

/// The integrable singularity at s = 0 is removed by the tail series; the
/// remaining part is integrated in the reduced variable, where 1/|y| dx
/// becomes ds / (m |Y(s)|).
SettlingResult settling_time(const ManifoldCurve& m, double x, const SolverConfig& cfg);

/// Solution of the scalar free-boundary problem for a given v0.
struct ScalarWave {
  double v0 = 0.0;
  double c = 0.0;
  double R = 0.0;
  SpeedResult speed;
  SettlingResult settling;
  ManifoldPtr manifold;
};

ScalarWave trailing_interface(const PhysicalParams& p, double v0, const SolverConfig& cfg);

}  // namespace flamewave

#endif  // FLAMEWAVE_SETTLING_HPP
