#include "flamewave/settling.hpp"

#include <algorithm>
#include <cmath>

namespace flamewave {

SettlingResult settling_time(const ManifoldCurve& m, double x, const SolverConfig& cfg) {
  if (!(x > 0.0) || x > m.x_max() * (1.0 + 1e-12))
    throw DomainError("settling_time: x outside (0, x_max]");
  const double s = std::min(m.s_of_x(x), m.s_max());
  const double mexp = m.m_exponent();
  SettlingResult out;
  const double s_tail = std::min(s, m.seed_s());
  out.tail_part = m.tail().settling(s_tail);
  if (s > s_tail) {
    out.numeric_part = integrate_along(
        m, s_tail, s, [mexp](const ReducedPoint& pt) { return -1.0 / (mexp * pt.Y); },
        cfg.quad_tol, &out.quad_error_estimate);
  }
  out.T = out.tail_part + out.numeric_part;
  if (!(out.T > 0.0) || !std::isfinite(out.T))
    throw SolverError("settling_time: quadrature did not produce a positive time");
  return out;
}

ScalarWave trailing_interface(const PhysicalParams& p, double v0, const SolverConfig& cfg) {
  ScalarWave w;
  w.v0 = v0;
  w.speed = solve_speed(p, v0, cfg);
  w.c = w.speed.c;
  auto curve = std::make_shared<ManifoldCurve>(grow_manifold(p, w.c, v0, cfg));
  w.settling = settling_time(*curve, v0, cfg);
  w.R = w.settling.T;
  w.manifold = std::move(curve);
  return w;
}

}  // namespace flamewave
