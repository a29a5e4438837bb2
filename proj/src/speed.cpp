#include "flamewave/speed.hpp"

#include <cmath>

#include "flamewave/numerics/roots.hpp"

namespace flamewave {

namespace {

void check_v0(double v0) {
  if (!(v0 > 0.0 && v0 < 1.0)) throw DomainError("v0 must lie in (0, 1)");
}

double psi_on(const PhysicalParams& p, double v0, double c, const SolverConfig& cfg,
              double* first_step) {
  GrowOptions opt;
  if (first_step) opt.h_init = *first_step;
  const ManifoldCurve m = grow_manifold(p, c, v0, cfg, opt);
  if (first_step && !m.trajectory().empty()) *first_step = m.trajectory().steps.front().h;
  const double s0 = m.s_max();
  return std::pow(v0, m.p_exponent()) * m.reduced(s0) + (c / p.lambda) * (1.0 - v0);
}

}  // namespace

double psi(const PhysicalParams& p, double v0, double c, const SolverConfig& cfg) {
  check_v0(v0);
  return psi_on(p, v0, c, cfg, nullptr);
}

SpeedResult solve_speed(const PhysicalParams& p, double v0, const SolverConfig& cfg) {
  validate_main(p);
  check_v0(v0);
  const Bracket b = c_brackets(p, v0);
  // Warm start: the accepted first step of the previous curve seeds the next.
  double first_step = 0.0;
  auto f = [&](double c) { return psi_on(p, v0, c, cfg, &first_step); };

  numerics::RootOptions ro;
  ro.x_tol = cfg.c_bisect_tol * std::max(1.0, b.hi);
  ro.max_iter = cfg.max_iter;
  const double f_lo = f(b.lo);
  const double f_hi = f(b.hi);
  if (!(f_lo < 0.0 && f_hi > 0.0)) {
    throw SolverError("solve_speed: psi does not change sign over [c-, c+] for " +
                      describe(p));
  }
  const auto r = numerics::find_root(f, b.lo, b.hi, f_lo, f_hi, ro);
  return {r.root, r.f_root, r.iterations, b};
}

}  // namespace flamewave
