#include "flamewave/fixedpoint.hpp"

#include <cmath>

#include "flamewave/numerics/roots.hpp"

namespace flamewave {

const char* to_string(ClosureBranch b) {
  switch (b) {
    case ClosureBranch::LambdaBelowOne:
      return "lambda<1";
    case ClosureBranch::LambdaAboveOne:
      return "lambda>1";
    case ClosureBranch::LambdaEqualOne:
      return "lambda=1";
  }
  return "?";
}

ClosureBranch branch_for(const PhysicalParams& p) {
  if (p.lambda < 1.0) return ClosureBranch::LambdaBelowOne;
  if (p.lambda > 1.0) return ClosureBranch::LambdaAboveOne;
  return ClosureBranch::LambdaEqualOne;
}

// Along the manifold, d xi = -dx / y and xi = R - T(x). In the reduced
// variable dx = (x / (m s)) ds, so
//   int e^{-c xi} (-v') d xi = (1/m) int e^{-c (R - T)} x / s      ds
//   int e^{-c xi}   v   d xi = (1/m) int e^{-c (R - T)} x / |Y|    ds
double weighted_slope_integral(const ScalarWave& w, const SolverConfig& cfg) {
  const ManifoldCurve& m = *w.manifold;
  const double mexp = m.m_exponent();
  const double c = w.c;
  const double R = w.R;
  return integrate_along(
      m, 0.0, m.s_max(),
      [=](const ReducedPoint& pt) {
        if (pt.s == 0.0) return 0.0;
        return std::exp(-c * (R - pt.tau)) * pt.x / (mexp * pt.s);
      },
      cfg.quad_tol);
}

double weighted_value_integral(const ScalarWave& w, const SolverConfig& cfg) {
  const ManifoldCurve& m = *w.manifold;
  const double mexp = m.m_exponent();
  const double c = w.c;
  const double R = w.R;
  return integrate_along(
      m, 0.0, m.s_max(),
      [=](const ReducedPoint& pt) {
        return std::exp(-c * (R - pt.tau)) * pt.x / (-mexp * pt.Y);
      },
      cfg.quad_tol);
}

double residual_phi(const PhysicalParams& p, const ScalarWave& w, const SolverConfig& cfg) {
  return 1.0 - p.theta + (1.0 - p.lambda) * weighted_slope_integral(w, cfg) - w.v0;
}

double residual_phi(const PhysicalParams& p, double v0, const SolverConfig& cfg) {
  return residual_phi(p, trailing_interface(p, v0, cfg), cfg);
}

double residual_psi(const PhysicalParams& p, const ScalarWave& w, const SolverConfig& cfg) {
  return (1.0 - p.theta - w.c * (1.0 - p.lambda) * weighted_value_integral(w, cfg)) / p.lambda -
         w.v0;
}

double residual_psi(const PhysicalParams& p, double v0, const SolverConfig& cfg) {
  return residual_psi(p, trailing_interface(p, v0, cfg), cfg);
}

namespace {

double branch_residual(const PhysicalParams& p, ClosureBranch b, const ScalarWave& w,
                       const SolverConfig& cfg) {
  switch (b) {
    case ClosureBranch::LambdaBelowOne:
      return residual_phi(p, w, cfg);
    case ClosureBranch::LambdaAboveOne:
      return residual_psi(p, w, cfg);
    case ClosureBranch::LambdaEqualOne:
      return 1.0 - p.theta - w.v0;
  }
  return 0.0;
}

}  // namespace

ClosureResult solve_wave(const PhysicalParams& p, const SolverConfig& cfg,
                         std::optional<Bracket> bracket) {
  validate_main(p);
  validate(cfg);
  ClosureResult out;
  out.branch = branch_for(p);
  if (out.branch == ClosureBranch::LambdaEqualOne) {
    out.wave = trailing_interface(p, 1.0 - p.theta, cfg);
    out.v0_star = out.wave.v0;
    out.c = out.wave.c;
    out.R = out.wave.R;
    out.residual = 0.0;
    return out;
  }

  const Bracket b = bracket.value_or(interval_i(p));
  auto G = [&](double v0) { return branch_residual(p, out.branch, trailing_interface(p, v0, cfg), cfg); };
  const double g_lo = G(b.lo);
  const double g_hi = G(b.hi);
  if (!(g_lo > 0.0 && g_hi < 0.0)) {
    throw SolverError("solve_wave: closure residual has no sign change over I for " +
                      describe(p));
  }
  numerics::RootOptions ro;
  ro.x_tol = 0.25 * cfg.v0_bisect_tol;
  ro.max_iter = cfg.max_iter;
  const auto r = numerics::find_root(G, b.lo, b.hi, g_lo, g_hi, ro);

  out.wave = trailing_interface(p, r.root, cfg);
  out.v0_star = r.root;
  out.c = out.wave.c;
  out.R = out.wave.R;
  out.residual = branch_residual(p, out.branch, out.wave, cfg);
  out.iterations = r.iterations;
  return out;
}

ClosureResult solve_wave_picard(const PhysicalParams& p, const SolverConfig& cfg) {
  validate_main(p);
  validate(cfg);
  ClosureResult out;
  out.branch = branch_for(p);
  const Bracket I = interval_i(p);
  double v0 = 0.5 * (I.lo + I.hi);
  for (int it = 1; it <= cfg.max_iter; ++it) {
    ScalarWave w = trailing_interface(p, v0, cfg);
    const double g = branch_residual(p, out.branch, w, cfg);
    const double next = project(I, v0 + g);
    if (std::abs(next - v0) <= cfg.v0_bisect_tol) {
      out.wave = std::move(w);
      out.v0_star = v0;
      out.c = out.wave.c;
      out.R = out.wave.R;
      out.residual = g;
      out.iterations = it;
      return out;
    }
    v0 = next;
  }
  throw SolverError("solve_wave_picard: no convergence within max_iter for " + describe(p));
}

}  // namespace flamewave
