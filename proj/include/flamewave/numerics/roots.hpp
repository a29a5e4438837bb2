// Bracketed scalar root finding: bisection while the bracket is wide, then
// Illinois-modified regula falsi once it is below a relative threshold.

#ifndef FLAMEWAVE_NUMERICS_ROOTS_HPP
#define FLAMEWAVE_NUMERICS_ROOTS_HPP

#include <algorithm>
#include <cmath>

#include "flamewave/model.hpp"

namespace flamewave::numerics {

struct RootOptions {
  double x_tol = 1e-12;       // absolute bracket width at which to stop
  double switch_rel = 1e-3;   // relative width below which regula falsi is used
  int max_iter = 200;
};

struct RootResult {
  double root = 0.0;
  double f_root = 0.0;
  int iterations = 0;
  Bracket bracket;
};

/// Finds a zero of f on [lo, hi] given f(lo), f(hi) of opposite sign. The
/// returned root is the bracket end with the smaller |f|, or the exact zero
/// if one is hit. Throws SolverError when the endpoints do not bracket a sign
/// change or the iteration cap is reached.
template <class F>
RootResult find_root(F&& f, double lo, double hi, double f_lo, double f_hi,
                     const RootOptions& opt) {
  RootResult out;
  if (f_lo == 0.0) return {lo, 0.0, 0, {lo, hi}};
  if (f_hi == 0.0) return {hi, 0.0, 0, {lo, hi}};
  if (!(std::signbit(f_lo) != std::signbit(f_hi)) || !std::isfinite(f_lo) ||
      !std::isfinite(f_hi)) {
    throw SolverError("find_root: endpoints do not bracket a sign change");
  }
  int side = 0;  // -1: lo retained twice, +1: hi retained twice (Illinois)
  double true_lo = f_lo;
  double true_hi = f_hi;
  for (int it = 1; it <= opt.max_iter; ++it) {
    const double width = hi - lo;
    if (width <= opt.x_tol) {
      out.iterations = it - 1;
      break;
    }
    const double scale = std::max(std::abs(lo), std::abs(hi));
    double x;
    if (width > opt.switch_rel * scale) {
      x = 0.5 * (lo + hi);
    } else {
      x = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
      // Keep the update strictly inside and make sure the bracket shrinks
      // by at least half the tolerance.
      const double guard = 0.5 * opt.x_tol;
      if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
      x = std::clamp(x, lo + guard, hi - guard);
    }
    const double fx = f(x);
    if (!std::isfinite(fx)) throw SolverError("find_root: non-finite function value");
    if (fx == 0.0) return {x, 0.0, it, {x, x}};
    if (std::signbit(fx) == std::signbit(f_lo)) {
      lo = x;
      f_lo = fx;
      true_lo = fx;
      if (side == -1) f_hi *= 0.5;
      side = -1;
    } else {
      hi = x;
      f_hi = fx;
      true_hi = fx;
      if (side == +1) f_lo *= 0.5;
      side = +1;
    }
    if (it == opt.max_iter && hi - lo > opt.x_tol) {
      throw SolverError("find_root: iteration cap exceeded");
    }
    out.iterations = it;
  }
  out.bracket = {lo, hi};
  out.root = std::abs(true_lo) <= std::abs(true_hi) ? lo : hi;
  out.f_root = std::abs(true_lo) <= std::abs(true_hi) ? true_lo : true_hi;
  return out;
}

template <class F>
RootResult find_root(F&& f, double lo, double hi, const RootOptions& opt) {
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  return find_root(f, lo, hi, f_lo, f_hi, opt);
}

}  // namespace flamewave::numerics

#endif  // FLAMEWAVE_NUMERICS_ROOTS_HPP
