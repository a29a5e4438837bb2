// Adaptive Gauss-Kronrod (7/15) bisection on top of Boost's fixed rule.
//
// Boost 1.74's own adaptive driver compares the error of the rule on [-1, 1]
// with a tolerance already scaled by the half-width, so short intervals are
// always split down to max_depth. Here the error is rescaled before the test.

#ifndef FLAMEWAVE_NUMERICS_QUADRATURE_HPP
#define FLAMEWAVE_NUMERICS_QUADRATURE_HPP

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

namespace flamewave::numerics {

namespace detail {

template <class F>
double gk15_fixed(F& f, double a, double b, double* err) {
  using boost::math::quadrature::gauss_kronrod;
  double e = 0.0;
  const double r = gauss_kronrod<double, 15>::integrate(f, a, b, 0, 0.0, &e);
  *err = e * 0.5 * std::abs(b - a);
  return r;
}

template <class F>
double gk15_recurse(F& f, double a, double b, double whole, double rel_tol, double abs_budget,
                    int depth, double* err) {
  double e = 0.0;
  const double r = gk15_fixed(f, a, b, &e);
  if (depth <= 0 || e <= rel_tol * std::abs(r) || e <= abs_budget) {
    *err = e;
    return r;
  }
  const double mid = 0.5 * (a + b);
  double e1 = 0.0, e2 = 0.0;
  const double left = gk15_recurse(f, a, mid, whole, rel_tol, 0.5 * abs_budget, depth - 1, &e1);
  const double right = gk15_recurse(f, mid, b, whole, rel_tol, 0.5 * abs_budget, depth - 1, &e2);
  *err = e1 + e2;
  return left + right;
}

}  // namespace detail

/// Integral of f over [a, b]. Subintervals are halved until their error
/// estimate is below rel_tol times their own value or their share of
/// rel_tol times the first whole-interval estimate.
template <class F>
double integrate_gk15(F&& f, double a, double b, double rel_tol, int max_depth = 20,
                      double* error_estimate = nullptr) {
  double e = 0.0;
  const double whole = detail::gk15_fixed(f, a, b, &e);
  double out = whole;
  if (e > rel_tol * std::abs(whole) && max_depth > 0) {
    const double mid = 0.5 * (a + b);
    double e1 = 0.0, e2 = 0.0;
    const double budget = 0.5 * rel_tol * std::abs(whole);
    out = detail::gk15_recurse(f, a, mid, whole, rel_tol, budget, max_depth - 1, &e1) +
          detail::gk15_recurse(f, mid, b, whole, rel_tol, budget, max_depth - 1, &e2);
    e = e1 + e2;
  }
  if (error_estimate) *error_estimate = e;
  return out;
}

}  // namespace flamewave::numerics

#endif  // FLAMEWAVE_NUMERICS_QUADRATURE_HPP
