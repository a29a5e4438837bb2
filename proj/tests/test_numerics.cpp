#include <doctest.h>

#include <cmath>

#include "flamewave/numerics/dopri5.hpp"
#include "flamewave/numerics/quadrature.hpp"
#include "flamewave/numerics/roots.hpp"

using namespace flamewave;
using namespace flamewave::numerics;

namespace {

// Harmonic oscillator over one period; returns the endpoint error.
double oscillator_error(double rtol, long* steps) {
  Dopri5Options opt;
  opt.rtol = rtol;
  opt.atol = rtol * 1e-3;
  auto f = [](double, const State<2>& z) { return State<2>{z[1], -z[0]}; };
  const double T = 2.0 * M_PI;
  auto res = integrate<2>(f, 0.0, {1.0, 0.0}, T, opt, [](const auto&) { return true; });
  *steps = static_cast<long>(res.trajectory.steps.size());
  const auto end = res.trajectory.eval(T);
  return std::hypot(end[0] - 1.0, end[1]);
}

}  // namespace

TEST_SUITE("numerics") {
  TEST_CASE("dopri5 error tracks tolerance") {
    long n1 = 0, n2 = 0;
    const double e1 = oscillator_error(1e-6, &n1);
    const double e2 = oscillator_error(1e-10, &n2);
    CHECK(e1 < 1e-4);
    CHECK(e2 < 1e-8);
    CHECK(e2 < e1);
    // Fifth-order method: 10^4 tighter tolerance costs about 10^{4/5} more steps.
    const double ratio = static_cast<double>(n2) / static_cast<double>(n1);
    CHECK(ratio > 3.0);
    CHECK(ratio < 12.0);
  }

  TEST_CASE("dopri5 dense output") {
    Dopri5Options opt;
    opt.rtol = 1e-11;
    opt.atol = 1e-14;
    auto f = [](double, const State<1>& z) { return State<1>{-z[0]}; };
    auto res = integrate<1>(f, 0.0, {1.0}, 5.0, opt, [](const auto&) { return true; });
    for (double t = 0.013; t < 5.0; t += 0.37)
      CHECK(std::abs(res.trajectory.eval(t)[0] - std::exp(-t)) < 1e-9);
  }

  TEST_CASE("find_root brackets and converges") {
    auto f = [](double x) { return x * x * x - 2.0; };
    RootOptions opt;
    opt.x_tol = 1e-14;
    const auto r = find_root(f, 0.0, 2.0, f(0.0), f(2.0), opt);
    CHECK(r.root == doctest::Approx(std::cbrt(2.0)).epsilon(1e-13));
    CHECK_THROWS_AS(find_root(f, 2.0, 3.0, f(2.0), f(3.0), opt), SolverError);
  }

  TEST_CASE("integrate_gk15") {
    double err = 0.0;
    auto f = [](double x) { return std::sqrt(x); };
    const double v = integrate_gk15(f, 0.0, 1.0, 1e-12, 30, &err);
    CHECK(v == doctest::Approx(2.0 / 3.0).epsilon(1e-11));
    auto g = [](double x) { return x * x * x; };
    CHECK(integrate_gk15(g, 0.0, 1e-3, 1e-12) == doctest::Approx(0.25e-12).epsilon(1e-12));
  }
}
