#include <doctest.h>

#include <cmath>

#include "flamewave/manifold.hpp"

using namespace flamewave;

TEST_SUITE("manifold") {
  TEST_CASE("seed values") {
    const PhysicalParams p{0.5, 1.0, 0.5};
    const auto s0 = manifold_seed(p, 0.0, 1e-6);
    CHECK(s0.x == 1e-6);
    CHECK(s0.y == curve_l0(p, 1e-6));
    const auto s1 = manifold_seed(p, 1.0, 1e-6);
    const double mid = 0.5 * (curve_l0(p, 1e-6) + curve_lc(p, 1.0, 1e-6));
    CHECK(s1.y == doctest::Approx(mid).epsilon(1e-14));
    CHECK(s1.y > curve_l0(p, 1e-6));
    CHECK(s1.y < curve_lc(p, 1.0, 1e-6));
  }

  TEST_CASE("c = 0 reproduces the Hamiltonian curve") {
    const SolverConfig cfg;
    for (double a : {0.25, 0.5, 0.75}) {
      const PhysicalParams p{a, 1.5, 0.5};
      const auto m = grow_manifold(p, 0.0, 1.0, cfg);
      CHECK(eval_manifold(m, 0.0) == 0.0);
      for (double x = 1e-9; x <= 1.0; x *= 3.7) {
        const double ref = curve_l0(p, x);
        CHECK(std::abs(eval_manifold(m, x) - ref) <= 10.0 * cfg.ode_rel_tol * std::abs(ref));
      }
    }
  }

  TEST_CASE("envelope and lower curve for c > 0") {
    const SolverConfig cfg;
    for (double a : {0.25, 0.5, 0.75})
      for (double l : {0.5, 2.0}) {
        const PhysicalParams p{a, l, 0.5};
        const double c = 0.8;
        const double x1 = lc_axis_crossing(p, c);
        const auto m = grow_manifold(p, c, 1.0, cfg);
        // Off-sample points, both near the origin and in the bulk.
        for (double x = 1.3e-10; x < 1.0; x *= 1.9) {
          const double y = eval_manifold(m, x);
          CHECK(y > curve_l0(p, x));
          if (x < x1) CHECK(y < curve_lc(p, c, x));
          CHECK(y > -std::pow(x, a) / c);
        }
      }
  }

  TEST_CASE("monotone in c") {
    const SolverConfig cfg;
    const PhysicalParams p{0.5, 1.0, 0.5};
    const auto m1 = grow_manifold(p, 0.5, 1.0, cfg);
    const auto m2 = grow_manifold(p, 1.0, 1.0, cfg);
    for (double x = 1e-6; x <= 1.0; x *= 2.3) CHECK(eval_manifold(m2, x) > eval_manifold(m1, x));
  }

  TEST_CASE("seeds on either side contract") {
    const SolverConfig cfg;
    const PhysicalParams p{0.5, 1.0, 0.5};
    const double c = 1.0;
    const double eps = 1e-6;
    GrowOptions lo, hi;
    lo.seed = PhaseState{eps, curve_l0(p, eps) * (1.0 - 1e-9)};
    hi.seed = PhaseState{eps, curve_lc(p, c, eps) * (1.0 + 1e-9)};
    const auto ml = grow_manifold(p, c, 1.0, cfg, lo);
    const auto mh = grow_manifold(p, c, 1.0, cfg, hi);
    const double gap0 = hi.seed->y - lo.seed->y;
    const double gap1 = std::abs(eval_manifold(mh, 1.0) - eval_manifold(ml, 1.0));
    CHECK(gap1 < gap0);
    const auto ref = grow_manifold(p, c, 1.0, cfg);
    CHECK(std::abs(eval_manifold(ml, 1.0) - eval_manifold(ref, 1.0)) < 1e-6);
  }

  TEST_CASE("tail series matches the leading coefficient") {
    const PhysicalParams p{0.5, 2.0, 0.5};
    const TailSeries t(p, 0.0);
    CHECK(t.leading() == doctest::Approx(-l0_coefficient(p)).epsilon(1e-14));
    const TailSeries tc(p, 0.7);
    CHECK(tc.value(0.0) == doctest::Approx(-l0_coefficient(p)).epsilon(1e-14));
  }

  TEST_CASE("integrate_along reproduces settling time at c = 0") {
    const SolverConfig cfg;
    const PhysicalParams p{0.5, 1.0, 0.5};
    const auto m = grow_manifold(p, 0.0, 1.0, cfg);
    // dT = dx / |y| = (1/m) s^{1/m - 1} ... expressed through the reduced point.
    const double T = integrate_along(
        m, 0.0, m.s_of_x(0.5),
        [&](const ReducedPoint& q) { return q.x / (m.m_exponent() * q.s * std::abs(q.y)); },
        1e-12);
    CHECK(T == doctest::Approx(settling_lower_bound(p, 0.5)).epsilon(1e-10));
  }

  TEST_CASE("domain errors") {
    const SolverConfig cfg;
    CHECK_THROWS_AS(grow_manifold({0.5, 1.0, 0.5}, -1.0, 1.0, cfg), DomainError);
    CHECK_THROWS_AS(grow_manifold({0.5, 1.0, 0.5}, 1.0, 0.0, cfg), DomainError);
    CHECK_THROWS_AS(manifold_seed({0.5, 1.0, 0.5}, 1.0, 0.0), DomainError);
  }
}

TEST_SUITE("portrait") {
  TEST_CASE("origin is an equilibrium") {
    const auto lines = sample_phase_portrait({0.5, 1.0, 0.5}, 0.9, {{0.0, 0.0}}, 5.0);
    REQUIRE(lines.size() == 1);
    for (const auto& pt : lines[0]) {
      CHECK(pt.x == 0.0);
      CHECK(pt.y == 0.0);
    }
  }

  TEST_CASE("point reflection gives the reflected trajectory") {
    const PhysicalParams p{0.5, 1.0, 0.5};
    const auto lines = sample_phase_portrait(p, 0.9, {{0.4, -0.3}, {-0.4, 0.3}}, 3.0);
    REQUIRE(lines.size() == 2);
    REQUIRE(lines[0].size() == lines[1].size());
    for (std::size_t i = 0; i < lines[0].size(); ++i) {
      CHECK(lines[1][i].t == lines[0][i].t);
      CHECK(lines[1][i].x == doctest::Approx(-lines[0][i].x).epsilon(1e-12));
      CHECK(lines[1][i].y == doctest::Approx(-lines[0][i].y).epsilon(1e-12));
    }
  }

  TEST_CASE("manifold seed stays in the envelope") {
    const SolverConfig cfg;
    const PhysicalParams p{0.5, 1.0, 0.5};
    const double c = 0.9;
    const auto m = grow_manifold(p, c, 1.0, cfg);
    const double x0 = 0.5;
    const auto lines = sample_phase_portrait(p, c, {{x0, eval_manifold(m, x0)}}, 10.0);
    // Forward integration loses the manifold close to the non-Lipschitz origin.
    for (const auto& pt : lines[0]) {
      if (pt.x < 1e-5) break;
      CHECK(pt.y > curve_l0(p, pt.x) * (1.0 + 1e-7));
      CHECK(pt.y < curve_lc(p, c, pt.x));
    }
  }
}
