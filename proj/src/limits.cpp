#include "flamewave/limits.hpp"

#include <algorithm>
#include <cmath>

#include "flamewave/fixedpoint.hpp"
#include "flamewave/numerics/quadrature.hpp"
#include "flamewave/numerics/roots.hpp"
#include "flamewave/parallel.hpp"

namespace flamewave {

const char* to_string(LimitKind k) {
  switch (k) {
    case LimitKind::AlphaOne:
      return "alpha1";
    case LimitKind::AlphaZero:
      return "alpha0";
    case LimitKind::LambdaZero:
      return "lambda0";
    case LimitKind::LambdaOne:
      return "lambda1";
  }
  return "?";
}

LimitKind parse_limit_kind(const std::string& s) {
  if (s == "alpha1") return LimitKind::AlphaOne;
  if (s == "alpha0") return LimitKind::AlphaZero;
  if (s == "lambda0") return LimitKind::LambdaZero;
  if (s == "lambda1") return LimitKind::LambdaOne;
  throw DomainError("unknown limit case '" + s + "' (expected alpha1, alpha0, lambda0, lambda1)");
}

void validate(const LimitCase& lc) {
  const auto& p = lc.params;
  if (!(p.theta > 0.0 && p.theta < 1.0)) throw DomainError("theta must satisfy 0 < theta < 1");
  switch (lc.kind) {
    case LimitKind::AlphaOne:
      if (p.alpha != 1.0) throw DomainError("alpha1 case needs alpha = 1");
      if (!(p.lambda >= 0.0)) throw DomainError("lambda must be non-negative");
      break;
    case LimitKind::AlphaZero:
      if (p.alpha != 0.0) throw DomainError("alpha0 case needs alpha = 0");
      break;
    case LimitKind::LambdaZero:
      if (p.lambda != 0.0) throw DomainError("lambda0 case needs lambda = 0");
      if (!(p.alpha >= 0.0 && p.alpha < 1.0)) throw DomainError("lambda0 case needs 0 <= alpha < 1");
      break;
    case LimitKind::LambdaOne:
      if (p.lambda != 1.0) throw DomainError("lambda1 case needs lambda = 1");
      validate_main(p);
      break;
  }
}

double speed_alpha_one(double theta, double lambda) {
  if (!(theta > 0.0 && theta < 1.0)) throw DomainError("theta must satisfy 0 < theta < 1");
  if (!(lambda >= 0.0)) throw DomainError("lambda must be non-negative");
  const double r = theta / (1.0 - theta);
  return 1.0 / std::sqrt(r + lambda * r * r);
}

namespace {

// Expands hi until f(hi) > 0, then bisects. f must accept c = 0.
template <class F>
numerics::RootResult positive_root(F&& f, double x_tol, int max_iter) {
  double lo = 0.0;
  double hi = 1.0;
  double f_hi = f(hi);
  for (int k = 0; f_hi <= 0.0; ++k) {
    if (k > 200) throw SolverError("positive_root: no sign change found");
    lo = hi;
    hi *= 2.0;
    f_hi = f(hi);
  }
  const double f_lo = f(lo);
  numerics::RootOptions ro;
  ro.x_tol = x_tol;
  ro.max_iter = std::max(max_iter, 400);
  return numerics::find_root(f, lo, hi, f_lo, f_hi, ro);
}

}  // namespace

AlphaZeroSpeed speed_alpha_zero(double theta, const SolverConfig& cfg) {
  if (!(theta > 0.0 && theta < 1.0)) throw DomainError("theta must satisfy 0 < theta < 1");
  // g(c) = theta - (1 - e^{-c^2}) / c^2 increases from theta - 1 to theta.
  auto g = [&](double c) {
    if (c == 0.0) return theta - 1.0;
    const double k = c * c;
    return theta + std::expm1(-k) / k;
  };
  const auto r = positive_root(g, 1e-15, cfg.max_iter);
  return {r.root, r.root};
}

double lambda_zero_root_function(double c, double alpha, double theta, double quad_tol) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("root function needs 0 <= alpha < 1");
  if (!(c > 0.0)) throw DomainError("root function needs c > 0");
  const double q = 1.0 / (1.0 - alpha);
  const double K = c * c * q;
  // e^{-t} is below 1e-26 past t = 60, far under the requested accuracy.
  const double upper = std::min(K, 60.0);
  auto integrand = [&](double t) { return std::exp(-t) * std::pow(1.0 - t / K, q); };
  const double I = numerics::integrate_gk15(integrand, 0.0, upper, quad_tol, 30);
  return theta - 1.0 + I;
}

double theta_alpha_half(double c) {
  const double c2 = c * c;
  return 1.0 / c2 + std::expm1(-2.0 * c2) / (2.0 * c2 * c2);
}

double LambdaZeroSolution::v(double xi) const {
  if (xi <= 0.0) return 1.0;
  if (xi >= R) return 0.0;
  return std::pow(1.0 - xi * (1.0 - alpha) / c, 1.0 / (1.0 - alpha));
}

double LambdaZeroSolution::vp(double xi) const {
  if (xi < 0.0 || xi >= R) return 0.0;
  return -std::pow(1.0 - xi * (1.0 - alpha) / c, alpha / (1.0 - alpha)) / c;
}

LambdaZeroSolution lambda_zero_solution(double alpha, double theta, const SolverConfig& cfg) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("lambda0 case needs 0 <= alpha < 1");
  if (!(theta > 0.0 && theta < 1.0)) throw DomainError("theta must satisfy 0 < theta < 1");
  auto f = [&](double c) {
    if (c == 0.0) return theta - 1.0;
    return lambda_zero_root_function(c, alpha, theta);
  };
  const auto r = positive_root(f, 1e-14, cfg.max_iter);
  LambdaZeroSolution out;
  out.alpha = alpha;
  out.theta = theta;
  out.c = r.root;
  out.R = r.root / (1.0 - alpha);
  out.iterations = r.iterations;
  return out;
}

std::vector<SweepRow> sweep_alpha(const PhysicalParams& p_base, std::vector<double> alphas,
                                  const SolverConfig& cfg, int threads) {
  std::sort(alphas.begin(), alphas.end());
  std::vector<SweepRow> rows(alphas.size());
  parallel_for(alphas.size(), threads, [&](std::size_t i) {
    SweepRow& row = rows[i];
    row.params = p_base;
    row.params.alpha = alphas[i];
    try {
      const ClosureResult r = solve_wave(row.params, cfg);
      row.c = r.c;
      row.R = r.R;
      row.v0 = r.v0_star;
      row.iterations = r.iterations;
      row.ok = true;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  });
  return rows;
}

}  // namespace flamewave
