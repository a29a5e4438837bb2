// Boundary cases of the parameter space with (semi-)closed-form answers:
// alpha = 1, alpha = 0, lambda = 0 and lambda = 1, plus alpha sweeps of the
// full solver.

#ifndef FLAMEWAVE_LIMITS_HPP
#define FLAMEWAVE_LIMITS_HPP

#include <string>
#include <vector>

#include "flamewave/model.hpp"

namespace flamewave {

enum class LimitKind { AlphaOne, AlphaZero, LambdaZero, LambdaOne };

const char* to_string(LimitKind k);
/// Parses "alpha1", "alpha0", "lambda0", "lambda1". Throws DomainError.
LimitKind parse_limit_kind(const std::string& s);

struct LimitCase {
  LimitKind kind = LimitKind::LambdaOne;
  PhysicalParams params;
};

/// Throws DomainError when params contradict the kind (e.g. AlphaZero with
/// alpha != 0).
void validate(const LimitCase& lc);

/// c = (theta/(1-theta) + lambda (theta/(1-theta))^2)^{-1/2}; lambda >= 0.
double speed_alpha_one(double theta, double lambda);

struct AlphaZeroSpeed {
  double c = 0.0;
  double R = 0.0;  // equals c
};

/// Unique c > 0 with (1 - e^{-c^2}) / c^2 = theta.
AlphaZeroSpeed speed_alpha_zero(double theta, const SolverConfig& cfg = {});

/// Root function of the lambda = 0 problem, 0 <= alpha < 1, c > 0:
///   f = theta - 1 + (c^2/(1-alpha)) int_0^1 e^{-c^2 (1-y)/(1-alpha)} y^{1/(1-alpha)} dy,
/// evaluated after t = K (1 - y), K = c^2/(1-alpha), as
///   f = theta - 1 + int_0^K e^{-t} (1 - t/K)^{1/(1-alpha)} dt.
double lambda_zero_root_function(double c, double alpha, double theta,
                                 double quad_tol = 1e-15);

/// Closed form at alpha = 1/2: theta = c^-2 - c^-4 (1 - e^{-2 c^2}) / 2.
double theta_alpha_half(double c);

struct LambdaZeroSolution {
  double alpha = 0.0;
  double theta = 0.0;
  double c = 0.0;
  double R = 0.0;  // c / (1 - alpha)
  int iterations = 0;

  /// (1 - xi (1 - alpha) / c)^{1/(1-alpha)} on [0, R], 0 beyond R, 1 before 0.
  [[nodiscard]] double v(double xi) const;
  [[nodiscard]] double vp(double xi) const;
};

/// Bisection on lambda_zero_root_function in c; requires 0 <= alpha < 1.
LambdaZeroSolution lambda_zero_solution(double alpha, double theta,
                                        const SolverConfig& cfg = {});

struct SweepRow {
  PhysicalParams params;
  bool ok = false;
  std::string error;
  double c = 0.0;
  double R = 0.0;
  double v0 = 0.0;
  int iterations = 0;
};

/// Full closure solve for each alpha (others from p_base), sorted by alpha.
/// Failed rows keep ok = false and the error message; the sweep continues.
/// threads <= 0 uses the hardware concurrency.
std::vector<SweepRow> sweep_alpha(const PhysicalParams& p_base, std::vector<double> alphas,
                                  const SolverConfig& cfg, int threads = 0);

}  // namespace flamewave

#endif  // FLAMEWAVE_LIMITS_HPP
