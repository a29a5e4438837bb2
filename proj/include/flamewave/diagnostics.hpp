// Checks of the identities and bounds a computed wave must satisfy.
//
// Equalities report residual = |lhs - rhs| (relative where noted) and pass
// when residual <= tolerance. Inequalities use a signed margin: residual is
// positive when the inequality holds, and pass means residual > tolerance
// (tolerance is 0 for strict inequalities).

#ifndef FLAMEWAVE_DIAGNOSTICS_HPP
#define FLAMEWAVE_DIAGNOSTICS_HPP

#include <string>
#include <vector>

#include "flamewave/model.hpp"

namespace flamewave {

struct WaveSolution;

enum class CheckKind { Equality, Inequality, Skipped };

struct Check {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  CheckKind kind = CheckKind::Equality;
};

struct DiagnosticsReport {
  std::vector<Check> checks;

  [[nodiscard]] bool all_pass() const;
  [[nodiscard]] const Check* find(const std::string& name) const;
  /// Throws DomainError if the name is absent.
  [[nodiscard]] const Check& at(const std::string& name) const;
};

/// Tolerances for the report; the defaults match the acceptance thresholds.
struct DiagnosticsOptions {
  double identity_rel_tol = 1e-8;
  double boundary_tol = 1e-7;
  double holder_rel_tol = 0.05;
  double lambda_one_tol = 1e-8;
  int envelope_samples = 1000;
};

DiagnosticsReport run_diagnostics(const WaveSolution& sol, const SolverConfig& cfg,
                                  const DiagnosticsOptions& opt = {});

/// Least-squares slope of log v against log(R - xi) over the last decade of
/// R - xi, excluding the three points nearest R. NaN when fewer than three
/// usable points remain (e.g. v underflows).
double holder_slope(const std::vector<double>& tau, const std::vector<double>& v);

}  // namespace flamewave

#endif  // FLAMEWAVE_DIAGNOSTICS_HPP
