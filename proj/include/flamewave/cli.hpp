// Command-line front end: argument parsing, command dispatch and the text
// output formats (profile/sweep/portrait CSV, summary JSON).

#ifndef FLAMEWAVE_CLI_HPP
#define FLAMEWAVE_CLI_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "flamewave/limits.hpp"
#include "flamewave/manifold.hpp"
#include "flamewave/model.hpp"
#include "flamewave/profiles.hpp"

namespace flamewave {

struct WaveSolution;

namespace cli {

enum ExitCode : int {
  kOk = 0,
  kNonConvergence = 1,
  kUsage = 2,
  kValidation = 3,
  kIo = 4,
};

enum class Command { Solve, Sweep, Limit, Portrait, Verify };
const char* to_string(Command c);

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunSpec {
  Command command = Command::Solve;
  std::vector<double> alphas;
  std::vector<double> lambdas;
  std::vector<double> thetas;
  SolverConfig cfg;
  std::string output_dir = "flamewave_out";
  int threads = 0;  // 0: FLAMEWAVE_THREADS or hardware concurrency
  // limit
  std::optional<LimitKind> limit_kind;
  // portrait
  std::optional<double> speed;
  std::vector<PhaseState> seeds;
  double t_span = 20.0;
  double box = 2.0;

  /// Cartesian product alphas x lambdas x thetas, alpha varying slowest.
  [[nodiscard]] std::vector<PhysicalParams> param_grid() const;
  [[nodiscard]] PhysicalParams first_params() const;
};

/// Expands "a:b:step" (inclusive of b up to rounding) or a single number.
std::vector<double> expand_range(const std::string& text);

/// Parses argv (argv[0] is the program name). Throws UsageError for bad
/// syntax and DomainError for values outside the model's domain. `help`
/// receives the usage text when --help is requested; the returned spec is
/// then empty.
std::optional<RunSpec> parse_args(int argc, const char* const* argv, std::string* help = nullptr);

/// Runs the command and writes its outputs; returns the exit code.
int run(const RunSpec& spec, std::ostream& log);

/// parse_args + run, mapping exceptions to exit codes.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Output formats. Floats use 17 significant digits; NaN and infinities are
// written as empty CSV fields and JSON null.
std::string format_double(double v);
std::string json_number(double v);
std::string profile_csv(const ExtendedProfile& prof);
std::string summary_json(const WaveSolution& sol);
std::string portrait_csv(const Polyline& line);

struct SweepEntry {
  PhysicalParams params;
  bool ok = false;
  std::string error;
  double c = 0.0;
  double R = 0.0;
  double v0 = 0.0;
};
std::string sweep_csv(const std::vector<SweepEntry>& rows, bool with_lambda_theta);

}  // namespace cli
}  // namespace flamewave

#endif  // FLAMEWAVE_CLI_HPP
