#include "flamewave/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "flamewave/parallel.hpp"
#include "flamewave/wave.hpp"

namespace flamewave::cli {

namespace fs = std::filesystem;

const char* to_string(Command c) {
  switch (c) {
    case Command::Solve:
      return "solve";
    case Command::Sweep:
      return "sweep";
    case Command::Limit:
      return "limit";
    case Command::Portrait:
      return "portrait";
    case Command::Verify:
      return "verify";
  }
  return "?";
}

std::vector<PhysicalParams> RunSpec::param_grid() const {
  std::vector<PhysicalParams> out;
  for (double a : alphas)
    for (double l : lambdas)
      for (double t : thetas) out.push_back({a, l, t});
  return out;
}

PhysicalParams RunSpec::first_params() const {
  return {alphas.empty() ? 0.5 : alphas.front(), lambdas.empty() ? 1.0 : lambdas.front(),
          thetas.empty() ? 0.5 : thetas.front()};
}

namespace {

double parse_number(const std::string& s) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + s + "'");
  }
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos != s.size()) throw UsageError("not a number: '" + s + "'");
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_bool(const std::string& s) {
  if (s == "1" || s == "true" || s == "yes" || s == "on") return true;
  if (s == "0" || s == "false" || s == "no" || s == "off") return false;
  throw UsageError("not a boolean: '" + s + "'");
}

// key=value lines; '#' starts a comment. Repeated keys accumulate.
std::map<std::string, std::vector<std::string>> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::map<std::string, std::vector<std::string>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    out[key].push_back(trim(line.substr(eq + 1)));
  }
  return out;
}

std::vector<double> expand_all(const std::vector<std::string>& items) {
  std::vector<double> out;
  for (const auto& it : items) {
    std::stringstream ss(it);
    std::string part;
    while (std::getline(ss, part, ',')) {
      part = trim(part);
      if (part.empty()) continue;
      const auto v = expand_range(part);
      out.insert(out.end(), v.begin(), v.end());
    }
  }
  return out;
}

PhaseState parse_seed(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError("seed must be 'x,y': '" + s + "'");
  return {parse_number(trim(s.substr(0, comma))), parse_number(trim(s.substr(comma + 1)))};
}

}  // namespace

std::vector<double> expand_range(const std::string& text) {
  const std::string t = trim(text);
  const auto c1 = t.find(':');
  if (c1 == std::string::npos) return {parse_number(t)};
  const auto c2 = t.find(':', c1 + 1);
  if (c2 == std::string::npos) throw UsageError("range must be a:b:step: '" + t + "'");
  const double a = parse_number(t.substr(0, c1));
  const double b = parse_number(t.substr(c1 + 1, c2 - c1 - 1));
  const double step = parse_number(t.substr(c2 + 1));
  if (!(step > 0.0) || !(b >= a)) throw UsageError("range needs step > 0 and b >= a: '" + t + "'");
  const double span = (b - a) / step;
  if (span > 1e6) throw UsageError("range too long: '" + t + "'");
  const long n = static_cast<long>(std::floor(span + 1e-9));
  std::vector<double> out;
  for (long k = 0; k <= n; ++k) {
    // Round to 12 significant digits so 0.1:0.9:0.1 yields 0.3, not 0.30000000000000004.
    const double v = a + static_cast<double>(k) * step;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    out.push_back(std::strtod(buf, nullptr));
  }
  return out;
}

std::optional<RunSpec> parse_args(int argc, const char* const* argv, std::string* help) {
  CLI::App app{"Traveling waves for free-interface combustion with fractional reaction order",
               "flamewave"};
  app.require_subcommand(1);
  app.fallthrough();

  std::vector<std::string> alpha_s, lambda_s, theta_s, seed_s;
  std::string out_dir, config, kind_s;
  double tol_ode = 0, tol_root = 0, seed_x = 0, quad_tol = 0, speed = 0, t_span = 0, box = 0;
  int grid = 0, max_iter = 0, threads = 0;
  bool picard = false;

  std::map<std::string, CLI::Option*> opts;
  opts["alpha"] = app.add_option("--alpha", alpha_s, "reaction order (repeatable, a:b:step)");
  opts["lambda"] = app.add_option("--lambda", lambda_s, "inverse Lewis number (repeatable)");
  opts["theta"] = app.add_option("--theta", theta_s, "ignition temperature (repeatable)");
  opts["out"] = app.add_option("--out", out_dir, "output directory");
  opts["tol-ode"] = app.add_option("--tol-ode", tol_ode, "relative ODE tolerance");
  opts["tol-root"] = app.add_option("--tol-root", tol_root, "root tolerance for c and v0");
  opts["grid"] = app.add_option("--grid", grid, "profile grid points");
  opts["seed-x"] = app.add_option("--seed-x", seed_x, "upper bound of the tail hand-off abscissa");
  opts["quad-tol"] = app.add_option("--quad-tol", quad_tol, "relative quadrature tolerance");
  opts["max-iter"] = app.add_option("--max-iter", max_iter, "root iteration cap");
  opts["threads"] = app.add_option("--threads", threads, "worker threads for sweeps");
  opts["picard"] = app.add_flag("--picard", picard, "experimental Picard iteration for the closure");
  opts["kind"] = app.add_option("--kind", kind_s, "limit case: alpha1, alpha0, lambda0, lambda1");
  opts["c"] = app.add_option("--c", speed, "speed for the portrait (default: solved speed)");
  opts["seed"] = app.add_option("--seed", seed_s, "portrait seed 'x,y' (repeatable)");
  opts["t-span"] = app.add_option("--t-span", t_span, "portrait time span");
  opts["box"] = app.add_option("--box", box, "portrait bounding box half-width");
  app.add_option("--config", config, "key=value file; command-line flags take precedence");

  for (const char* name : {"solve", "sweep", "limit", "portrait", "verify"})
    app.add_subcommand(name, std::string(name) + " command");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    if (help) *help = app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunSpec spec;
  const std::string cmd = app.get_subcommands().front()->get_name();
  if (cmd == "solve") spec.command = Command::Solve;
  else if (cmd == "sweep") spec.command = Command::Sweep;
  else if (cmd == "limit") spec.command = Command::Limit;
  else if (cmd == "portrait") spec.command = Command::Portrait;
  else spec.command = Command::Verify;

  // Config values fill whatever the command line left unset.
  if (!config.empty()) {
    const auto cfgmap = read_config(config);
    for (const auto& [key, values] : cfgmap) {
      auto it = opts.find(key);
      if (it == opts.end()) throw UsageError("unknown config key '" + key + "'");
      if (it->second->count() > 0) continue;
      const std::string& last = values.back();
      if (key == "alpha") alpha_s = values;
      else if (key == "lambda") lambda_s = values;
      else if (key == "theta") theta_s = values;
      else if (key == "seed") seed_s = values;
      else if (key == "out") out_dir = last;
      else if (key == "tol-ode") tol_ode = parse_number(last);
      else if (key == "tol-root") tol_root = parse_number(last);
      else if (key == "grid") grid = static_cast<int>(parse_number(last));
      else if (key == "seed-x") seed_x = parse_number(last);
      else if (key == "quad-tol") quad_tol = parse_number(last);
      else if (key == "max-iter") max_iter = static_cast<int>(parse_number(last));
      else if (key == "threads") threads = static_cast<int>(parse_number(last));
      else if (key == "picard") picard = parse_bool(last);
      else if (key == "kind") kind_s = last;
      else if (key == "c") speed = parse_number(last);
      else if (key == "t-span") t_span = parse_number(last);
      else if (key == "box") box = parse_number(last);
      opts[key] = nullptr;  // mark as set
    }
  }
  auto given = [&](const char* key) { return opts[key] == nullptr || opts[key]->count() > 0; };

  spec.alphas = given("alpha") ? expand_all(alpha_s) : std::vector<double>{0.5};
  spec.lambdas = given("lambda") ? expand_all(lambda_s) : std::vector<double>{1.0};
  spec.thetas = given("theta") ? expand_all(theta_s) : std::vector<double>{0.5};
  if (spec.alphas.empty() || spec.lambdas.empty() || spec.thetas.empty())
    throw UsageError("empty parameter list");
  if (given("out")) spec.output_dir = out_dir;
  if (given("tol-ode")) {
    spec.cfg.ode_rel_tol = tol_ode;
    spec.cfg.ode_abs_tol = std::min(spec.cfg.ode_abs_tol, 1e-3 * tol_ode);
  }
  if (given("tol-root")) {
    spec.cfg.v0_bisect_tol = tol_root;
    spec.cfg.c_bisect_tol = std::min(spec.cfg.c_bisect_tol, tol_root);
  }
  if (given("grid")) spec.cfg.grid_points = grid;
  if (given("seed-x")) spec.cfg.seed_x = seed_x;
  if (given("quad-tol")) spec.cfg.quad_tol = quad_tol;
  if (given("max-iter")) spec.cfg.max_iter = max_iter;
  if (given("threads")) spec.threads = threads;
  spec.cfg.picard = picard;
  if (given("kind")) {
    try {
      spec.limit_kind = parse_limit_kind(kind_s);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  if (given("c")) spec.speed = speed;
  for (const auto& s : seed_s) spec.seeds.push_back(parse_seed(s));
  if (given("t-span")) spec.t_span = t_span;
  if (given("box")) spec.box = box;

  // Domain validation (exit code 3).
  validate(spec.cfg);
  if (!(spec.t_span > 0.0) || !(spec.box > 0.0))
    throw DomainError("t-span and box must be positive");
  if (spec.speed && !(*spec.speed >= 0.0)) throw DomainError("c must be non-negative");
  if (spec.command == Command::Limit) {
    if (!spec.limit_kind) throw UsageError("limit needs --kind");
    LimitCase lc{*spec.limit_kind, spec.first_params()};
    if (*spec.limit_kind == LimitKind::AlphaOne) lc.params.alpha = 1.0;
    if (*spec.limit_kind == LimitKind::AlphaZero) lc.params.alpha = 0.0;
    if (*spec.limit_kind == LimitKind::LambdaZero) lc.params.lambda = 0.0;
    if (*spec.limit_kind == LimitKind::LambdaOne) lc.params.lambda = 1.0;
    // Only the parameters the case uses are checked.
    const bool alpha_given = given("alpha");
    const bool lambda_given = given("lambda");
    if (*spec.limit_kind == LimitKind::LambdaZero && alpha_given) lc.params.alpha = spec.alphas.front();
    if (*spec.limit_kind == LimitKind::AlphaOne && lambda_given) lc.params.lambda = spec.lambdas.front();
    validate(lc);
  } else {
    for (const auto& p : spec.param_grid()) validate_main(p);
  }
  return spec;
}

// ---------------------------------------------------------------- formats

std::string format_double(double v) {
  if (!std::isfinite(v)) return {};
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_number(double v) {
  if (!std::isfinite(v)) return "null";
  return format_double(v);
}

namespace {

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

const char* kind_name(CheckKind k) {
  switch (k) {
    case CheckKind::Equality:
      return "equality";
    case CheckKind::Inequality:
      return "inequality";
    case CheckKind::Skipped:
      return "skipped";
  }
  return "?";
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.close();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

void make_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create directory '" + dir.string() + "'");
}

std::string params_json(const PhysicalParams& p) {
  return "\"alpha\": " + json_number(p.alpha) + ",\n  \"lambda\": " + json_number(p.lambda) +
         ",\n  \"theta\": " + json_number(p.theta);
}

}  // namespace

std::string profile_csv(const ExtendedProfile& prof) {
  std::string out = "xi,v,vp,u,up,region\n";
  for (std::size_t k = 0; k < prof.xi.size(); ++k) {
    out += format_double(prof.xi[k]) + ',' + format_double(prof.v[k]) + ',' +
           format_double(prof.vp[k]) + ',' + format_double(prof.u[k]) + ',' +
           format_double(prof.up[k]) + ',' + to_string(prof.region[k]) + '\n';
  }
  return out;
}

std::string summary_json(const WaveSolution& sol) {
  const auto& cl = sol.closure;
  std::string out = "{\n  " + params_json(sol.params());
  out += ",\n  \"c\": " + json_number(cl.c);
  out += ",\n  \"R\": " + json_number(cl.R);
  out += ",\n  \"v0\": " + json_number(cl.v0_star);
  out += ",\n  \"iterations\": " + std::to_string(cl.iterations);
  out += ",\n  \"speed_iterations\": " + std::to_string(cl.wave.speed.iterations);
  out += ",\n  \"branch\": " + json_string(to_string(cl.branch));
  out += ",\n  \"residuals\": {";
  out += "\n    \"closure\": " + json_number(cl.residual);
  out += ",\n    \"psi\": " + json_number(cl.wave.speed.psi_residual);
  out += ",\n    \"settling_quadrature_error\": " + json_number(cl.wave.settling.quad_error_estimate);
  out += "\n  }";
  out += ",\n  \"all_pass\": ";
  out += sol.diagnostics.all_pass() ? "true" : "false";
  out += ",\n  \"checks\": [";
  bool first = true;
  for (const auto& c : sol.diagnostics.checks) {
    out += first ? "\n" : ",\n";
    first = false;
    out += "    {\"name\": " + json_string(c.name) + ", \"kind\": " + json_string(kind_name(c.kind)) +
           ", \"lhs\": " + json_number(c.lhs) + ", \"rhs\": " + json_number(c.rhs) +
           ", \"residual\": " + json_number(c.residual) + ", \"tolerance\": " +
           json_number(c.tolerance) + ", \"pass\": " + (c.pass ? "true" : "false") + "}";
  }
  out += "\n  ]\n}\n";
  return out;
}

std::string portrait_csv(const Polyline& line) {
  std::string out = "t,x,y\n";
  for (const auto& pt : line)
    out += format_double(pt.t) + ',' + format_double(pt.x) + ',' + format_double(pt.y) + '\n';
  return out;
}

std::string sweep_csv(const std::vector<SweepEntry>& rows, bool with_lambda_theta) {
  std::string out = with_lambda_theta ? "alpha,lambda,theta,c,R,v0\n" : "alpha,c,R,v0\n";
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (const auto& r : rows) {
    out += format_double(r.params.alpha) + ',';
    if (with_lambda_theta)
      out += format_double(r.params.lambda) + ',' + format_double(r.params.theta) + ',';
    out += format_double(r.ok ? r.c : nan) + ',' + format_double(r.ok ? r.R : nan) + ',' +
           format_double(r.ok ? r.v0 : nan) + '\n';
  }
  return out;
}

// ---------------------------------------------------------------- commands

namespace {

int thread_count(const RunSpec& spec) {
  if (spec.threads > 0) return spec.threads;
  if (const char* env = std::getenv("FLAMEWAVE_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 0;
}

int cmd_solve(const RunSpec& spec, std::ostream& log, bool verify) {
  const PhysicalParams p = spec.first_params();
  const WaveSolution sol = solve_traveling_wave(p, spec.cfg);
  const fs::path dir(spec.output_dir);
  make_dir(dir);
  if (!verify) write_file(dir / "profile.csv", profile_csv(extend_full_line(sol.profile)));
  write_file(dir / "summary.json", summary_json(sol));
  log << describe(p) << ": c=" << format_double(sol.c()) << " R=" << format_double(sol.R())
      << " v0=" << format_double(sol.v0()) << '\n';
  if (verify) {
    for (const auto& c : sol.diagnostics.checks) {
      if (!c.pass) log << "FAIL " << c.name << " residual=" << format_double(c.residual) << '\n';
    }
    log << (sol.diagnostics.all_pass() ? "all checks pass\n" : "diagnostics failed\n");
    return sol.diagnostics.all_pass() ? kOk : kNonConvergence;
  }
  return kOk;
}

int cmd_sweep(const RunSpec& spec, std::ostream& log) {
  std::vector<PhysicalParams> grid = spec.param_grid();
  std::stable_sort(grid.begin(), grid.end(), [](const PhysicalParams& a, const PhysicalParams& b) {
    return a.alpha < b.alpha;
  });
  const fs::path dir(spec.output_dir);
  make_dir(dir);
  std::vector<SweepEntry> rows(grid.size());
  std::vector<std::string> io_errors(grid.size());
  parallel_for(grid.size(), thread_count(spec), [&](std::size_t i) {
    SweepEntry& row = rows[i];
    row.params = grid[i];
    char name[32];
    std::snprintf(name, sizeof name, "row_%03zu.json", i);
    std::string text;
    try {
      const WaveSolution sol = solve_traveling_wave(grid[i], spec.cfg);
      row.ok = true;
      row.c = sol.c();
      row.R = sol.R();
      row.v0 = sol.v0();
      text = summary_json(sol);
    } catch (const std::exception& e) {
      row.error = e.what();
      text = "{\n  " + params_json(grid[i]) + ",\n  \"error\": " + json_string(row.error) + "\n}\n";
    }
    try {
      write_file(dir / name, text);
    } catch (const IoError& e) {
      io_errors[i] = e.what();
    }
  });
  for (const auto& e : io_errors)
    if (!e.empty()) throw IoError(e);
  const bool multi = spec.lambdas.size() > 1 || spec.thetas.size() > 1;
  write_file(dir / "sweep.csv", sweep_csv(rows, multi));
  int failed = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].ok) {
      ++failed;
      log << "row " << i << " (" << describe(rows[i].params) << ") failed: " << rows[i].error << '\n';
    }
  }
  log << rows.size() - failed << "/" << rows.size() << " rows solved\n";
  return failed == 0 ? kOk : kNonConvergence;
}

int cmd_limit(const RunSpec& spec, std::ostream& log) {
  const LimitKind kind = *spec.limit_kind;
  PhysicalParams p = spec.first_params();
  const fs::path dir(spec.output_dir);
  make_dir(dir);
  const double inf = std::numeric_limits<double>::infinity();
  std::string body;
  double c = 0.0, R = 0.0;
  switch (kind) {
    case LimitKind::AlphaOne:
      p.alpha = 1.0;
      c = speed_alpha_one(p.theta, p.lambda);
      R = inf;
      break;
    case LimitKind::AlphaZero: {
      p.alpha = 0.0;
      const auto r = speed_alpha_zero(p.theta, spec.cfg);
      c = r.c;
      R = r.R;
      break;
    }
    case LimitKind::LambdaZero: {
      p.lambda = 0.0;
      const auto s = lambda_zero_solution(p.alpha, p.theta, spec.cfg);
      c = s.c;
      R = s.R;
      std::string csv = "xi,v,vp\n";
      const int n = std::max(16, spec.cfg.grid_points);
      for (int k = 0; k < n; ++k) {
        const double xi = s.R * static_cast<double>(k) / (n - 1);
        csv += format_double(xi) + ',' + format_double(s.v(xi)) + ',' + format_double(s.vp(xi)) + '\n';
      }
      write_file(dir / "profile.csv", csv);
      body = ",\n  \"root_function_at_c\": " +
             json_number(lambda_zero_root_function(s.c, p.alpha, p.theta));
      break;
    }
    case LimitKind::LambdaOne: {
      p.lambda = 1.0;
      const WaveSolution sol = solve_traveling_wave(p, spec.cfg);
      c = sol.c();
      R = sol.R();
      write_file(dir / "profile.csv", profile_csv(extend_full_line(sol.profile)));
      body = ",\n  \"v0\": " + json_number(sol.v0());
      break;
    }
  }
  write_file(dir / "summary.json", "{\n  \"kind\": " + json_string(to_string(kind)) + ",\n  " +
                                       params_json(p) + ",\n  \"c\": " + json_number(c) +
                                       ",\n  \"R\": " + json_number(R) + body + "\n}\n");
  log << to_string(kind) << ": c=" << format_double(c) << " R=" << (std::isfinite(R) ? format_double(R) : "inf") << '\n';
  return kOk;
}

int cmd_portrait(const RunSpec& spec, std::ostream& log) {
  const PhysicalParams p = spec.first_params();
  double c;
  double v0 = 1.0 - p.theta;
  if (spec.speed) {
    c = *spec.speed;
  } else {
    const ClosureResult cl = solve_wave(p, spec.cfg);
    c = cl.c;
    v0 = cl.v0_star;
  }
  std::vector<PhaseState> seeds = spec.seeds;
  if (seeds.empty()) {
    // A ring of seeds plus the manifold point at v0 and its reflection.
    const int n = 16;
    for (int k = 0; k < n; ++k) {
      const double ang = 2.0 * M_PI * (k + 0.5) / n;
      seeds.push_back({std::cos(ang), std::sin(ang)});
    }
    const ManifoldCurve m = grow_manifold(p, c, v0, spec.cfg);
    const double y = eval_manifold(m, v0);
    seeds.push_back({v0, y});
    seeds.push_back({-v0, -y});
  }
  PortraitOptions opt;
  opt.box = spec.box;
  const auto lines = sample_phase_portrait(p, c, seeds, spec.t_span, opt);
  const fs::path dir(spec.output_dir);
  make_dir(dir);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "portrait_%03zu.csv", i);
    write_file(dir / name, portrait_csv(lines[i]));
  }
  log << lines.size() << " trajectories at c=" << format_double(c) << '\n';
  return kOk;
}

}  // namespace

int run(const RunSpec& spec, std::ostream& log) {
  switch (spec.command) {
    case Command::Solve:
      return cmd_solve(spec, log, false);
    case Command::Verify:
      return cmd_solve(spec, log, true);
    case Command::Sweep:
      return cmd_sweep(spec, log);
    case Command::Limit:
      return cmd_limit(spec, log);
    case Command::Portrait:
      return cmd_portrait(spec, log);
  }
  return kUsage;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<RunSpec> spec;
  try {
    std::string help;
    spec = parse_args(argc, argv, &help);
    if (!spec) {
      out << help;
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nrun with --help for usage\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidation;
  }
  try {
    return run(*spec, out);
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidation;
  } catch (const SolverError& e) {
    err << "solver did not converge: " << e.what() << '\n';
    return kNonConvergence;
  }
}

}  // namespace flamewave::cli
