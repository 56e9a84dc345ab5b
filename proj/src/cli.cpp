#include "spinpair/cli.hpp"

#include <cmath>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "spinpair/concurrence.hpp"
#include "spinpair/error.hpp"
#include "spinpair/io.hpp"
#include "spinpair/limits.hpp"
#include "spinpair/model.hpp"
#include "spinpair/svg.hpp"
#include "spinpair/sweep.hpp"
#include "spinpair/verify.hpp"

namespace spinpair::cli {

namespace {

using nlohmann::json;

enum class Format { Csv, Json, Svg };

struct AxisArgs {
  std::string param;
  double from = 0.0;
  double to = 0.0;
};

/// Everything a command line can carry; each verb reads the fields it needs.
struct CommandRequest {
  ModelParams params{1.0, 1.0, 1.0};
  std::optional<double> temp;
  std::string method = "analytic";
  AxisArgs axis;          // sweep, 1D
  int steps = 101;
  AxisArgs x_axis;        // 2D sweep / phase diagram
  AxisArgs y_axis;
  std::string grid;
  std::string output;
  std::string format;
  std::string limit_case;
  double tol = 0.0;
  double t_max = 1e4;
  int scan_points = 64;
  std::uint64_t seed = 42;
  std::size_t samples = 10000;
  int threads = 0;
};

Format resolve_format(const CommandRequest& req, Format fallback) {
  std::string f = req.format;
  if (f.empty() && !req.output.empty()) {
    const auto ext = std::filesystem::path(req.output).extension().string();
    if (ext == ".csv") f = "csv";
    if (ext == ".json") f = "json";
    if (ext == ".svg") f = "svg";
  }
  if (f.empty()) return fallback;
  if (f == "csv") return Format::Csv;
  if (f == "json") return Format::Json;
  if (f == "svg") return Format::Svg;
  throw Error(ErrorCode::InvalidArgument, "unknown format '" + f + "' (csv, json, svg)");
}

std::pair<int, int> parse_grid(const std::string& grid) {
  const auto x = grid.find('x');
  if (x == std::string::npos) {
    throw Error(ErrorCode::InvalidArgument, "--grid expects NxM, got '" + grid + "'");
  }
  try {
    std::size_t used_n = 0, used_m = 0;
    const std::string a = grid.substr(0, x), b = grid.substr(x + 1);
    const int n = std::stoi(a, &used_n);
    const int m = std::stoi(b, &used_m);
    if (used_n != a.size() || used_m != b.size()) throw std::invalid_argument(grid);
    return {n, m};
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "--grid expects NxM, got '" + grid + "'");
  }
}

Temperature required_temp(const CommandRequest& req) {
  if (!req.temp) throw Error(ErrorCode::InvalidArgument, "--temp is required");
  return Temperature(*req.temp);
}

// Writes to --output if given, otherwise to stdout.
void deliver(const CommandRequest& req, const std::string& content, std::ostream& out) {
  if (req.output.empty()) {
    out << content;
    return;
  }
  io::write_file_atomic(req.output, content);
  out << json{{"schema_version", io::kSchemaVersion}, {"written", req.output}}.dump() << '\n';
}

int cmd_concurrence(const CommandRequest& req, std::ostream& out) {
  if (req.temp && *req.temp == 0.0) {
    // T = 0 is answered by the ground-state classification.
    json j = io::to_json(classify_ground_state(req.params), req.params);
    j["temp"] = 0.0;
    j["value"] = ground_state_concurrence(req.params);
    j["path"] = "ground_state";
    out << j.dump() << '\n';
    return kSuccess;
  }
  const Temperature t = required_temp(req);
  const Method m = parse_method(req.method);
  const ConcurrenceResult c = m == Method::Analytic ? concurrence_analytic(req.params, t)
                                                    : concurrence_oracle(req.params, t);
  out << io::to_json(c, req.params, t.value()).dump() << '\n';
  return kSuccess;
}

int cmd_spectrum(const CommandRequest& req, std::ostream& out) {
  out << io::to_json(analytic_spectrum(req.params), req.params).dump() << '\n';
  return kSuccess;
}

int cmd_ground_state(const CommandRequest& req, std::ostream& out) {
  json j = io::to_json(classify_ground_state(req.params), req.params);
  j["concurrence"] = ground_state_concurrence(req.params);
  out << j.dump() << '\n';
  return kSuccess;
}

AxisSpec make_axis(const AxisArgs& a, int steps, const char* flag) {
  if (a.param.empty()) {
    throw Error(ErrorCode::InvalidAxis, std::string(flag) + " is required");
  }
  return AxisSpec{parse_param(a.param), a.from, a.to, steps};
}

int cmd_sweep(const CommandRequest& req, std::ostream& out) {
  const Temperature t(req.temp.value_or(1.0));
  const Method m = parse_method(req.method);
  SweepResult result;
  if (!req.x_axis.param.empty() || !req.y_axis.param.empty()) {
    const auto [nx, ny] = parse_grid(req.grid.empty() ? "50x50" : req.grid);
    result = sweep_2d(make_axis(req.x_axis, nx, "--x-param"),
                      make_axis(req.y_axis, ny, "--y-param"), req.params, t, m, req.threads);
  } else {
    result = sweep_1d(make_axis(req.axis, req.steps, "--param"), req.params, t, m, req.threads);
  }
  switch (resolve_format(req, Format::Csv)) {
    case Format::Csv: deliver(req, io::to_csv(result), out); break;
    case Format::Json: deliver(req, io::to_json(result).dump() + "\n", out); break;
    case Format::Svg: deliver(req, svg::render(result), out); break;
  }
  return kSuccess;
}

int cmd_phase_diagram(const CommandRequest& req, std::ostream& out) {
  const auto [nx, ny] = parse_grid(req.grid.empty() ? "200x200" : req.grid);
  // Without explicit axes, the D_x / Gamma_x plane at fixed J.
  const AxisArgs x = req.x_axis.param.empty() ? AxisArgs{"dx", -3.0, 3.0} : req.x_axis;
  const AxisArgs y = req.y_axis.param.empty() ? AxisArgs{"gx", -4.0, 4.0} : req.y_axis;
  const PhaseRaster raster = phase_diagram_raster(
      make_axis(x, nx, "--x-param"), make_axis(y, ny, "--y-param"), req.params, req.threads);
  switch (resolve_format(req, Format::Csv)) {
    case Format::Csv: deliver(req, io::to_csv(raster), out); break;
    case Format::Json: deliver(req, io::to_json(raster).dump() + "\n", out); break;
    case Format::Svg: deliver(req, svg::render(raster), out); break;
  }
  return kSuccess;
}

int cmd_tc(const CommandRequest& req, std::ostream& out) {
  CriticalTemperatureOptions options;
  options.method = parse_method(req.method);
  options.scan_points = req.scan_points;
  const double tol = req.tol > 0.0 ? req.tol : 1e-6;
  const CriticalTemperature tc = critical_temperature(req.params, req.t_max, tol, options);
  out << io::to_json(tc, req.params).dump() << '\n';
  return kSuccess;
}

int cmd_limits(const CommandRequest& req, std::ostream& out) {
  const Temperature t = required_temp(req);
  ModelParams p = req.params;
  limits::LimitValue lv;
  if (req.limit_case == "high-temperature") {
    p = {1.0, 1.0, 1.0};  // the formula is specific to this point
    lv = limits::high_temperature(t);
  } else if (req.limit_case == "strong-coupling") {
    lv = limits::strong_coupling(p, t);
  } else if (req.limit_case == "strong-dm-ksea") {
    lv = limits::strong_dm_ksea(p, t);
  } else {
    throw Error(ErrorCode::InvalidArgument,
                "--case must be high-temperature, strong-coupling or strong-dm-ksea");
  }
  const double exact = concurrence_analytic(p, t).value;
  const double oracle = concurrence_oracle(p, t).value;
  json j{{"schema_version", io::kSchemaVersion},
         {"case", req.limit_case},
         {"formula", limits::to_string(lv.formula)},
         {"j", p.j},
         {"dx", p.dx},
         {"gx", p.gx},
         {"temp", t.value()},
         {"limit_value", lv.value},
         {"exact_value", exact},
         {"oracle_value", oracle},
         {"difference", lv.value - exact},
         {"out_of_range", lv.value > 1.0},
         {"documented_discrepancy", lv.documented_discrepancy}};
  if (lv.formula == limits::Formula::StrongCouplingFerro) {
    j["note"] =
        "ferromagnetic strong-coupling formula is non-positive for every input and clamps "
        "to 0; the exact concurrence is authoritative";
  } else if (lv.formula == limits::Formula::StrongDm) {
    j["note"] =
        "strong-DM formula carries 2*beta arguments and grows like exp(beta*dx), leaving "
        "[0,1]; the exact concurrence is authoritative";
  }
  out << j.dump() << '\n';
  return kSuccess;
}

int cmd_verify(const CommandRequest& req, std::ostream& out) {
  const double tol = req.tol > 0.0 ? req.tol : 1e-9;
  const VerifyReport report = run_verify(req.samples, req.seed, tol, req.threads);
  deliver(req, io::to_json(report).dump(2) + "\n", out);
  return report.failures.empty() ? kSuccess : kVerifyFailed;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidAxis:
    case ErrorCode::Io:
      return kUsage;
    default:
      return kNumeric;
  }
}

void report_error(std::ostream& err, std::string_view kind, std::string_view message) {
  err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

void add_coupling_options(CLI::App* sub, CommandRequest& req) {
  sub->add_option("--j", req.params.j, "exchange coupling J")->capture_default_str();
  sub->add_option("--dx", req.params.dx, "DM x-component")->capture_default_str();
  sub->add_option("--gx", req.params.gx, "KSEA x-component")->capture_default_str();
}

void add_output_options(CLI::App* sub, CommandRequest& req) {
  sub->add_option("--output", req.output, "output path (default: stdout)");
  sub->add_option("--format", req.format, "csv, json or svg");
}

void add_xy_options(CLI::App* sub, CommandRequest& req) {
  sub->add_option("--x-param", req.x_axis.param, "x quantity");
  sub->add_option("--x-from", req.x_axis.from);
  sub->add_option("--x-to", req.x_axis.to);
  sub->add_option("--y-param", req.y_axis.param, "y quantity");
  sub->add_option("--y-from", req.y_axis.from);
  sub->add_option("--y-to", req.y_axis.to);
  sub->add_option("--grid", req.grid, "NxM grid size");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandRequest req;
  CLI::App app{"Thermal entanglement of a two-qubit XXX chain with DM and KSEA couplings",
               "spinpair"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  auto* concurrence = app.add_subcommand("concurrence", "concurrence at one temperature");
  add_coupling_options(concurrence, req);
  concurrence->add_option("--temp", req.temp, "temperature (0: ground state)");
  concurrence->add_option("--method", req.method, "analytic or oracle")->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "closed-form energies, angles, eigenvectors");
  add_coupling_options(spectrum, req);

  auto* ground = app.add_subcommand("ground-state", "T=0 ground-state classification");
  add_coupling_options(ground, req);

  auto* sweep = app.add_subcommand("sweep", "concurrence over a 1D or 2D grid");
  add_coupling_options(sweep, req);
  sweep->add_option("--temp", req.temp, "base temperature (default 1)");
  sweep->add_option("--method", req.method, "analytic or oracle")->capture_default_str();
  sweep->add_option("--param", req.axis.param, "swept quantity: temp, log_temp, j, dx, gx");
  sweep->add_option("--from", req.axis.from);
  sweep->add_option("--to", req.axis.to);
  sweep->add_option("--steps", req.steps)->capture_default_str();
  add_xy_options(sweep, req);
  add_output_options(sweep, req);
  sweep->add_option("--threads", req.threads, "worker threads (default: SPINPAIR_THREADS)");

  auto* phase = app.add_subcommand("phase-diagram", "T=0 phase diagram raster");
  add_coupling_options(phase, req);
  add_xy_options(phase, req);
  add_output_options(phase, req);
  phase->add_option("--threads", req.threads);

  auto* tc = app.add_subcommand("tc", "threshold temperature above which C = 0");
  add_coupling_options(tc, req);
  tc->add_option("--t-max", req.t_max)->capture_default_str();
  tc->add_option("--tol", req.tol, "bracket width (default 1e-6)");
  tc->add_option("--scan-points", req.scan_points)->capture_default_str();
  tc->add_option("--method", req.method)->capture_default_str();

  auto* lim = app.add_subcommand("limits", "asymptotic formulas next to the exact value");
  add_coupling_options(lim, req);
  lim->add_option("--case", req.limit_case,
                  "high-temperature, strong-coupling or strong-dm-ksea")
      ->required();
  lim->add_option("--temp", req.temp)->required();

  auto* verify = app.add_subcommand("verify", "randomized analytic vs oracle comparison");
  verify->add_option("--samples", req.samples)->capture_default_str();
  verify->add_option("--seed", req.seed)->capture_default_str();
  verify->add_option("--tol", req.tol, "max |C_analytic - C_oracle| (default 1e-9)");
  verify->add_option("--output", req.output, "report path (default: stdout)");
  verify->add_option("--threads", req.threads);

  std::vector<std::string> argv_storage{"spinpair"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << "0.1.0\n";
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    report_error(err, "Usage", e.what());
    return kUsage;
  }

  try {
    if (concurrence->parsed()) return cmd_concurrence(req, out);
    if (spectrum->parsed()) return cmd_spectrum(req, out);
    if (ground->parsed()) return cmd_ground_state(req, out);
    if (sweep->parsed()) return cmd_sweep(req, out);
    if (phase->parsed()) return cmd_phase_diagram(req, out);
    if (tc->parsed()) return cmd_tc(req, out);
    if (lim->parsed()) return cmd_limits(req, out);
    if (verify->parsed()) return cmd_verify(req, out);
  } catch (const Error& e) {
    report_error(err, to_string(e.code()), e.what());
    return exit_code_for(e.code());
  }
  return kUsage;
}

}  // namespace spinpair::cli
