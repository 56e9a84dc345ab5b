#include "spinpair/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

#include "spinpair/error.hpp"

namespace spinpair::io {

using nlohmann::json;

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double parse_number(std::string_view text) {
  double x = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), x);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw Error(ErrorCode::InvalidArgument, "not a number: '" + std::string(text) + "'");
  }
  return x;
}

std::string to_csv(const SweepResult& result) {
  std::string out;
  for (const auto& axis : result.axes) {
    out += to_string(axis.param);
    out += ',';
  }
  out += "concurrence\n";
  const std::size_t nx = static_cast<std::size_t>(result.axes[0].steps);
  for (std::size_t k = 0; k < result.values.size(); ++k) {
    out += format_number(result.axes[0].node(static_cast<int>(k % nx)));
    out += ',';
    if (result.is_2d()) {
      out += format_number(result.axes[1].node(static_cast<int>(k / nx)));
      out += ',';
    }
    out += format_number(result.values[k]);
    out += '\n';
  }
  return out;
}

std::string to_csv(const PhaseRaster& raster) {
  std::string out;
  out += to_string(raster.x.param);
  out += ',';
  out += to_string(raster.y.param);
  out += ",phase,energy\n";
  for (int iy = 0; iy < raster.y.steps; ++iy) {
    for (int ix = 0; ix < raster.x.steps; ++ix) {
      const auto& cell = raster.at(ix, iy);
      out += format_number(raster.x.cell_center(ix));
      out += ',';
      out += format_number(raster.y.cell_center(iy));
      out += ',';
      out += to_string(cell.phase);
      out += ',';
      out += format_number(cell.energy);
      out += '\n';
    }
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::Io, "cannot open " + tmp.string() + " for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw Error(ErrorCode::Io, "write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::Io, "cannot move output into " + path.string());
  }
}

void write_csv(const SweepResult& result, const std::filesystem::path& path) {
  write_file_atomic(path, to_csv(result));
}

namespace {

json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

json axis_json(const AxisSpec& a) {
  return {{"param", to_string(a.param)}, {"lo", a.lo}, {"hi", a.hi}, {"steps", a.steps}};
}

json levels_json(const std::vector<Level>& levels) {
  json out = json::array();
  for (Level l : levels) out.push_back(to_string(l));
  return out;
}

}  // namespace

json to_json(const ModelParams& p) { return {{"j", p.j}, {"dx", p.dx}, {"gx", p.gx}}; }

json to_json(const Spectrum& s, const ModelParams& p) {
  json vectors = json::array();
  for (const auto& v : s.eigenvectors) {
    json vec = json::array();
    for (const auto& z : v) vec.push_back({z.real(), z.imag()});
    vectors.push_back(vec);
  }
  return {{"schema_version", kSchemaVersion},
          {"j", p.j},
          {"dx", p.dx},
          {"gx", p.gx},
          {"energies", s.energies},
          {"eta", s.eta},
          {"theta1", s.theta1},
          {"theta2", s.theta2},
          {"eigenvectors", vectors}};
}

json to_json(const GroundStateClass& g, const ModelParams& p) {
  return {{"schema_version", kSchemaVersion},
          {"j", p.j},
          {"dx", p.dx},
          {"gx", p.gx},
          {"phase", to_string(g.phase)},
          {"energy", g.energy},
          {"levels", levels_json(g.levels)}};
}

json to_json(const ConcurrenceResult& c, const ModelParams& p, double temp) {
  return {{"schema_version", kSchemaVersion},
          {"j", p.j},
          {"dx", p.dx},
          {"gx", p.gx},
          {"temp", temp},
          {"value", c.value},
          {"lambdas", c.lambdas},
          {"path", to_string(c.path)}};
}

json to_json(const SweepResult& result) {
  json axes = json::array();
  for (const auto& a : result.axes) axes.push_back(axis_json(a));
  return {{"schema_version", kSchemaVersion},
          {"axes", axes},
          {"base", to_json(result.base)},
          {"base_temp", result.base_temp},
          {"method", to_string(result.method)},
          {"values", result.values}};
}

json to_json(const PhaseRaster& raster) {
  json phases = json::array();
  json energies = json::array();
  for (const auto& cell : raster.cells) {
    phases.push_back(to_string(cell.phase));
    energies.push_back(cell.energy);
  }
  return {{"schema_version", kSchemaVersion},
          {"x_axis", axis_json(raster.x)},
          {"y_axis", axis_json(raster.y)},
          {"fixed", to_json(raster.fixed)},
          {"sampling", "cell_center"},
          {"phases", phases},
          {"energies", energies}};
}

json to_json(const CriticalTemperature& tc, const ModelParams& p) {
  return {{"schema_version", kSchemaVersion},
          {"j", p.j},
          {"dx", p.dx},
          {"gx", p.gx},
          {"tc", tc.tc},
          {"t_lo", tc.t_lo},
          {"t_hi", tc.t_hi},
          {"tolerance", tc.tolerance}};
}

json to_json(const VerifyReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"j", f.params.j},
                        {"dx", f.params.dx},
                        {"gx", f.params.gx},
                        {"temp", f.temp},
                        {"c_analytic", number(f.c_analytic)},
                        {"c_oracle", number(f.c_oracle)}});
  }
  return {{"schema_version", kSchemaVersion},
          {"samples", report.samples},
          {"seed", report.seed},
          {"tol", report.tol},
          {"max_abs_dev", number(report.max_abs_dev)},
          {"failures", failures}};
}

}  // namespace spinpair::io
