#include "spinpair/params.hpp"

#include <cmath>
#include <string>

#include "spinpair/error.hpp"

namespace spinpair {

void validate(const ModelParams& p) {
  if (!std::isfinite(p.j) || !std::isfinite(p.dx) || !std::isfinite(p.gx)) {
    throw Error(ErrorCode::InvalidArgument, "model parameters must be finite");
  }
}

std::string_view to_string(Param p) noexcept {
  switch (p) {
    case Param::Temp: return "temp";
    case Param::LogTemp: return "log_temp";
    case Param::J: return "j";
    case Param::Dx: return "dx";
    case Param::Gx: return "gx";
  }
  return "?";
}

Param parse_param(std::string_view name) {
  if (name == "temp") return Param::Temp;
  if (name == "log_temp") return Param::LogTemp;
  if (name == "j") return Param::J;
  if (name == "dx") return Param::Dx;
  if (name == "gx") return Param::Gx;
  throw Error(ErrorCode::InvalidAxis, "unknown parameter '" + std::string(name) +
                                          "' (expected temp, log_temp, j, dx, gx)");
}

bool is_coupling(Param p) noexcept {
  return p == Param::J || p == Param::Dx || p == Param::Gx;
}

void AxisSpec::validate() const {
  const std::string name(to_string(param));
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(ErrorCode::InvalidAxis, name + ": range must be finite");
  }
  if (!(lo < hi)) {
    throw Error(ErrorCode::InvalidAxis, name + ": need lo < hi");
  }
  if (steps < 2) {
    throw Error(ErrorCode::InvalidAxis, name + ": need at least 2 steps");
  }
  if (param == Param::Temp && !(lo > 0.0)) {
    throw Error(ErrorCode::InvalidAxis, "temp: lower bound must be > 0");
  }
}

double AxisSpec::node(int k) const {
  if (k == steps - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps - 1);
}

double AxisSpec::cell_center(int k) const {
  return lo + (hi - lo) * (static_cast<double>(k) + 0.5) / static_cast<double>(steps);
}

void assign(SamplePoint& point, Param param, double value) {
  switch (param) {
    case Param::Temp: point.temp = value; break;
    case Param::LogTemp: point.temp = std::pow(10.0, value); break;
    case Param::J: point.params.j = value; break;
    case Param::Dx: point.params.dx = value; break;
    case Param::Gx: point.params.gx = value; break;
  }
}

}  // namespace spinpair
