#include "spinpair/sweep.hpp"

#include <cmath>
#include <string>

#include "spinpair/concurrence.hpp"
#include "spinpair/error.hpp"
#include "spinpair/parallel.hpp"
#include "spinpair/tolerances.hpp"

namespace spinpair {

std::string_view to_string(Method m) noexcept {
  return m == Method::Analytic ? "analytic" : "oracle";
}

Method parse_method(std::string_view name) {
  if (name == "analytic") return Method::Analytic;
  if (name == "oracle") return Method::Oracle;
  throw Error(ErrorCode::InvalidArgument,
              "unknown method '" + std::string(name) + "' (expected analytic or oracle)");
}

double evaluate_concurrence(const ModelParams& p, Temperature temp, Method method) {
  return method == Method::Analytic ? concurrence_analytic(p, temp).value
                                    : concurrence_oracle(p, temp).value;
}

SamplePoint SweepResult::point_at(std::size_t index) const {
  SamplePoint point{base, base_temp};
  if (axes.size() == 1) {
    assign(point, axes[0].param, axes[0].node(static_cast<int>(index)));
  } else {
    const auto nx = static_cast<std::size_t>(axes[0].steps);
    assign(point, axes[0].param, axes[0].node(static_cast<int>(index % nx)));
    assign(point, axes[1].param, axes[1].node(static_cast<int>(index / nx)));
  }
  return point;
}

namespace {

bool same_quantity(Param a, Param b) {
  auto is_temp = [](Param p) { return p == Param::Temp || p == Param::LogTemp; };
  return a == b || (is_temp(a) && is_temp(b));
}

void fill(SweepResult& result, int threads) {
  std::size_t n = 1;
  for (const auto& axis : result.axes) n *= static_cast<std::size_t>(axis.steps);
  result.values.assign(n, 0.0);
  parallel_for(n, threads, [&result](std::size_t k) {
    const SamplePoint point = result.point_at(k);
    try {
      result.values[k] =
          evaluate_concurrence(point.params, Temperature(point.temp), result.method);
    } catch (const Error& e) {
      throw Error(e.code(), "grid index " + std::to_string(k) + ": " + e.what());
    }
  });
}

}  // namespace

SweepResult sweep_1d(const AxisSpec& axis, const ModelParams& base, Temperature base_temp,
                     Method method, int threads) {
  axis.validate();
  validate(base);
  SweepResult result{{axis}, base, base_temp.value(), method, {}};
  fill(result, threads);
  return result;
}

SweepResult sweep_2d(const AxisSpec& ax, const AxisSpec& ay, const ModelParams& base,
                     Temperature base_temp, Method method, int threads) {
  ax.validate();
  ay.validate();
  if (same_quantity(ax.param, ay.param)) {
    throw Error(ErrorCode::InvalidAxis, "sweep axes must name different quantities");
  }
  validate(base);
  SweepResult result{{ax, ay}, base, base_temp.value(), method, {}};
  fill(result, threads);
  return result;
}

CriticalTemperature critical_temperature(const ModelParams& p, double t_max, double tol,
                                         const CriticalTemperatureOptions& options) {
  validate(p);
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw Error(ErrorCode::InvalidArgument, "tc: tolerance must be > 0");
  }
  if (!(options.t_min > 0.0) || !(t_max > options.t_min) || !std::isfinite(t_max)) {
    throw Error(ErrorCode::InvalidArgument, "tc: need 0 < t_min < t_max");
  }
  if (options.scan_points < 2) {
    throw Error(ErrorCode::InvalidArgument, "tc: need at least 2 scan points");
  }

  auto entangled = [&](double t) {
    return evaluate_concurrence(p, Temperature(t), options.method) > tol::kZeroConcurrence;
  };

  const int n = options.scan_points;
  const double ratio = std::log(t_max / options.t_min);
  std::vector<double> temps(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    temps[k] = k == n - 1 ? t_max : options.t_min * std::exp(ratio * k / (n - 1));
  }
  if (entangled(temps.back())) {
    throw Error(ErrorCode::NoVanishing,
                "tc: concurrence still positive at t_max = " + std::to_string(t_max));
  }
  int last = -1;
  for (int k = n - 2; k >= 0; --k) {
    if (entangled(temps[k])) {
      last = k;
      break;
    }
  }
  if (last < 0) {
    throw Error(ErrorCode::NoEntanglement, "tc: concurrence is zero over the whole scan");
  }

  double lo = temps[last];
  double hi = temps[last + 1];
  while (hi - lo > tol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;  // interval at double resolution
    (entangled(mid) ? lo : hi) = mid;
  }
  return {0.5 * (lo + hi), lo, hi, tol};
}

}  // namespace spinpair
