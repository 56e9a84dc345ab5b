#pragma once

#include <string_view>
#include <vector>

#include "spinpair/params.hpp"
#include "spinpair/thermal.hpp"

namespace spinpair {

enum class Method { Analytic, Oracle };

std::string_view to_string(Method m) noexcept;
/// "analytic" or "oracle"; throws InvalidArgument otherwise.
Method parse_method(std::string_view name);

/// Concurrence at one point through the chosen path.
double evaluate_concurrence(const ModelParams& p, Temperature temp, Method method);

struct SweepResult {
  /// One axis for a curve, two (x then y) for a heatmap.
  std::vector<AxisSpec> axes;
  ModelParams base;
  double base_temp = 1.0;
  Method method = Method::Analytic;
  /// Curve: values[k] at axes[0].node(k). Heatmap: values[iy * nx + ix].
  std::vector<double> values;

  bool is_2d() const { return axes.size() == 2; }
  SamplePoint point_at(std::size_t index) const;
};

/// Uniform grid over the axis, both endpoints included. Evaluation errors
/// are rethrown with the failing grid index in the message.
SweepResult sweep_1d(const AxisSpec& axis, const ModelParams& base, Temperature base_temp,
                     Method method = Method::Analytic, int threads = 0);

/// Throws InvalidAxis when both axes name the same quantity (temp and
/// log_temp count as the same).
SweepResult sweep_2d(const AxisSpec& ax, const AxisSpec& ay, const ModelParams& base,
                     Temperature base_temp, Method method = Method::Analytic,
                     int threads = 0);

struct CriticalTemperature {
  double tc = 0.0;
  double t_lo = 0.0;  // C(t_lo) > 0
  double t_hi = 0.0;  // C(t_hi) = 0
  double tolerance = 0.0;
};

struct CriticalTemperatureOptions {
  double t_min = 1e-3;
  int scan_points = 64;
  Method method = Method::Analytic;
};

/// Temperature above which the concurrence vanishes. A geometric scan over
/// [t_min, t_max] picks the largest entangled-to-separable crossing, then
/// bisection narrows it to width <= tol. Throws NoEntanglement when C = 0
/// over the whole scan and NoVanishing when C(t_max) > 0.
CriticalTemperature critical_temperature(const ModelParams& p, double t_max, double tol,
                                         const CriticalTemperatureOptions& options = {});

}  // namespace spinpair
