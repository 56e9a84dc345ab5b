#include "spinpair/verify.hpp"

#include <cmath>
#include <limits>

#include "spinpair/concurrence.hpp"
#include "spinpair/error.hpp"
#include "spinpair/parallel.hpp"

namespace spinpair {

ParameterSampler::ParameterSampler(std::uint64_t seed, double coupling_bound, double t_min,
                                   double t_max)
    : engine_(seed),
      bound_(coupling_bound),
      log_t_min_(std::log(t_min)),
      log_t_span_(std::log(t_max) - std::log(t_min)) {}

double ParameterSampler::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

SamplePoint ParameterSampler::next() {
  SamplePoint s;
  s.params.j = bound_ * (2.0 * uniform() - 1.0);
  s.params.dx = bound_ * (2.0 * uniform() - 1.0);
  s.params.gx = bound_ * (2.0 * uniform() - 1.0);
  s.temp = std::exp(log_t_min_ + log_t_span_ * uniform());
  return s;
}

VerifyReport run_verify(std::size_t samples, std::uint64_t seed, double tol, int threads) {
  if (!(tol >= 0.0)) throw Error(ErrorCode::InvalidArgument, "verify: tol must be >= 0");

  ParameterSampler sampler(seed);
  std::vector<SamplePoint> points(samples);
  for (auto& p : points) p = sampler.next();

  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> analytic(samples, kNaN);
  std::vector<double> oracle(samples, kNaN);
  parallel_for(samples, threads, [&](std::size_t k) {
    const Temperature t(points[k].temp);
    try {
      analytic[k] = concurrence_analytic(points[k].params, t).value;
    } catch (const Error&) {
    }
    try {
      oracle[k] = concurrence_oracle(points[k].params, t).value;
    } catch (const Error&) {
    }
  });

  VerifyReport report;
  report.samples = samples;
  report.seed = seed;
  report.tol = tol;
  for (std::size_t k = 0; k < samples; ++k) {
    double dev = std::abs(analytic[k] - oracle[k]);
    if (std::isnan(dev)) dev = std::numeric_limits<double>::infinity();
    report.max_abs_dev = std::max(report.max_abs_dev, dev);
    if (dev > tol) {
      report.failures.push_back({points[k].params, points[k].temp, analytic[k], oracle[k]});
    }
  }
  return report;
}

}  // namespace spinpair
