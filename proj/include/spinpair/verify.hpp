#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "spinpair/params.hpp"

namespace spinpair {

/// Reproducible parameter draws for cross-path checks.
///
/// Uses std::mt19937_64 (its output sequence is fixed by the standard) and
/// maps each 64-bit word to [0, 1) as (word >> 11) * 2^-53, so the draws are
/// identical on every platform. Each sample consumes four words in the order
/// j, dx, gx, temp: couplings are uniform in [-coupling_bound, coupling_bound]
/// and temp is log-uniform in [t_min, t_max].
class ParameterSampler {
 public:
  explicit ParameterSampler(std::uint64_t seed, double coupling_bound = 5.0,
                            double t_min = 0.05, double t_max = 50.0);

  double uniform();
  SamplePoint next();

 private:
  std::mt19937_64 engine_;
  double bound_;
  double log_t_min_;
  double log_t_span_;
};

struct VerifyFailure {
  ModelParams params;
  double temp = 0.0;
  double c_analytic = 0.0;
  double c_oracle = 0.0;
};

struct VerifyReport {
  std::size_t samples = 0;
  double max_abs_dev = 0.0;
  std::vector<VerifyFailure> failures;
  std::uint64_t seed = 0;
  double tol = 0.0;
};

/// Compares the analytic and oracle concurrence on `samples` seeded draws.
/// A draw fails when |C_analytic - C_oracle| > tol or either path throws
/// (reported with NaN for the failing side). Output does not depend on the
/// worker count.
VerifyReport run_verify(std::size_t samples, std::uint64_t seed, double tol, int threads = 0);

}  // namespace spinpair
