#pragma once

#include <array>

#include "spinpair/linalg.hpp"
#include "spinpair/params.hpp"

namespace spinpair {

/// Strictly positive temperature (k_B = 1) with its inverse cached.
class Temperature {
 public:
  /// Throws InvalidArgument unless t is finite and > 0.
  explicit Temperature(double t);

  double value() const noexcept { return t_; }
  double beta() const noexcept { return beta_; }

 private:
  double t_;
  double beta_;
};

/// Unnormalized matrix elements of the Gibbs state, Z rho =
///
///   | a      i mu   i nu   c     |
///   | -i mu  b      d      -i nu |
///   | -i nu  d      b      -i mu |
///   | c      i nu   i mu   a     |
struct ThermalElements {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double mu = 0.0;
  double nu = 0.0;
};

/// rho = sum_k populations[k] |states[k]><states[k]|
struct SpectralFactor {
  std::array<double, 4> populations{};
  std::array<Vector4, 4> states{};
};

struct ThermalState {
  Matrix4 rho;
  /// Partition function, divided by exp(log_shift). log_shift is 0 unless
  /// some |beta * energy| exceeded the exponent guard, in which case the
  /// Boltzmann weights (and `elements`) were computed relative to the
  /// ground energy.
  double z = 1.0;
  double log_shift = 0.0;
  ThermalElements elements;
  SpectralFactor spectral;

  double log_z() const;
};

/// Z = 2 e^{bJ} cosh(2 b eta) + 2 e^{-bJ} cosh(2 b gx). Throws Overflow
/// when an exponent argument exceeds the guard; use log_partition_function
/// there.
double partition_function(const ModelParams& p, Temperature temp);

/// ln Z, computed from ground-shifted weights; never overflows.
double log_partition_function(const ModelParams& p, Temperature temp);

/// Gibbs state from the closed-form spectrum and matrix elements.
ThermalState thermal_state_analytic(const ModelParams& p, Temperature temp);

/// Gibbs state from numerical diagonalization of the Hamiltonian.
ThermalState thermal_state_oracle(const ModelParams& p, Temperature temp);

/// Boltzmann weights exp(-beta e_k); shifted by the smallest energy when any
/// |beta e_k| exceeds the guard. Returns the applied log shift.
double boltzmann_weights(const std::array<double, 4>& energies, Temperature temp,
                         std::array<double, 4>& weights);

}  // namespace spinpair
