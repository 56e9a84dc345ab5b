#include "spinpair/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinpair/error.hpp"
#include "spinpair/model.hpp"
#include "spinpair/tolerances.hpp"

namespace spinpair {

Temperature::Temperature(double t) : t_(t), beta_(1.0 / t) {
  if (!std::isfinite(t) || !(t > 0.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "temperature must be finite and > 0, got " + std::to_string(t));
  }
}

double ThermalState::log_z() const { return std::log(z) + log_shift; }

double boltzmann_weights(const std::array<double, 4>& energies, Temperature temp,
                         std::array<double, 4>& weights) {
  const double beta = temp.beta();
  double largest = 0.0;
  for (double e : energies) largest = std::max(largest, std::abs(beta * e));

  double shift = 0.0;
  double e0 = 0.0;
  if (largest > tol::kExponentGuard) {
    e0 = *std::min_element(energies.begin(), energies.end());
    shift = -beta * e0;
  }
  for (std::size_t k = 0; k < 4; ++k) weights[k] = std::exp(-beta * (energies[k] - e0));
  return shift;
}

double partition_function(const ModelParams& p, Temperature temp) {
  validate(p);
  const double beta = temp.beta();
  const double eta = std::hypot(p.dx, p.j);
  const double args[] = {beta * p.j, 2.0 * beta * eta, 2.0 * beta * p.gx};
  for (double x : args) {
    if (std::abs(x) > tol::kExponentGuard) {
      throw Error(ErrorCode::Overflow,
                  "partition function: exponent argument " + std::to_string(x) +
                      " exceeds guard; use log_partition_function");
    }
  }
  const double z = 2.0 * std::exp(beta * p.j) * std::cosh(2.0 * beta * eta) +
                   2.0 * std::exp(-beta * p.j) * std::cosh(2.0 * beta * p.gx);
  if (!std::isfinite(z)) {
    throw Error(ErrorCode::Overflow, "partition function overflowed");
  }
  return z;
}

double log_partition_function(const ModelParams& p, Temperature temp) {
  const Spectrum s = analytic_spectrum(p);
  const double beta = temp.beta();
  const double e0 = *std::min_element(s.energies.begin(), s.energies.end());
  double sum = 0.0;
  for (double e : s.energies) sum += std::exp(-beta * (e - e0));
  return std::log(sum) - beta * e0;
}

namespace {

Matrix4 assemble(const ThermalElements& e) {
  const Complex i{0.0, 1.0};
  // clang-format off
  return Matrix4{
      e.a,         i * e.mu,   i * e.nu,   e.c,
      -i * e.mu,   e.b,        e.d,        -i * e.nu,
      -i * e.nu,   e.d,        e.b,        -i * e.mu,
      e.c,         i * e.nu,   i * e.mu,   e.a,
  };
  // clang-format on
}

}  // namespace

ThermalState thermal_state_analytic(const ModelParams& p, Temperature temp) {
  const Spectrum s = analytic_spectrum(p);
  std::array<double, 4> w{};
  const double shift = boltzmann_weights(s.energies, temp, w);
  const double s1 = std::sin(s.theta1);
  const double c1 = std::cos(s.theta1);
  const double s2 = std::sin(s.theta2);
  const double c2 = std::cos(s.theta2);
  const double sin2t1 = std::sin(2.0 * s.theta1);
  const double sin2t2 = std::sin(2.0 * s.theta2);

  ThermalState st;
  ThermalElements& e = st.elements;
  e.a = 0.25 * (2.0 * w[2] * s1 * s1 + 2.0 * w[3] * s2 * s2 + w[0] + w[1]);
  e.b = 0.25 * (2.0 * w[2] * c1 * c1 + 2.0 * w[3] * c2 * c2 + w[0] + w[1]);
  e.c = 0.25 * (-2.0 * w[2] * s1 * s1 - 2.0 * w[3] * s2 * s2 + w[0] + w[1]);
  e.d = 0.25 * (-2.0 * w[2] * c1 * c1 - 2.0 * w[3] * c2 * c2 + w[0] + w[1]);
  e.mu = -0.25 * (-w[2] * sin2t1 + w[3] * sin2t2 + w[0] - w[1]);
  e.nu = -0.25 * (w[2] * sin2t1 - w[3] * sin2t2 + w[0] - w[1]);

  st.log_shift = shift;
  st.z = shift == 0.0 ? partition_function(p, temp) : w[0] + w[1] + w[2] + w[3];
  st.rho = assemble(e) * (1.0 / st.z);
  for (std::size_t k = 0; k < 4; ++k) {
    st.spectral.populations[k] = w[k] / st.z;
    st.spectral.states[k] = s.eigenvectors[k];
  }
  return st;
}

ThermalState thermal_state_oracle(const ModelParams& p, Temperature temp) {
  const HermitianEigenDecomposition eig = hermitian_eig(build_hamiltonian(p));
  std::array<double, 4> w{};
  const double shift = boltzmann_weights(eig.values, temp, w);

  ThermalState st;
  st.log_shift = shift;
  st.z = w[0] + w[1] + w[2] + w[3];
  for (std::size_t k = 0; k < 4; ++k) {
    st.spectral.populations[k] = w[k] / st.z;
    st.spectral.states[k] = eig.vectors[k];
    st.rho += st.spectral.populations[k] * Matrix4::outer(eig.vectors[k]);
  }
  const Matrix4& r = st.rho;
  st.elements = {st.z * r(0, 0).real(), st.z * r(1, 1).real(), st.z * r(0, 3).real(),
                 st.z * r(1, 2).real(), st.z * r(0, 1).imag(), st.z * r(0, 2).imag()};
  return st;
}

}  // namespace spinpair
