#include "spinpair/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "spinpair/error.hpp"
#include "spinpair/tolerances.hpp"

namespace spinpair {

std::string_view to_string(ConcurrencePath p) noexcept {
  switch (p) {
    case ConcurrencePath::AnalyticEq20: return "analytic";
    case ConcurrencePath::OracleSpectral: return "oracle";
  }
  return "?";
}

const Matrix4& spin_flip() {
  static const Matrix4 s{
      0.0,  0.0, 0.0, -1.0,  //
      0.0,  0.0, 1.0, 0.0,   //
      0.0,  1.0, 0.0, 0.0,   //
      -1.0, 0.0, 0.0, 0.0,
  };
  return s;
}

Matrix4 r_matrix(const Matrix4& rho) {
  const Matrix4& s = spin_flip();
  return rho * s * conj_elementwise(rho) * s;
}

Matrix4 r_matrix_from_elements(const ThermalElements& e, double z) {
  const Complex i{0.0, 1.0};
  const double r11 = e.a * e.a + e.c * e.c + e.mu * e.mu + e.nu * e.nu;
  const double r22 = e.b * e.b + e.d * e.d + e.mu * e.mu + e.nu * e.nu;
  const double r14 = 2.0 * e.a * e.c + 2.0 * e.mu * e.nu;
  const double r23 = 2.0 * e.b * e.d + 2.0 * e.mu * e.nu;
  const Complex r12 = i * (e.mu * (e.a + e.b) + e.nu * (e.c + e.d));
  const Complex r13 = i * (e.nu * (e.a + e.b) + e.mu * (e.c + e.d));
  // clang-format off
  Matrix4 r{
      r11,            r12,            r13,            r14,
      std::conj(r12), r22,            r23,            std::conj(r13),
      std::conj(r13), r23,            r22,            std::conj(r12),
      r14,            r13,            r12,            r11,
  };
  // clang-format on
  return r * (1.0 / (z * z));
}

double concurrence_from_roots(const std::array<double, 4>& lambdas) {
  const double largest = *std::max_element(lambdas.begin(), lambdas.end());
  const double sum = std::accumulate(lambdas.begin(), lambdas.end(), 0.0);
  return std::max(0.0, 2.0 * largest - sum);
}

namespace {

double clamped_sqrt(double radicand, const char* what) {
  if (radicand < -tol::kClampNegative) {
    throw Error(ErrorCode::NegativeRadicand,
                std::string(what) + ": radicand " + std::to_string(radicand));
  }
  return radicand > 0.0 ? std::sqrt(radicand) : 0.0;
}

// Roots of one 2x2 block of R, parametrized by x, y (the paired diagonal
// combinations) and m (the paired off-diagonal combination).
std::array<double, 2> block_roots(double x, double y, double m) {
  const double big_sum = x * x + y * y + 2.0 * m * m;
  const double trace = std::abs(x + y);
  const double disc = std::sqrt((x - y) * (x - y) + 4.0 * m * m);
  // Subtractive form only guards against inconsistent inputs.
  clamped_sqrt(0.5 * (big_sum - trace * disc), "analytic root");
  const double large = std::sqrt(0.5 * (big_sum + trace * disc));
  const double small = large > 0.0 ? std::abs(x * y - m * m) / large : 0.0;
  return {large, small};
}

std::array<double, 4> sorted_descending(std::array<double, 4> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace

std::array<double, 4> analytic_roots(const ThermalElements& e, double z) {
  const double a = e.a / z;
  const double b = e.b / z;
  const double c = e.c / z;
  const double d = e.d / z;
  const double mu = e.mu / z;
  const double nu = e.nu / z;
  const auto [l2, l1] = block_roots(a - c, b - d, mu - nu);
  const auto [l4, l3] = block_roots(a + c, b + d, mu + nu);
  return sorted_descending({l1, l2, l3, l4});
}

std::array<double, 4> wootters_roots(const SpectralFactor& factor) {
  Matrix4 sqrt_rho;
  for (std::size_t k = 0; k < 4; ++k) {
    const double p = factor.populations[k];
    if (p < -tol::kClampNegative) {
      throw Error(ErrorCode::NegativeEigenvalue,
                  "density matrix eigenvalue " + std::to_string(p));
    }
    if (p > 0.0) sqrt_rho += std::sqrt(p) * Matrix4::outer(factor.states[k]);
  }
  const Matrix4& s = spin_flip();
  return singular_values(sqrt_rho * s * conj_elementwise(sqrt_rho) * s);
}

std::array<double, 4> wootters_roots(const Matrix4& rho) {
  const HermitianEigenDecomposition eig = hermitian_eig(rho);
  SpectralFactor factor;
  for (std::size_t k = 0; k < 4; ++k) {
    factor.populations[k] = eig.values[k];
    factor.states[k] = eig.vectors[k];
  }
  return wootters_roots(factor);
}

ConcurrenceResult concurrence_analytic(const ModelParams& p, Temperature temp) {
  const ThermalState st = thermal_state_analytic(p, temp);
  ConcurrenceResult out;
  out.lambdas = analytic_roots(st.elements, st.z);
  out.value = concurrence_from_roots(out.lambdas);
  out.path = ConcurrencePath::AnalyticEq20;
  return out;
}

ConcurrenceResult concurrence_oracle(const ModelParams& p, Temperature temp) {
  const ThermalState st = thermal_state_oracle(p, temp);
  ConcurrenceResult out;
  out.lambdas = wootters_roots(st.spectral);
  out.value = concurrence_from_roots(out.lambdas);
  out.path = ConcurrencePath::OracleSpectral;
  return out;
}

ConcurrenceResult concurrence_of_state(const Matrix4& rho) {
  ConcurrenceResult out;
  out.lambdas = wootters_roots(rho);
  out.value = concurrence_from_roots(out.lambdas);
  out.path = ConcurrencePath::OracleSpectral;
  return out;
}

double ground_state_concurrence(const ModelParams& p) {
  const Spectrum s = analytic_spectrum(p);
  const GroundStateClass g = classify_ground_state(p);
  SpectralFactor mix;
  const double weight = 1.0 / static_cast<double>(g.levels.size());
  for (std::size_t k = 0; k < g.levels.size(); ++k) {
    mix.populations[k] = weight;
    mix.states[k] = s.eigenvector(g.levels[k]);
  }
  return concurrence_from_roots(wootters_roots(mix));
}

}  // namespace spinpair
