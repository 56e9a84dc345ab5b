#include "spinpair/limits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spinpair/error.hpp"
#include "spinpair/tolerances.hpp"

namespace spinpair::limits {

std::string_view to_string(Formula f) noexcept {
  switch (f) {
    case Formula::HighTemperature: return "high-temperature";
    case Formula::StrongCouplingAntiferro: return "strong-coupling-antiferromagnetic";
    case Formula::StrongCouplingFerro: return "strong-coupling-ferromagnetic";
    case Formula::StrongKsea: return "strong-ksea";
    case Formula::StrongDm: return "strong-dm";
  }
  return "?";
}

LimitValue high_temperature(Temperature temp) {
  const double slope = 2.0 * std::numbers::sqrt2 + 1.0;
  return {std::max(0.0, 0.5 * (slope * temp.beta() - 1.0)), Formula::HighTemperature,
          false};
}

LimitValue strong_coupling(const ModelParams& p, Temperature temp) {
  validate(p);
  const double beta = temp.beta();
  if (p.j >= 0.0) {
    // Divide through by e^{4bJ} so large J cannot overflow.
    const double u = std::exp(-4.0 * beta * p.j);
    const double cosh_term = std::exp(2.0 * beta * p.gx - 4.0 * beta * p.j) +
                             std::exp(-2.0 * beta * p.gx - 4.0 * beta * p.j);
    const double value = (1.0 - 3.0 * u) / (cosh_term + 1.0 + u);
    return {std::max(0.0, value), Formula::StrongCouplingAntiferro, false};
  }
  // Numerator and denominator are both positive, so this is never above 0.
  const double e4 = std::exp(4.0 * beta * p.j);
  const double value = -(e4 + 1.0) / (2.0 * std::cosh(2.0 * beta * p.gx) + e4 + 1.0);
  return {std::max(0.0, value), Formula::StrongCouplingFerro, true};
}

LimitValue strong_dm_ksea(const ModelParams& p, Temperature temp) {
  validate(p);
  const double bg = temp.beta() * p.gx;
  const double bd = temp.beta() * p.dx;
  // Everything is scaled by e^{-m} (numerator) and e^{-m} (denominator) so
  // no intermediate exponential exceeds 1.
  const double m = std::max(std::abs(bg), std::abs(bd));
  const double denom = std::sqrt(0.5 * (std::exp(2.0 * bd - 2.0 * m) + std::exp(-2.0 * bd - 2.0 * m) +
                                        std::exp(2.0 * bg - 2.0 * m) + std::exp(-2.0 * bg - 2.0 * m)));

  if (p.gx >= p.dx) {
    const double sinh_g = 0.5 * (std::exp(bg - m) - std::exp(-bg - m));
    const double cosh_d = 0.5 * (std::exp(bd - m) + std::exp(-bd - m));
    const double value = std::numbers::sqrt2 * (sinh_g - cosh_d) / denom;
    return {std::max(0.0, value), Formula::StrongKsea, false};
  }

  // sinh(2 b dx) - cosh(2 b gx), scaled by e^{-2m}; the quotient then needs
  // one factor e^{m} back.
  const double num = 0.5 * (std::exp(2.0 * bd - 2.0 * m) - std::exp(-2.0 * bd - 2.0 * m)) -
                     0.5 * (std::exp(2.0 * bg - 2.0 * m) + std::exp(-2.0 * bg - 2.0 * m));
  const double ratio = std::numbers::sqrt2 * num / denom;
  if (ratio > 0.0 && m > tol::kExponentGuard) {
    throw Error(ErrorCode::Overflow, "strong-dm limit: e^{beta dx} not representable");
  }
  return {std::max(0.0, ratio * std::exp(m)), Formula::StrongDm, true};
}

}  // namespace spinpair::limits
