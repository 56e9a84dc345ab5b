#pragma once

#include <string_view>

#include "spinpair/params.hpp"
#include "spinpair/thermal.hpp"

/// Asymptotic concurrence formulas, evaluated exactly as they are commonly
/// printed. These are approximations for specific regimes and are never
/// used in place of the exact paths in `concurrence.hpp`. Two of them
/// (ferromagnetic strong coupling, and strong DM with gx < dx) disagree
/// with the exact result; `documented_discrepancy` marks those branches.
namespace spinpair::limits {

enum class Formula {
  HighTemperature,            // J = gx = dx = 1, small beta
  StrongCouplingAntiferro,    // J >> gx, dx with J > 0
  StrongCouplingFerro,        // J << -gx, -dx  (always clamps to 0)
  StrongKsea,                 // gx, dx >> |J| with gx > dx
  StrongDm,                   // gx, dx >> |J| with gx < dx (can exceed 1)
};

std::string_view to_string(Formula f) noexcept;

struct LimitValue {
  double value = 0.0;
  Formula formula = Formula::HighTemperature;
  bool documented_discrepancy = false;
};

/// max(0, ((2 sqrt2 + 1) beta - 1) / 2)
LimitValue high_temperature(Temperature temp);

/// J >= 0: max(0, (e^{4bJ} - 3) / (2 cosh(2b gx) + e^{4bJ} + 1))
/// J <  0: max(0, -(e^{4bJ} + 1) / (2 cosh(2b gx) + e^{4bJ} + 1))
LimitValue strong_coupling(const ModelParams& p, Temperature temp);

/// gx >= dx: max(0, sqrt2 (sinh(b gx) - cosh(b dx)) / sqrt(cosh(2b dx) + cosh(2b gx)))
/// gx <  dx: max(0, sqrt2 (sinh(2b dx) - cosh(2b gx)) / sqrt(cosh(2b dx) + cosh(2b gx)))
/// The second branch grows like e^{b dx}; throws Overflow once that is not
/// representable.
LimitValue strong_dm_ksea(const ModelParams& p, Temperature temp);

}  // namespace spinpair::limits
