#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "spinpair/linalg.hpp"
#include "spinpair/params.hpp"

namespace spinpair {

/// The four closed-form energy levels. Phi1/Phi2 carry J +/- 2 gx,
/// Phi3/Phi4 carry -J +/- 2 eta.
enum class Level { Phi1 = 0, Phi2 = 1, Phi3 = 2, Phi4 = 3 };

std::string_view to_string(Level l) noexcept;

/// H = J(sx sx + sy sy + sz sz) + Dx(sy sz - sz sy) + Gx(sy sz + sz sy)
/// written out in the computational basis.
Matrix4 build_hamiltonian(const ModelParams& p);

struct Spectrum {
  std::array<double, 4> energies{};  // indexed by Level
  double eta = 0.0;                  // sqrt(Dx^2 + J^2)
  double theta1 = 0.0;
  double theta2 = 0.0;
  std::array<Vector4, 4> eigenvectors{};  // indexed by Level

  double energy(Level l) const { return energies[static_cast<int>(l)]; }
  const Vector4& eigenvector(Level l) const {
    return eigenvectors[static_cast<int>(l)];
  }
};

/// Mixing angles theta_{1,2} = arctan(Dx / (eta -/+ J)), evaluated as
/// atan2 with the cancellation in eta - |J| removed. At Dx = 0 the
/// vanishing denominator takes the directional limit pi/2 (pi/4 for both
/// angles when J = 0 too, where the two levels coincide).
std::array<double, 2> mixing_angles(const ModelParams& p);

Spectrum analytic_spectrum(const ModelParams& p);

enum class GroundPhase { Phi1, Phi2, Phi4, DegenerateBoundary };

std::string_view to_string(GroundPhase g) noexcept;

struct GroundStateClass {
  GroundPhase phase = GroundPhase::Phi4;
  double energy = 0.0;
  /// Levels sharing the ground energy: one entry off the boundary, two or
  /// more on it.
  std::vector<Level> levels;
};

GroundStateClass classify_ground_state(const ModelParams& p);

/// T = 0 phase diagram sampled at cell centers. Cells are row-major:
/// cells[iy * x.steps + ix].
struct PhaseRaster {
  AxisSpec x;
  AxisSpec y;
  ModelParams fixed;
  std::vector<GroundStateClass> cells;

  const GroundStateClass& at(int ix, int iy) const {
    return cells[static_cast<std::size_t>(iy) * x.steps + ix];
  }
  ModelParams params_at(int ix, int iy) const;
};

/// Both axes must name distinct couplings (j, dx, gx); throws InvalidAxis.
/// `threads` <= 0 picks the default worker count.
PhaseRaster phase_diagram_raster(const AxisSpec& x, const AxisSpec& y,
                                 const ModelParams& fixed, int threads = 0);

}  // namespace spinpair
