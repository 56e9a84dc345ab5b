#include "spinpair/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spinpair/error.hpp"
#include "spinpair/parallel.hpp"
#include "spinpair/tolerances.hpp"

namespace spinpair {

std::string_view to_string(Level l) noexcept {
  switch (l) {
    case Level::Phi1: return "Phi1";
    case Level::Phi2: return "Phi2";
    case Level::Phi3: return "Phi3";
    case Level::Phi4: return "Phi4";
  }
  return "?";
}

std::string_view to_string(GroundPhase g) noexcept {
  switch (g) {
    case GroundPhase::Phi1: return "Phi1";
    case GroundPhase::Phi2: return "Phi2";
    case GroundPhase::Phi4: return "Phi4";
    case GroundPhase::DegenerateBoundary: return "DegenerateBoundary";
  }
  return "?";
}

Matrix4 build_hamiltonian(const ModelParams& p) {
  validate(p);
  const Complex i{0.0, 1.0};
  const double j = p.j;
  const double d = p.dx;
  const double g = p.gx;
  // clang-format off
  return Matrix4{
      j,                -i * g + i * d,  -i * g - i * d,  0.0,
      i * g - i * d,    -j,              2.0 * j,         i * g + i * d,
      i * g + i * d,    2.0 * j,         -j,              i * g - i * d,
      0.0,              -i * g - i * d,  -i * g + i * d,  j,
  };
  // clang-format on
}

std::array<double, 2> mixing_angles(const ModelParams& p) {
  const double eta = std::hypot(p.dx, p.j);
  const double d2 = p.dx * p.dx;
  // eta - J and eta + J; the one that cancels is rewritten as Dx^2 / (eta +- J).
  const double minus = p.j > 0.0 ? d2 / (eta + p.j) : eta - p.j;
  const double plus = p.j < 0.0 ? d2 / (eta - p.j) : eta + p.j;

  auto angle = [&](double denom) {
    if (denom == 0.0 && p.dx == 0.0) {
      return p.j == 0.0 ? std::numbers::pi / 4.0 : std::numbers::pi / 2.0;
    }
    return std::atan2(p.dx, denom);
  };
  return {angle(minus), angle(plus)};
}

Spectrum analytic_spectrum(const ModelParams& p) {
  validate(p);
  Spectrum s;
  s.eta = std::hypot(p.dx, p.j);
  s.energies = {p.j + 2.0 * p.gx, p.j - 2.0 * p.gx, -p.j + 2.0 * s.eta,
                -p.j - 2.0 * s.eta};
  const auto [t1, t2] = mixing_angles(p);
  s.theta1 = t1;
  s.theta2 = t2;

  // Amplitudes are the complex conjugates of the commonly quoted closed
  // forms; only this phase choice solves H|phi> = e|phi> for the matrix above.
  const Complex i{0.0, 1.0};
  const double h = 0.5;
  const double r = std::numbers::sqrt2 / 2.0;
  s.eigenvectors[0] = {h, i * h, i * h, h};
  s.eigenvectors[1] = {h, -i * h, -i * h, h};
  s.eigenvectors[2] = {-r * std::sin(t1), i * r * std::cos(t1), -i * r * std::cos(t1),
                       r * std::sin(t1)};
  s.eigenvectors[3] = {-r * std::sin(t2), -i * r * std::cos(t2), i * r * std::cos(t2),
                       r * std::sin(t2)};
  return s;
}

GroundStateClass classify_ground_state(const ModelParams& p) {
  const Spectrum s = analytic_spectrum(p);
  GroundStateClass out;
  out.energy = *std::min_element(s.energies.begin(), s.energies.end());

  auto set = [&out](GroundPhase phase, std::vector<Level> levels) {
    out.phase = phase;
    out.levels = std::move(levels);
  };

  const double eps = tol::kPhaseBoundary;
  if (p.gx > 0.0) {
    const double margin = p.gx - (p.j + s.eta);
    if (std::abs(margin) <= eps) {
      set(GroundPhase::DegenerateBoundary, {Level::Phi2, Level::Phi4});
    } else if (margin > 0.0) {
      set(GroundPhase::Phi2, {Level::Phi2});
    } else {
      set(GroundPhase::Phi4, {Level::Phi4});
    }
  } else if (p.gx < 0.0) {
    const double margin = p.gx - (-p.j - s.eta);
    if (std::abs(margin) <= eps) {
      set(GroundPhase::DegenerateBoundary, {Level::Phi1, Level::Phi4});
    } else if (margin < 0.0) {
      set(GroundPhase::Phi1, {Level::Phi1});
    } else {
      set(GroundPhase::Phi4, {Level::Phi4});
    }
  } else if (p.j > 0.0) {
    set(GroundPhase::Phi4, {Level::Phi4});
  } else {
    // gx = 0, J <= 0: Phi1 and Phi2 share J; Phi4 sits at -J - 2 eta, which
    // only reaches J when Dx = 0 (eta = |J|).
    const double margin = p.j + s.eta;
    if (margin <= eps) {
      std::vector<Level> tied{Level::Phi1, Level::Phi2, Level::Phi4};
      if (s.eta <= eps) tied.insert(tied.begin() + 2, Level::Phi3);
      set(GroundPhase::DegenerateBoundary, std::move(tied));
    } else {
      set(GroundPhase::Phi4, {Level::Phi4});
    }
  }
  return out;
}

ModelParams PhaseRaster::params_at(int ix, int iy) const {
  SamplePoint point{fixed, 1.0};
  assign(point, x.param, x.cell_center(ix));
  assign(point, y.param, y.cell_center(iy));
  return point.params;
}

PhaseRaster phase_diagram_raster(const AxisSpec& x, const AxisSpec& y,
                                 const ModelParams& fixed, int threads) {
  x.validate();
  y.validate();
  if (!is_coupling(x.param) || !is_coupling(y.param)) {
    throw Error(ErrorCode::InvalidAxis, "phase diagram axes must be j, dx or gx");
  }
  if (x.param == y.param) {
    throw Error(ErrorCode::InvalidAxis, "phase diagram axes must differ");
  }
  validate(fixed);

  PhaseRaster raster{x, y, fixed, {}};
  const std::size_t n = static_cast<std::size_t>(x.steps) * y.steps;
  raster.cells.resize(n);
  parallel_for(n, threads, [&](std::size_t k) {
    const int ix = static_cast<int>(k % x.steps);
    const int iy = static_cast<int>(k / x.steps);
    raster.cells[k] = classify_ground_state(raster.params_at(ix, iy));
  });
  return raster;
}

}  // namespace spinpair
