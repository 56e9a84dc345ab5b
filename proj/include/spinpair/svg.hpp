#pragma once

#include <array>
#include <filesystem>
#include <string>

#include "spinpair/model.hpp"
#include "spinpair/sweep.hpp"

namespace spinpair::svg {

inline constexpr int kWidth = 800;
inline constexpr int kHeight = 600;

struct Style {
  std::string title;  // empty: derived from the data
  std::string stroke = "#1f77b4";
};

struct Rgb {
  int r, g, b;
};

/// Viridis-like map: linear interpolation between 8 fixed stops; t is
/// clamped to [0, 1].
Rgb colormap(double t);
std::string hex(Rgb c);

/// Fixed colors for the ground-state phases.
std::string phase_color(GroundPhase g);

/// Curve for a 1D sweep, colored heatmap with a color bar for a 2D one.
std::string render(const SweepResult& result, const Style& style = {});
/// Categorical raster with a legend.
std::string render(const PhaseRaster& raster, const Style& style = {});

void emit_svg(const SweepResult& result, const std::filesystem::path& path,
              const Style& style = {});
void emit_svg(const PhaseRaster& raster, const std::filesystem::path& path,
              const Style& style = {});

}  // namespace spinpair::svg
