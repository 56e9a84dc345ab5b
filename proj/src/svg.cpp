#include "spinpair/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "spinpair/io.hpp"

namespace spinpair::svg {

namespace {

constexpr std::array<Rgb, 8> kStops{{{68, 1, 84},
                                     {70, 50, 126},
                                     {54, 92, 141},
                                     {39, 127, 142},
                                     {31, 161, 135},
                                     {74, 193, 109},
                                     {160, 218, 57},
                                     {253, 231, 37}}};

// Plot frame in pixels.
constexpr double kLeft = 90.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 520.0;
constexpr double kRightLine = 760.0;
constexpr double kRightRaster = 640.0;

std::string fixed2(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 2);
  return std::string(buf, res.ptr);
}

std::string tick(double x) {
  if (std::abs(x) < 1e-12) x = 0.0;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 4);
  return std::string(buf, res.ptr);
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string axis_label(Param p) {
  switch (p) {
    case Param::Temp: return "T";
    case Param::LogTemp: return "log10(T)";
    case Param::J: return "J";
    case Param::Dx: return "D_x";
    case Param::Gx: return "Gamma_x";
  }
  return "?";
}

std::string text(double x, double y, std::string_view s, std::string_view anchor = "middle",
                 int size = 14, std::string_view extra = "") {
  std::string out = "<text x=\"" + fixed2(x) + "\" y=\"" + fixed2(y) + "\" text-anchor=\"" +
                    std::string(anchor) + "\" font-size=\"" + std::to_string(size) + "\"";
  if (!extra.empty()) out += " " + std::string(extra);
  out += ">" + escape(s) + "</text>\n";
  return out;
}

std::string rect(double x, double y, double w, double h, std::string_view fill,
                 std::string_view extra = "") {
  std::string out = "<rect x=\"" + fixed2(x) + "\" y=\"" + fixed2(y) + "\" width=\"" +
                    fixed2(w) + "\" height=\"" + fixed2(h) + "\" fill=\"" + std::string(fill) +
                    "\"";
  if (!extra.empty()) out += " " + std::string(extra);
  out += "/>\n";
  return out;
}

std::string header(std::string_view title) {
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
      std::to_string(kWidth) + "\" height=\"" + std::to_string(kHeight) + "\" viewBox=\"0 0 " +
      std::to_string(kWidth) + " " + std::to_string(kHeight) +
      "\" font-family=\"sans-serif\">\n";
  out += rect(0, 0, kWidth, kHeight, "#ffffff");
  out += text(kWidth / 2.0, 30, title, "middle", 16);
  return out;
}

// Frame, x ticks at lo/mid/hi and y ticks as given.
std::string frame(double right, const AxisSpec& x, std::string_view x_name, double y_lo,
                  double y_hi, std::string_view y_name) {
  std::string out = rect(kLeft, kTop, right - kLeft, kBottom - kTop, "none",
                         "stroke=\"#000000\" stroke-width=\"1\"");
  for (int k = 0; k <= 4; ++k) {
    const double f = k / 4.0;
    const double px = kLeft + f * (right - kLeft);
    const double py = kBottom - f * (kBottom - kTop);
    out += text(px, kBottom + 20, tick(x.lo + f * (x.hi - x.lo)), "middle", 12);
    out += text(kLeft - 8, py + 4, tick(y_lo + f * (y_hi - y_lo)), "end", 12);
  }
  out += text((kLeft + right) / 2.0, kBottom + 48, x_name, "middle", 14);
  out += text(28, (kTop + kBottom) / 2.0, y_name, "middle", 14,
              "transform=\"rotate(-90 28 " + fixed2((kTop + kBottom) / 2.0) + ")\"");
  return out;
}

std::string default_title(const SweepResult& r) {
  std::string t = "Concurrence, " + std::string(to_string(r.method)) + " (J=" + tick(r.base.j) +
                  ", D_x=" + tick(r.base.dx) + ", Gamma_x=" + tick(r.base.gx) +
                  ", T=" + tick(r.base_temp) + ")";
  return t;
}

std::string render_curve(const SweepResult& r, const Style& style) {
  const AxisSpec& ax = r.axes[0];
  std::string out = header(style.title.empty() ? default_title(r) : style.title);
  for (int k = 1; k < 4; ++k) {
    const double py = kBottom - k / 4.0 * (kBottom - kTop);
    out += "<line x1=\"" + fixed2(kLeft) + "\" y1=\"" + fixed2(py) + "\" x2=\"" +
           fixed2(kRightLine) + "\" y2=\"" + fixed2(py) +
           "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
  }
  out += frame(kRightLine, ax, axis_label(ax.param), 0.0, 1.0, "C");
  out += "<polyline fill=\"none\" stroke=\"" + style.stroke + "\" stroke-width=\"2\" points=\"";
  for (std::size_t k = 0; k < r.values.size(); ++k) {
    const double f = (ax.node(static_cast<int>(k)) - ax.lo) / (ax.hi - ax.lo);
    const double v = std::clamp(r.values[k], 0.0, 1.0);
    if (k) out += ' ';
    out += fixed2(kLeft + f * (kRightLine - kLeft)) + "," +
           fixed2(kBottom - v * (kBottom - kTop));
  }
  out += "\"/>\n</svg>\n";
  return out;
}

std::string colorbar() {
  std::string out = "<defs><linearGradient id=\"cmap\" x1=\"0\" y1=\"1\" x2=\"0\" y2=\"0\">\n";
  for (std::size_t k = 0; k < kStops.size(); ++k) {
    const double f = static_cast<double>(k) / (kStops.size() - 1);
    out += "<stop offset=\"" + fixed2(f) + "\" stop-color=\"" + hex(kStops[k]) + "\"/>\n";
  }
  out += "</linearGradient></defs>\n";
  const double x = kRightRaster + 40;
  out += rect(x, kTop, 24, kBottom - kTop, "url(#cmap)", "stroke=\"#000000\"");
  for (int k = 0; k <= 4; ++k) {
    const double f = k / 4.0;
    out += text(x + 32, kBottom - f * (kBottom - kTop) + 4, tick(f), "start", 12);
  }
  out += text(x + 12, kTop - 10, "C", "middle", 14);
  return out;
}

// Cells of an nx-by-ny grid over the frame; row iy = 0 sits at the bottom.
template <typename Fill>
std::string cells(int nx, int ny, Fill&& fill_of) {
  std::string out;
  const double cw = (kRightRaster - kLeft) / nx;
  const double ch = (kBottom - kTop) / ny;
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      out += rect(kLeft + ix * cw, kBottom - (iy + 1) * ch, cw, ch, fill_of(ix, iy),
                  "shape-rendering=\"crispEdges\"");
    }
  }
  return out;
}

std::string render_heatmap(const SweepResult& r, const Style& style) {
  const AxisSpec& ax = r.axes[0];
  const AxisSpec& ay = r.axes[1];
  std::string out = header(style.title.empty() ? default_title(r) : style.title);
  out += cells(ax.steps, ay.steps, [&](int ix, int iy) {
    return hex(colormap(r.values[static_cast<std::size_t>(iy) * ax.steps + ix]));
  });
  out += frame(kRightRaster, ax, axis_label(ax.param), ay.lo, ay.hi, axis_label(ay.param));
  out += colorbar();
  out += "</svg>\n";
  return out;
}

}  // namespace

Rgb colormap(double t) {
  if (!(t > 0.0)) t = 0.0;
  t = std::min(t, 1.0);
  const double pos = t * (kStops.size() - 1);
  const std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(pos), kStops.size() - 2);
  const double f = pos - static_cast<double>(i);
  auto lerp = [f](int a, int b) { return static_cast<int>(std::lround(a + f * (b - a))); };
  return {lerp(kStops[i].r, kStops[i + 1].r), lerp(kStops[i].g, kStops[i + 1].g),
          lerp(kStops[i].b, kStops[i + 1].b)};
}

std::string hex(Rgb c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

std::string phase_color(GroundPhase g) {
  switch (g) {
    case GroundPhase::Phi1: return "#4daf4a";
    case GroundPhase::Phi2: return "#ffd92f";
    case GroundPhase::Phi4: return "#377eb8";
    case GroundPhase::DegenerateBoundary: return "#e41a1c";
  }
  return "#000000";
}

std::string render(const SweepResult& result, const Style& style) {
  return result.is_2d() ? render_heatmap(result, style) : render_curve(result, style);
}

std::string render(const PhaseRaster& raster, const Style& style) {
  const std::string title =
      style.title.empty() ? "Ground-state phase diagram at T=0 (J=" + tick(raster.fixed.j) +
                                ", D_x=" + tick(raster.fixed.dx) +
                                ", Gamma_x=" + tick(raster.fixed.gx) + ")"
                          : style.title;
  std::string out = header(title);
  out += cells(raster.x.steps, raster.y.steps,
               [&](int ix, int iy) { return phase_color(raster.at(ix, iy).phase); });
  out += frame(kRightRaster, raster.x, axis_label(raster.x.param), raster.y.lo, raster.y.hi,
               axis_label(raster.y.param));
  const GroundPhase order[] = {GroundPhase::Phi1, GroundPhase::Phi2, GroundPhase::Phi4,
                               GroundPhase::DegenerateBoundary};
  double y = kTop + 10;
  for (GroundPhase g : order) {
    out += rect(kRightRaster + 20, y, 18, 18, phase_color(g), "stroke=\"#000000\"");
    out += text(kRightRaster + 44, y + 14, to_string(g), "start", 12);
    y += 30;
  }
  out += "</svg>\n";
  return out;
}

void emit_svg(const SweepResult& result, const std::filesystem::path& path,
              const Style& style) {
  io::write_file_atomic(path, render(result, style));
}

void emit_svg(const PhaseRaster& raster, const std::filesystem::path& path,
              const Style& style) {
  io::write_file_atomic(path, render(raster, style));
}

}  // namespace spinpair::svg
