#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "spinpair/concurrence.hpp"
#include "spinpair/limits.hpp"
#include "spinpair/model.hpp"
#include "spinpair/sweep.hpp"
#include "spinpair/verify.hpp"

namespace spinpair::io {

inline constexpr int kSchemaVersion = 1;

/// Shortest text that keeps 17 significant digits; locale independent.
std::string format_number(double x);
/// Inverse of format_number. Throws InvalidArgument on malformed text.
double parse_number(std::string_view text);

/// Header names the swept parameter(s) then `concurrence`; one row per grid
/// point in row-major order; LF line endings.
std::string to_csv(const SweepResult& result);
/// Columns x-param, y-param, phase, energy.
std::string to_csv(const PhaseRaster& raster);

/// Writes via a temporary sibling file and rename. Throws Io.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

void write_csv(const SweepResult& result, const std::filesystem::path& path);

// Flat snake_case objects, each carrying schema_version.
nlohmann::json to_json(const ModelParams& p);
nlohmann::json to_json(const Spectrum& s, const ModelParams& p);
nlohmann::json to_json(const GroundStateClass& g, const ModelParams& p);
nlohmann::json to_json(const ConcurrenceResult& c, const ModelParams& p, double temp);
nlohmann::json to_json(const SweepResult& result);
nlohmann::json to_json(const PhaseRaster& raster);
nlohmann::json to_json(const CriticalTemperature& tc, const ModelParams& p);
nlohmann::json to_json(const VerifyReport& report);

}  // namespace spinpair::io
