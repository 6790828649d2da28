#pragma once

// CSV, pixmap and manifest writers.

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "bhgame/sweep.hpp"

namespace bhgame {

/// 9 significant digits; integral values keep a trailing ".0".
std::string format_number(double v);

/// Header `x,y,r,class_code` then one row per computed cell in grid order.
void write_grid_csv(const ClassificationGrid& grid, std::ostream& out);
/// Throws IoError with the path on failure.
void emit_grid_csv(const ClassificationGrid& grid, const std::filesystem::path& path);

using Rgb = std::array<std::uint8_t, 3>;
Rgb class_color(std::uint8_t code) noexcept;

/// P6 pixmap, width y steps, height x steps, top row at maximum x. Throws
/// UsageError for non-slice grids.
void write_slice_image(const ClassificationGrid& grid, std::ostream& out);
void emit_slice_image(const ClassificationGrid& grid, const std::filesystem::path& path);

void write_info_curves_csv(const std::vector<InfoCurveRow>& rows, std::ostream& out);
std::string info_curves_document(const std::vector<InfoCurveRow>& rows, const EcoParams& params);

/// Run manifest: configuration, parameters, version, wall time, outputs.
std::string sweep_manifest(const ClassificationGrid& grid,
                           const std::vector<std::string>& outputs);
void emit_text(const std::string& text, const std::filesystem::path& path);

}  // namespace bhgame
