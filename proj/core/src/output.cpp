#include "bhgame/output.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "bhgame/error.hpp"
#include "bhgame/version.hpp"
#include "params_json.hpp"

namespace bhgame {
namespace {

std::ofstream open_output(const std::filesystem::path& path, std::ios::openmode mode) {
  std::ofstream out(path, mode);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

nlohmann::ordered_json axis_json(const Axis& a) {
  return {{"lo", a.lo}, {"hi", a.hi}, {"steps", a.steps}};
}

nlohmann::ordered_json sensor_json(const SensorModel& m) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : m.rows()) rows.push_back(row);
  return rows;
}

}  // namespace

namespace detail {

nlohmann::ordered_json params_json(const EcoParams& params, const GameOptions& options) {
  return {
      {"alpha", params.alpha},
      {"beta", params.beta},
      {"capacity_x", params.capacity_x},
      {"capacity_y", params.capacity_y},
      {"resource_model", to_string(params.resource_model)},
      {"sensor_model", params.sensors.name},
      {"sensor_x", sensor_json(params.sensors.x)},
      {"sensor_y", sensor_json(params.sensors.y)},
      {"diagonal_fitness", params.diagonal_fitness},
      {"mortality_in_logistic", params.mortality_in_logistic},
      {"interpolation_normalize", params.interpolation_normalize},
      {"label_order", to_string(options.label_order)},
      {"classifier", to_string(options.classifier)},
  };
}

}  // namespace detail

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  std::string s(buf);
  if (s.find_first_of(".eEni") == std::string::npos) s += ".0";
  return s;
}

void write_grid_csv(const ClassificationGrid& grid, std::ostream& out) {
  out << "x,y,r,class_code\n";
  for (std::size_t i = 0; i < grid.classes.size(); ++i) {
    if (grid.classes[i] == kNotComputed) continue;
    const EcoState s = cell_state(grid.config, i);
    out << format_number(s.x) << ',' << format_number(s.y) << ',' << format_number(s.r) << ','
        << int(grid.classes[i]) << '\n';
  }
}

void emit_grid_csv(const ClassificationGrid& grid, const std::filesystem::path& path) {
  auto out = open_output(path, std::ios::out | std::ios::trunc);
  write_grid_csv(grid, out);
  finish(out, path);
}

Rgb class_color(std::uint8_t code) noexcept {
  switch (code) {
    case 0: return {0, 0, 0};
    case 1: return {220, 0, 0};
    case 2: return {120, 0, 0};
    case 3: return {128, 128, 128};
    case 4: return {0, 200, 0};
    case 5: return {255, 255, 255};
    default: return {255, 0, 255};  // not computed
  }
}

void write_slice_image(const ClassificationGrid& grid, std::ostream& out) {
  const SweepConfig& c = grid.config;
  if (c.r.steps != 1) throw UsageError("slice image needs a single r value");
  const int width = c.y.steps;
  const int height = c.x.steps;
  out << "P6\n" << width << ' ' << height << "\n255\n";
  std::vector<char> row(static_cast<std::size_t>(width) * 3);
  for (int top = 0; top < height; ++top) {
    const int i = height - 1 - top;
    for (int j = 0; j < width; ++j) {
      const Rgb rgb = class_color(grid.classes[static_cast<std::size_t>(i) * width + j]);
      for (int ch = 0; ch < 3; ++ch) row[static_cast<std::size_t>(j) * 3 + ch] = char(rgb[ch]);
    }
    out.write(row.data(), static_cast<std::streamsize>(row.size()));
  }
}

void emit_slice_image(const ClassificationGrid& grid, const std::filesystem::path& path) {
  if (grid.config.r.steps != 1) throw UsageError("slice image needs a single r value");
  auto out = open_output(path, std::ios::out | std::ios::trunc | std::ios::binary);
  write_slice_image(grid, out);
  finish(out, path);
}

void write_info_curves_csv(const std::vector<InfoCurveRow>& rows, std::ostream& out) {
  out << "n,env_entropy,single_cell,within_species,both_species\n";
  for (const auto& r : rows) {
    out << r.n << ',' << format_number(r.env_entropy) << ',' << format_number(r.single_cell)
        << ',' << format_number(r.within_species) << ',' << format_number(r.both_species)
        << '\n';
  }
}

std::string info_curves_document(const std::vector<InfoCurveRow>& rows, const EcoParams& params) {
  nlohmann::ordered_json doc;
  doc["params"] = detail::params_json(params, {});
  auto out = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    out.push_back({{"n", r.n},
                   {"env_entropy", r.env_entropy},
                   {"single_cell", r.single_cell},
                   {"within_species", r.within_species},
                   {"both_species", r.both_species}});
  }
  doc["rows"] = out;
  doc["version"] = kVersion;
  return doc.dump(2);
}

std::string sweep_manifest(const ClassificationGrid& grid,
                           const std::vector<std::string>& outputs) {
  const SweepConfig& c = grid.config;
  nlohmann::ordered_json doc;
  doc["version"] = kVersion;
  nlohmann::ordered_json cfg;
  cfg["x"] = axis_json(c.x);
  cfg["y"] = axis_json(c.y);
  if (c.fixed_r) {
    cfg["fixed_r"] = *c.fixed_r;
  } else {
    cfg["r"] = axis_json(c.r);
  }
  cfg["registration"] = to_string(c.registration);
  cfg["workers"] = c.workers;
  doc["config"] = cfg;
  doc["params"] = detail::params_json(c.params, c.game);
  doc["cells"] = grid.classes.size();
  doc["completed"] = grid.completed;
  doc["failure"] = grid.failure ? nlohmann::ordered_json(*grid.failure) : nlohmann::ordered_json();
  std::array<std::size_t, 6> counts{};
  for (auto code : grid.classes)
    if (code < counts.size()) ++counts[code];
  doc["class_counts"] = counts;
  doc["wall_seconds"] = grid.wall_seconds;
  doc["outputs"] = outputs;
  return doc.dump(2);
}

void emit_text(const std::string& text, const std::filesystem::path& path) {
  auto out = open_output(path, std::ios::out | std::ios::trunc);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
  finish(out, path);
}

}  // namespace bhgame
