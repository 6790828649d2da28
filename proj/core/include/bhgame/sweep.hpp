#pragma once

// Parallel classification of payoff matrices over grids of initial states.

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bhgame/dynamics.hpp"
#include "bhgame/game.hpp"

namespace bhgame {

struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  int steps = 1;
};

/// `centers` places sample i at lo + (i + 1/2)(hi - lo)/steps; `endpoints`
/// at lo + i(hi - lo)/(steps - 1), or lo for a single step.
enum class GridRegistration { centers, endpoints };

std::string_view to_string(GridRegistration g) noexcept;
GridRegistration parse_registration(std::string_view text);

double axis_value(const Axis& axis, int index, GridRegistration registration) noexcept;

struct SweepConfig {
  Axis x{0.0, 1.0, 100};
  Axis y{0.0, 1.0, 100};
  Axis r{0.0, 3.0, 1};
  /// Slice mode: r is this exact value and r.steps must be 1.
  std::optional<double> fixed_r;
  EcoParams params;
  GameOptions game;
  GridRegistration registration = GridRegistration::centers;
  /// 0 selects std::thread::hardware_concurrency().
  int workers = 1;

  bool is_slice() const noexcept { return fixed_r.has_value(); }
  std::size_t cell_count() const noexcept {
    return std::size_t(x.steps) * std::size_t(y.steps) * std::size_t(r.steps);
  }
};

/// Throws ValidationError for empty axes, ranges outside the state domain or
/// an inconsistent slice specification.
void validate_config(const SweepConfig& config);

/// Grid coordinates of a flat cell index (x-major, then y, then r).
EcoState cell_state(const SweepConfig& config, std::size_t index) noexcept;

inline constexpr std::uint8_t kNotComputed = 255;

struct ClassificationGrid {
  SweepConfig config;
  /// Class codes, kNotComputed where no result was produced.
  std::vector<std::uint8_t> classes;
  std::size_t completed = 0;
  /// Set when the sweep stopped early.
  std::optional<std::string> failure;
  double wall_seconds = 0.0;

  bool complete() const noexcept { return !failure && completed == classes.size(); }
};

/// Called with (completed cells, total cells); may come from any worker
/// thread but never concurrently.
using ProgressCallback = std::function<void(std::size_t, std::size_t)>;

/// Classifies every grid cell. Output is independent of the worker count.
/// Exceptions inside workers stop the sweep and are reported in `failure`.
ClassificationGrid run_sweep(const SweepConfig& config, const ProgressCallback& progress = {},
                             const std::atomic<bool>* cancel = nullptr);

struct InfoCurveRow {
  int n = 0;
  double env_entropy = 0.0;
  double single_cell = 0.0;
  double within_species = 0.0;
  double both_species = 0.0;
};

/// Information curves for integer population sizes 0..max_n: H(E), one
/// X cell, n X cells, and n X cells with n Y cells. Throws ValidationError
/// when max_n exceeds either capacity.
std::vector<InfoCurveRow> info_curves(const EcoParams& params, int max_n);

}  // namespace bhgame
