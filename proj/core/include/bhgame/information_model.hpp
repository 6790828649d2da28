#pragma once

// Population information for both species, memoized for sweeps.

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "bhgame/sensor.hpp"

namespace bhgame {

/// Effective counts are quantized to this resolution before evaluation.
inline constexpr double kCountQuantum = 1e-9;

struct InformationModelOptions {
  int capacity_x = 15;
  int capacity_y = 15;
  bool normalize = true;
  bool cache = true;
};

/// Evaluates I(E; S_X) and I(E; S_X, S_Y) style quantities for one sensor
/// pair. Counts are rounded to kCountQuantum and the value is computed from
/// the rounded count, so cached and uncached results agree exactly. Safe for
/// concurrent use.
class InformationModel {
 public:
  explicit InformationModel(SensorPair sensors, InformationModelOptions options = {});
  ~InformationModel();
  InformationModel(const InformationModel&) = delete;
  InformationModel& operator=(const InformationModel&) = delete;

  /// X population of size n alone.
  double info_x(double n) const;
  /// X population of size n with the Y population of size m shared to it.
  double info_x_with_y(double n, double m) const;
  double info_y(double m) const;
  double info_y_with_x(double m, double n) const;

  const SensorPair& sensors() const noexcept { return sensors_; }
  const InformationModelOptions& options() const noexcept { return options_; }

  /// Number of cached entries over all shards.
  std::size_t cache_size() const;

 private:
  enum class Query : std::uint8_t { x, x_with_y, y, y_with_x };
  struct Shard;

  double lookup(Query query, double own, double other) const;
  double compute(Query query, double own, double other) const;

  SensorPair sensors_;
  InformationModelOptions options_;
  std::unique_ptr<Shard[]> shards_;
};

/// Rounds a count to the kCountQuantum grid.
double quantize_count(double n) noexcept;

}  // namespace bhgame
