#include "bhgame/information_model.hpp"

#include <cmath>

namespace bhgame {
namespace {

constexpr std::size_t kShardCount = 64;
// exact in binary, so key / kCountsPerUnit is correctly rounded
constexpr double kCountsPerUnit = 1e9;

struct Key {
  std::int64_t own;
  std::int64_t other;
  std::uint8_t query;
  friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(k.own) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(k.other) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(k.query) * 0xC2B2AE3D27D4EB4FULL;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

std::int64_t count_key(double n) noexcept { return std::llround(n * kCountsPerUnit); }

double from_key(std::int64_t key) noexcept { return static_cast<double>(key) / kCountsPerUnit; }

}  // namespace

struct InformationModel::Shard {
  mutable std::mutex mutex;
  std::unordered_map<Key, double, KeyHash> values;
};

double quantize_count(double n) noexcept {
  return from_key(count_key(n));
}

InformationModel::InformationModel(SensorPair sensors, InformationModelOptions options)
    : sensors_(std::move(sensors)),
      options_(options),
      shards_(std::make_unique<Shard[]>(kShardCount)) {}

InformationModel::~InformationModel() = default;

double InformationModel::info_x(double n) const { return lookup(Query::x, n, 0.0); }
double InformationModel::info_x_with_y(double n, double m) const {
  return lookup(Query::x_with_y, n, m);
}
double InformationModel::info_y(double m) const { return lookup(Query::y, m, 0.0); }
double InformationModel::info_y_with_x(double m, double n) const {
  return lookup(Query::y_with_x, m, n);
}

std::size_t InformationModel::cache_size() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < kShardCount; ++i) {
    std::lock_guard lock(shards_[i].mutex);
    total += shards_[i].values.size();
  }
  return total;
}

double InformationModel::lookup(Query query, double own, double other) const {
  const Key key{count_key(own), count_key(other), static_cast<std::uint8_t>(query)};
  const double own_q = from_key(key.own);
  const double other_q = from_key(key.other);
  if (!options_.cache) return compute(query, own_q, other_q);

  Shard& shard = shards_[KeyHash{}(key) % kShardCount];
  {
    std::lock_guard lock(shard.mutex);
    if (auto it = shard.values.find(key); it != shard.values.end()) return it->second;
  }
  // Computed outside the lock; concurrent duplicates insert the same value.
  const double value = compute(query, own_q, other_q);
  std::lock_guard lock(shard.mutex);
  shard.values.emplace(key, value);
  return value;
}

double InformationModel::compute(Query query, double own, double other) const {
  PopulationInformationOptions x_opts{options_.capacity_x, options_.capacity_y,
                                      options_.normalize};
  PopulationInformationOptions y_opts{options_.capacity_y, options_.capacity_x,
                                      options_.normalize};
  switch (query) {
    case Query::x:
      return population_information(sensors_.x, own, nullptr, 0.0, x_opts);
    case Query::x_with_y:
      return population_information(sensors_.x, own, &sensors_.y, other, x_opts);
    case Query::y:
      return population_information(sensors_.y, own, nullptr, 0.0, y_opts);
    case Query::y_with_x:
      return population_information(sensors_.y, own, &sensors_.x, other, y_opts);
  }
  return 0.0;
}

}  // namespace bhgame
