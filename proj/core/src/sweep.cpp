#include "bhgame/sweep.hpp"

#include <chrono>
#include <cmath>
#include <mutex>
#include <thread>

#include "bhgame/error.hpp"

namespace bhgame {
namespace {

constexpr std::size_t kChunkCells = 16;

void check_axis(const Axis& axis, const char* name, double lo, double hi) {
  if (axis.steps < 1) throw ValidationError(std::string(name) + " axis needs at least one step");
  if (!std::isfinite(axis.lo) || !std::isfinite(axis.hi) || axis.lo > axis.hi) {
    throw ValidationError(std::string(name) + " axis has an invalid range");
  }
  if (axis.lo < lo || axis.hi > hi) {
    throw ValidationError(std::string(name) + " axis outside its domain");
  }
}

}  // namespace

std::string_view to_string(GridRegistration g) noexcept {
  return g == GridRegistration::centers ? "centers" : "endpoints";
}

GridRegistration parse_registration(std::string_view text) {
  if (text == "centers") return GridRegistration::centers;
  if (text == "endpoints") return GridRegistration::endpoints;
  throw ValidationError("unknown grid registration '" + std::string(text) + "'");
}

double axis_value(const Axis& axis, int index, GridRegistration registration) noexcept {
  const double span = axis.hi - axis.lo;
  if (registration == GridRegistration::centers) {
    return axis.lo + (index + 0.5) * span / axis.steps;
  }
  if (axis.steps == 1) return axis.lo;
  if (index == axis.steps - 1) return axis.hi;
  return axis.lo + span * index / (axis.steps - 1);
}

void validate_config(const SweepConfig& config) {
  check_axis(config.x, "x", 0.0, 1.0);
  check_axis(config.y, "y", 0.0, 1.0);
  if (config.fixed_r) {
    if (!std::isfinite(*config.fixed_r) || *config.fixed_r < 0.0) {
      throw ValidationError("fixed r must be a finite value >= 0");
    }
    if (config.r.steps != 1) throw ValidationError("slice mode requires a single r step");
  } else {
    check_axis(config.r, "r", 0.0, INFINITY);
  }
  if (config.workers < 0) throw ValidationError("worker count must be >= 0");
  validate_params(config.params);
}

EcoState cell_state(const SweepConfig& config, std::size_t index) noexcept {
  const std::size_t nr = static_cast<std::size_t>(config.r.steps);
  const std::size_t ny = static_cast<std::size_t>(config.y.steps);
  const int k = static_cast<int>(index % nr);
  const int j = static_cast<int>((index / nr) % ny);
  const int i = static_cast<int>(index / (nr * ny));
  EcoState s;
  s.x = axis_value(config.x, i, config.registration);
  s.y = axis_value(config.y, j, config.registration);
  s.r = config.fixed_r ? *config.fixed_r : axis_value(config.r, k, config.registration);
  return s;
}

ClassificationGrid run_sweep(const SweepConfig& config, const ProgressCallback& progress,
                             const std::atomic<bool>* cancel) {
  validate_config(config);
  const auto started = std::chrono::steady_clock::now();

  ClassificationGrid grid;
  grid.config = config;
  const std::size_t total = config.cell_count();
  grid.classes.assign(total, kNotComputed);

  const InformationModel model = make_information_model(config.params);
  const double extinct_payoff = log_growth_rate(0.0, config.params.diagonal_fitness);

  std::atomic<std::size_t> next_chunk{0};
  std::atomic<std::size_t> done{0};
  std::atomic<bool> stop{false};
  std::mutex report_mutex;

  auto worker = [&] {
    for (;;) {
      if (stop.load() || (cancel != nullptr && cancel->load())) return;
      const std::size_t begin = next_chunk.fetch_add(1) * kChunkCells;
      if (begin >= total) return;
      const std::size_t end = std::min(total, begin + kChunkCells);
      std::size_t i = begin;
      try {
        for (; i < end; ++i) {
          const PayoffMatrix m = payoff_matrix(cell_state(config, i), config.params, model,
                                               config.game);
          grid.classes[i] = static_cast<std::uint8_t>(
              classify(m, config.game.classifier, extinct_payoff));
        }
      } catch (const std::exception& e) {
        std::lock_guard lock(report_mutex);
        if (!grid.failure) grid.failure = "cell " + std::to_string(i) + ": " + e.what();
        stop.store(true);
      }
      const std::size_t now = done.fetch_add(i - begin) + (i - begin);
      if (progress) {
        std::lock_guard lock(report_mutex);
        progress(now, total);
      }
    }
  };

  int workers = config.workers;
  if (workers == 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const std::size_t chunks = (total + kChunkCells - 1) / kChunkCells;
  workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers),
                                                   std::max<std::size_t>(1, chunks)));

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    try {
      for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    } catch (const std::system_error& e) {
      std::lock_guard lock(report_mutex);
      if (!grid.failure) grid.failure = std::string("thread start failed: ") + e.what();
      stop.store(true);
    }
  }

  grid.completed = done.load();
  if (!grid.failure && grid.completed < total) grid.failure = "sweep cancelled";
  grid.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return grid;
}

std::vector<InfoCurveRow> info_curves(const EcoParams& params, int max_n) {
  if (max_n < 0 || max_n > params.capacity_x || max_n > params.capacity_y) {
    throw ValidationError("max n " + std::to_string(max_n) + " exceeds capacity");
  }
  const InformationModel model = make_information_model(params, false);
  const double single = model.info_x(1.0);
  std::vector<InfoCurveRow> rows;
  rows.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    rows.push_back({n, 2.0, single, model.info_x(n), model.info_x_with_y(n, n)});
  }
  return rows;
}

}  // namespace bhgame
