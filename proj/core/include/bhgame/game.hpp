#pragma once

// Two-step look-ahead payoff matrices for species X and dominance classes.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "bhgame/dynamics.hpp"
#include "bhgame/information_model.hpp"

namespace bhgame {

/// A two-step plan written as the label pair (first, second); true = share.
struct Strategy {
  bool first = false;
  bool second = false;
  friend bool operator==(const Strategy&, const Strategy&) = default;
};

inline constexpr std::size_t kStrategyCount = 4;

/// Canonical order (n,n), (n,s), (s,n), (s,s).
inline constexpr std::array<Strategy, kStrategyCount> kStrategies{
    Strategy{false, false}, Strategy{false, true}, Strategy{true, false}, Strategy{true, true}};

std::string strategy_label(const Strategy& s);
std::size_t strategy_index(const Strategy& s) noexcept;

/// How a label (a, b) maps onto time. `latest_first` reads a as the action at
/// t+1 and b as the action at t; `earliest_first` reads a as the action at t.
enum class LabelOrder { latest_first, earliest_first };

/// `five_class` only tests (n,n) and (s,s) for dominance; `six_class` also
/// reports (n,s)/(s,n) dominance as OtherDominant.
enum class ClassifierMode { five_class, six_class };

std::string_view to_string(LabelOrder order) noexcept;
std::string_view to_string(ClassifierMode mode) noexcept;
LabelOrder parse_label_order(std::string_view text);
ClassifierMode parse_classifier_mode(std::string_view text);

struct GameOptions {
  LabelOrder label_order = LabelOrder::latest_first;
  ClassifierMode classifier = ClassifierMode::five_class;
};

/// Actions at t and t+1 implied by a label under the given order.
std::array<bool, 2> actions_in_time(const Strategy& s, LabelOrder order) noexcept;

/// Rows: species X strategy; columns: species Y strategy; canonical order.
/// Entries are log2 growth rates.
struct PayoffMatrix {
  std::array<std::array<double, kStrategyCount>, kStrategyCount> values{};

  double operator()(std::size_t row, std::size_t col) const noexcept { return values[row][col]; }
  double& operator()(std::size_t row, std::size_t col) noexcept { return values[row][col]; }
  friend bool operator==(const PayoffMatrix&, const PayoffMatrix&) = default;
};

/// Payoff of X for every strategy pair: two steps, then X's log growth at
/// t+2 from its own sensing population without sharing.
PayoffMatrix payoff_matrix(const EcoState& initial, const EcoParams& params,
                           const InformationModel& model, const GameOptions& options = {});
PayoffMatrix payoff_matrix(const EcoState& initial, const EcoParams& params,
                           const GameOptions& options = {});

enum class DominanceMode { strict, weak };

/// Row `strategy` beats every other row in every column (strict), or is >=
/// everywhere with at least one strict comparison (weak). Exact comparisons.
bool is_dominant(const PayoffMatrix& matrix, std::size_t strategy, DominanceMode mode);

enum class StrategyClass : std::uint8_t {
  Extinct = 0,
  NotShareStrictlyDominant = 1,
  NotShareWeaklyDominant = 2,
  NoDominantStrategy = 3,
  ShareWeaklyDominant = 4,
  OtherDominant = 5,
};

inline constexpr double kExtinctTolerance = 1e-12;

std::string_view to_string(StrategyClass c) noexcept;
constexpr int class_code(StrategyClass c) noexcept { return static_cast<int>(c); }

/// `extinct_payoff` is the log growth of an empty population, F - H(E).
StrategyClass classify(const PayoffMatrix& matrix,
                       ClassifierMode mode = ClassifierMode::five_class,
                       double extinct_payoff = -1.0);

/// Structured document with initial state, parameters, 16 values at full
/// precision and the class.
std::string payoff_document(const EcoState& initial, const EcoParams& params,
                            const GameOptions& options, const PayoffMatrix& matrix,
                            StrategyClass cls);

}  // namespace bhgame
