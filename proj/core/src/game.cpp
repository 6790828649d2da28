#include "bhgame/game.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

#include "bhgame/error.hpp"
#include "bhgame/version.hpp"
#include "params_json.hpp"

namespace bhgame {

std::string strategy_label(const Strategy& s) {
  std::string label = "(n,n)";
  label[1] = s.first ? 's' : 'n';
  label[3] = s.second ? 's' : 'n';
  return label;
}

std::size_t strategy_index(const Strategy& s) noexcept {
  return (s.first ? 2u : 0u) + (s.second ? 1u : 0u);
}

std::string_view to_string(LabelOrder order) noexcept {
  return order == LabelOrder::latest_first ? "latest-first" : "earliest-first";
}

std::string_view to_string(ClassifierMode mode) noexcept {
  return mode == ClassifierMode::five_class ? "five-class" : "six-class";
}

LabelOrder parse_label_order(std::string_view text) {
  if (text == "latest-first") return LabelOrder::latest_first;
  if (text == "earliest-first") return LabelOrder::earliest_first;
  throw ValidationError("unknown label order '" + std::string(text) + "'");
}

ClassifierMode parse_classifier_mode(std::string_view text) {
  if (text == "five-class") return ClassifierMode::five_class;
  if (text == "six-class") return ClassifierMode::six_class;
  throw ValidationError("unknown classifier '" + std::string(text) + "'");
}

std::array<bool, 2> actions_in_time(const Strategy& s, LabelOrder order) noexcept {
  if (order == LabelOrder::latest_first) return {s.second, s.first};
  return {s.first, s.second};
}

PayoffMatrix payoff_matrix(const EcoState& initial, const EcoParams& params,
                           const InformationModel& model, const GameOptions& options) {
  validate_state(initial);
  // The first step only depends on the two actions at t.
  std::array<std::array<EcoState, 2>, 2> after_first{};
  for (int ax = 0; ax < 2; ++ax)
    for (int ay = 0; ay < 2; ++ay)
      after_first[ax][ay] = step(initial, {ax == 1, ay == 1}, params, model);

  const double fitness = params.diagonal_fitness;
  PayoffMatrix matrix;
  for (std::size_t row = 0; row < kStrategyCount; ++row) {
    const auto xs = actions_in_time(kStrategies[row], options.label_order);
    for (std::size_t col = 0; col < kStrategyCount; ++col) {
      const auto ys = actions_in_time(kStrategies[col], options.label_order);
      const EcoState& mid = after_first[xs[0]][ys[0]];
      const EcoState end = step(mid, {xs[1], ys[1]}, params, model);
      const double p = consumption_proportion(end);
      const double n = std::min(p * end.x * params.capacity_x, double(params.capacity_x));
      matrix(row, col) = log_growth_rate(model.info_x(n), fitness);
    }
  }
  return matrix;
}

PayoffMatrix payoff_matrix(const EcoState& initial, const EcoParams& params,
                           const GameOptions& options) {
  const InformationModel model = make_information_model(params, false);
  return payoff_matrix(initial, params, model, options);
}

bool is_dominant(const PayoffMatrix& matrix, std::size_t strategy, DominanceMode mode) {
  bool any_strict = false;
  for (std::size_t other = 0; other < kStrategyCount; ++other) {
    if (other == strategy) continue;
    for (std::size_t col = 0; col < kStrategyCount; ++col) {
      const double mine = matrix(strategy, col);
      const double theirs = matrix(other, col);
      if (mode == DominanceMode::strict && !(mine > theirs)) return false;
      if (mine < theirs) return false;
      if (mine > theirs) any_strict = true;
    }
  }
  return mode == DominanceMode::strict || any_strict;
}

std::string_view to_string(StrategyClass c) noexcept {
  switch (c) {
    case StrategyClass::Extinct: return "Extinct";
    case StrategyClass::NotShareStrictlyDominant: return "NotShareStrictlyDominant";
    case StrategyClass::NotShareWeaklyDominant: return "NotShareWeaklyDominant";
    case StrategyClass::NoDominantStrategy: return "NoDominantStrategy";
    case StrategyClass::ShareWeaklyDominant: return "ShareWeaklyDominant";
    case StrategyClass::OtherDominant: return "OtherDominant";
  }
  return "Unknown";
}

StrategyClass classify(const PayoffMatrix& matrix, ClassifierMode mode, double extinct_payoff) {
  bool extinct = true;
  for (const auto& row : matrix.values)
    for (double v : row) extinct = extinct && std::abs(v - extinct_payoff) <= kExtinctTolerance;
  if (extinct) return StrategyClass::Extinct;

  constexpr std::size_t never = 0, always = 3;
  if (is_dominant(matrix, never, DominanceMode::strict)) {
    return StrategyClass::NotShareStrictlyDominant;
  }
  if (is_dominant(matrix, never, DominanceMode::weak)) return StrategyClass::NotShareWeaklyDominant;
  if (is_dominant(matrix, always, DominanceMode::weak) ||
      is_dominant(matrix, always, DominanceMode::strict)) {
    return StrategyClass::ShareWeaklyDominant;
  }
  if (mode == ClassifierMode::six_class) {
    for (std::size_t mixed : {std::size_t{1}, std::size_t{2}}) {
      if (is_dominant(matrix, mixed, DominanceMode::weak) ||
          is_dominant(matrix, mixed, DominanceMode::strict)) {
        return StrategyClass::OtherDominant;
      }
    }
  }
  return StrategyClass::NoDominantStrategy;
}

std::string payoff_document(const EcoState& initial, const EcoParams& params,
                            const GameOptions& options, const PayoffMatrix& matrix,
                            StrategyClass cls) {
  nlohmann::ordered_json doc;
  doc["initial"] = {{"x", initial.x}, {"y", initial.y}, {"r", initial.r}};
  doc["params"] = detail::params_json(params, options);
  auto labels = nlohmann::ordered_json::array();
  for (const auto& s : kStrategies) labels.push_back(strategy_label(s));
  doc["strategies"] = labels;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : matrix.values) rows.push_back(row);
  doc["payoff"] = rows;
  doc["class"] = to_string(cls);
  doc["class_code"] = class_code(cls);
  doc["version"] = kVersion;
  return doc.dump(2);
}

}  // namespace bhgame
