#include "bhgame/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bhgame/error.hpp"

namespace bhgame {
namespace {

constexpr double kEnvEntropy = 2.0;
constexpr double kInfoSlack = 1e-9;

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

void validate_state(const EcoState& state) {
  auto in_unit = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
  if (!in_unit(state.x)) throw ValidationError("x density must be in [0,1], got " + std::to_string(state.x));
  if (!in_unit(state.y)) throw ValidationError("y density must be in [0,1], got " + std::to_string(state.y));
  if (!std::isfinite(state.r) || state.r < 0.0) {
    throw ValidationError("resource level must be >= 0, got " + std::to_string(state.r));
  }
}

std::string_view to_string(ResourceModel model) noexcept {
  return model == ResourceModel::growth ? "growth" : "replenish";
}

ResourceModel parse_resource_model(std::string_view text) {
  if (text == "growth") return ResourceModel::growth;
  if (text == "replenish") return ResourceModel::replenish;
  throw ValidationError("unknown resource model '" + std::string(text) + "'");
}

void validate_params(const EcoParams& params) {
  if (!(params.alpha > 0.0)) throw ValidationError("alpha must be > 0");
  if (!(params.beta >= 0.0)) throw ValidationError("beta must be >= 0");
  if (params.capacity_x <= 0 || params.capacity_y <= 0) {
    throw ValidationError("capacities must be positive");
  }
  if (!(params.diagonal_fitness > 1.0 && params.diagonal_fitness <= 4.0)) {
    throw ValidationError("diagonal fitness must be in (1, 4]");
  }
}

InformationModel make_information_model(const EcoParams& params, bool cache) {
  return InformationModel(params.sensors, {params.capacity_x, params.capacity_y,
                                           params.interpolation_normalize, cache});
}

double consumption_proportion(const EcoState& state) noexcept {
  const double demand = state.x + state.y;
  if (demand <= 0.0 || state.r > demand) return 1.0;
  return state.r / demand;
}

double fitness_exponent(double diagonal_fitness) { return std::log2(diagonal_fitness); }

double log_growth_rate(double info_bits, double diagonal_fitness) {
  if (!(info_bits >= -kInfoSlack && info_bits <= kEnvEntropy + kInfoSlack)) {
    throw DomainError("information " + std::to_string(info_bits) + " outside [0, 2] bits");
  }
  const double info = std::clamp(info_bits, 0.0, kEnvEntropy);
  return fitness_exponent(diagonal_fitness) - kEnvEntropy + info;
}

double growth_rate(double info_bits, double diagonal_fitness) {
  return std::exp2(log_growth_rate(info_bits, diagonal_fitness));
}

EcoState step(const EcoState& state, const ActionPair& actions, const EcoParams& params,
              const InformationModel& model) {
  const double p = consumption_proportion(state);
  const double sensing_x = p * state.x;
  const double sensing_y = p * state.y;
  const double n = std::min(sensing_x * params.capacity_x, double(params.capacity_x));
  const double m = std::min(sensing_y * params.capacity_y, double(params.capacity_y));

  const double info_x = actions.y_shares ? model.info_x_with_y(n, m) : model.info_x(n);
  const double info_y = actions.x_shares ? model.info_y_with_x(m, n) : model.info_y(m);
  const double delta_x = growth_rate(info_x, params.diagonal_fitness);
  const double delta_y = growth_rate(info_y, params.diagonal_fitness);

  const double base_x = params.mortality_in_logistic ? sensing_x : state.x;
  const double base_y = params.mortality_in_logistic ? sensing_y : state.y;

  EcoState next;
  next.x = clamp_unit(delta_x * base_x * (1.0 - base_x));
  next.y = clamp_unit(delta_y * base_y * (1.0 - base_y));

  const double left = state.r - (state.x + state.y);
  if (params.resource_model == ResourceModel::growth) {
    next.r = left > 0.0 ? params.alpha * left : 0.0;
  } else {
    next.r = std::max(0.0, left) + params.beta;
  }
  return next;
}

EcoState step(const EcoState& state, const ActionPair& actions, const EcoParams& params) {
  const InformationModel model = make_information_model(params, false);
  return step(state, actions, params, model);
}

}  // namespace bhgame
