#pragma once

// One time step of the coupled two-species and resource system.

#include <string_view>

#include "bhgame/information_model.hpp"
#include "bhgame/sensor.hpp"

namespace bhgame {

struct EcoState {
  double x = 0.0;  ///< species X density, fraction of capacity
  double y = 0.0;  ///< species Y density
  double r = 0.0;  ///< resource level, density units

  friend bool operator==(const EcoState&, const EcoState&) = default;
};

/// Throws ValidationError unless 0 <= x,y <= 1 and r >= 0 (all finite).
void validate_state(const EcoState& state);

struct ActionPair {
  bool x_shares = false;
  bool y_shares = false;
};

enum class ResourceModel { growth, replenish };

std::string_view to_string(ResourceModel model) noexcept;
/// Accepts "growth" or "replenish"; throws ValidationError otherwise.
ResourceModel parse_resource_model(std::string_view text);

struct EcoParams {
  double alpha = 1.05;
  double beta = 0.05;
  int capacity_x = 15;
  int capacity_y = 15;
  ResourceModel resource_model = ResourceModel::growth;
  SensorPair sensors = default_sensors();
  /// f when phenotype matches the environment; F = log2 of this.
  double diagonal_fitness = 2.0;
  /// Survivors of resource shortage (p x rather than x) enter the logistic.
  bool mortality_in_logistic = true;
  /// Renormalize interpolated population distributions.
  bool interpolation_normalize = true;
};

/// Throws ValidationError on alpha <= 0, beta < 0, non-positive capacity or
/// diagonal_fitness outside (1, 4].
void validate_params(const EcoParams& params);

/// Builds the information model matching params (capacities, sensors,
/// normalization).
InformationModel make_information_model(const EcoParams& params, bool cache = true);

/// Fraction of both populations that obtains resources.
double consumption_proportion(const EcoState& state) noexcept;

/// log2 fitness of perfectly informed individuals.
double fitness_exponent(double diagonal_fitness);

/// Long-term log2 growth with environment knowledge info_bits: F - H(E) + I.
/// Throws DomainError when info_bits is outside [0, H(E)].
double log_growth_rate(double info_bits, double diagonal_fitness = 2.0);

/// 2^{log_growth_rate}; in (1/2, 2] for the default fitness.
double growth_rate(double info_bits, double diagonal_fitness = 2.0);

/// Next state. `model` must have been built from params. Densities are
/// clamped to [0,1] and the resource to r >= 0.
EcoState step(const EcoState& state, const ActionPair& actions, const EcoParams& params,
              const InformationModel& model);

/// Convenience overload building an uncached information model.
EcoState step(const EcoState& state, const ActionPair& actions, const EcoParams& params);

}  // namespace bhgame
