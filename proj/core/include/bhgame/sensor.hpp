#pragma once

// Population sensor distributions built with the method of types, including
// the surrogate-sequence interpolation for fractional population sizes.

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bhgame {

inline constexpr std::size_t kEnvStates = 4;
inline constexpr std::size_t kSensorStates = 2;

/// Uniform prior over the four environment states.
inline constexpr std::array<double, kEnvStates> kUniformEnv{0.25, 0.25, 0.25, 0.25};

/// Pr(individual sensor state | environment state), 4 x 2 row-stochastic.
class SensorModel {
 public:
  using Rows = std::array<std::array<double, kSensorStates>, kEnvStates>;

  /// Throws ValidationError unless every entry is in [0,1] and each row sums
  /// to 1 within 1e-12.
  explicit SensorModel(const Rows& rows);

  double operator()(std::size_t env, std::size_t state) const noexcept {
    return rows_[env][state];
  }
  const Rows& rows() const noexcept { return rows_; }

  friend bool operator==(const SensorModel&, const SensorModel&) = default;

 private:
  Rows rows_;
};

/// The sensor models of both species.
struct SensorPair {
  std::string name;
  SensorModel x;
  SensorModel y;
};

/// Complementary sensors: X resolves the first environment bit, Y the second,
/// each with 85% accuracy and no overlap.
SensorPair default_sensors();
/// Overlapping sensors with roughly the same single-cell information.
SensorPair modified_sensors();

/// `default`, `modified`, or a path to a sensor file.
SensorPair sensors_by_name(const std::string& name_or_path);

/// Reads eight data lines of two reals each (four rows for X, then four for
/// Y); blank lines and '#' comments are skipped.
SensorPair load_sensor_file(const std::filesystem::path& path);

/// Descriptor of one population outcome: a base type of floor(n) individuals
/// with `count_s1` in state s1 and `count_s2` in state s2, plus, for
/// fractional n, a proportion `lambda` of `added_state`.
struct PopulationOutcome {
  int count_s1 = 0;
  int count_s2 = 0;
  std::optional<int> added_state;
  double lambda = 0.0;
};

struct PopulationSensorDistribution {
  std::vector<PopulationOutcome> outcomes;
  /// Row-major kEnvStates x outcomes.size().
  std::vector<double> cond;

  std::size_t outcome_count() const noexcept { return outcomes.size(); }
  double prob(std::size_t env, std::size_t outcome) const noexcept {
    return cond[env * outcomes.size() + outcome];
  }
  std::span<const double> row(std::size_t env) const noexcept {
    return std::span<const double>(cond).subspan(env * outcomes.size(), outcomes.size());
  }
  double row_sum(std::size_t env) const noexcept;
};

/// Gamma-extended multinomial coefficient Gamma(sum+1) / prod Gamma(c_i+1).
/// Exact binomial for integer counts. Throws DomainError on negative counts.
double type_class_size(std::span<const double> counts);
double type_class_size(double count_s1, double count_s2);

/// Exact distribution of the type of n i.i.d. sensor readings; n + 1 outcomes.
/// n = 0 yields a single constant outcome.
PopulationSensorDistribution integer_population_distribution(const SensorModel& model, int n);

/// Surrogate-sequence distribution for `base` individuals plus a proportion
/// `lambda` in [0,1] of one extra state; 2 * (base + 1) outcomes. Rows are
/// rescaled to sum to 1 when `normalize` is set.
PopulationSensorDistribution surrogate_population_distribution(const SensorModel& model,
                                                               int base, double lambda,
                                                               bool normalize = true);

/// Dispatches on the fractional part of n: integer distribution when it is
/// zero, surrogate distribution otherwise. Throws DomainError when n is
/// outside [0, capacity].
PopulationSensorDistribution interpolated_population_distribution(const SensorModel& model,
                                                                  double n, int capacity,
                                                                  bool normalize = true);

/// Cartesian-product outcome set with Pr((a,b)|e) = Pr(a|e) Pr(b|e).
PopulationSensorDistribution joint_population_distribution(
    const PopulationSensorDistribution& a, const PopulationSensorDistribution& b);

/// I(E; S) for a population distribution under the uniform environment.
double environment_information(const PopulationSensorDistribution& d);

/// I(E; S_a, S_b) for conditionally independent populations, without
/// materializing the product outcome set.
double environment_information(const PopulationSensorDistribution& a,
                               const PopulationSensorDistribution& b);

struct PopulationInformationOptions {
  int capacity_own = 15;
  int capacity_other = 15;
  bool normalize = true;
};

/// I(E; own population of size n [, other population of size m]).
double population_information(const SensorModel& own, double n,
                              const SensorModel* other = nullptr, double m = 0.0,
                              const PopulationInformationOptions& options = {});

}  // namespace bhgame
