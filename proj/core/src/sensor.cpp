#include "bhgame/sensor.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "bhgame/error.hpp"

namespace bhgame {
namespace {

constexpr double kRowTolerance = 1e-12;

bool is_integral(double v) { return std::floor(v) == v; }

double exact_binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double result = 1.0;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return std::round(result);
}

// H(row) for one conditional row, skipping zeros.
double row_entropy(std::span<const double> row) {
  double h = 0.0;
  for (double p : row) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

void normalize_rows(PopulationSensorDistribution& d) {
  const std::size_t k = d.outcome_count();
  for (std::size_t e = 0; e < kEnvStates; ++e) {
    const double sum = d.row_sum(e);
    if (sum <= 0.0) continue;
    for (std::size_t s = 0; s < k; ++s) d.cond[e * k + s] /= sum;
  }
}

PopulationSensorDistribution constant_distribution() {
  PopulationSensorDistribution d;
  d.outcomes.push_back(PopulationOutcome{});
  d.cond.assign(kEnvStates, 1.0);
  return d;
}

}  // namespace

SensorModel::SensorModel(const Rows& rows) : rows_(rows) {
  for (std::size_t e = 0; e < kEnvStates; ++e) {
    double sum = 0.0;
    for (double p : rows_[e]) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError("SensorModel: entry outside [0,1] in row " + std::to_string(e));
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > kRowTolerance) {
      throw ValidationError("SensorModel: row " + std::to_string(e) + " sums to " +
                            std::to_string(sum));
    }
  }
}

SensorPair default_sensors() {
  return SensorPair{
      "default",
      SensorModel({{{0.85, 0.15}, {0.85, 0.15}, {0.15, 0.85}, {0.15, 0.85}}}),
      SensorModel({{{0.85, 0.15}, {0.15, 0.85}, {0.85, 0.15}, {0.15, 0.85}}}),
  };
}

SensorPair modified_sensors() {
  return SensorPair{
      "modified",
      SensorModel({{{0.95, 0.05}, {0.65, 0.35}, {0.35, 0.65}, {0.05, 0.95}}}),
      SensorModel({{{0.05, 0.95}, {0.35, 0.65}, {0.65, 0.35}, {0.95, 0.05}}}),
  };
}

SensorPair sensors_by_name(const std::string& name_or_path) {
  if (name_or_path == "default") return default_sensors();
  if (name_or_path == "modified") return modified_sensors();
  return load_sensor_file(name_or_path);
}

SensorPair load_sensor_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open sensor file " + path.string());

  std::vector<std::array<double, kSensorStates>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::array<double, kSensorStates> row{};
    if (!(fields >> row[0])) continue;  // blank
    std::string extra;
    if (!(fields >> row[1]) || (fields >> extra)) {
      throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                            ": expected two reals");
    }
    rows.push_back(row);
  }
  if (rows.size() != 2 * kEnvStates) {
    throw ValidationError(path.string() + ": expected 8 sensor rows, found " +
                          std::to_string(rows.size()));
  }
  SensorModel::Rows x{}, y{};
  for (std::size_t e = 0; e < kEnvStates; ++e) {
    x[e] = rows[e];
    y[e] = rows[kEnvStates + e];
  }
  return SensorPair{path.string(), SensorModel(x), SensorModel(y)};
}

double PopulationSensorDistribution::row_sum(std::size_t env) const noexcept {
  double sum = 0.0;
  for (double p : row(env)) sum += p;
  return sum;
}

double type_class_size(std::span<const double> counts) {
  double total = 0.0;
  bool integral = true;
  for (double c : counts) {
    if (!(c >= 0.0)) throw DomainError("type_class_size: negative count");
    total += c;
    integral = integral && is_integral(c);
  }
  if (integral) {
    double result = 1.0;
    int remaining = static_cast<int>(total);
    for (double c : counts) {
      result *= exact_binomial(remaining, static_cast<int>(c));
      remaining -= static_cast<int>(c);
    }
    return result;
  }
  double log_size = std::lgamma(total + 1.0);
  for (double c : counts) log_size -= std::lgamma(c + 1.0);
  return std::exp(log_size);
}

double type_class_size(double count_s1, double count_s2) {
  const std::array<double, 2> counts{count_s1, count_s2};
  return type_class_size(counts);
}

PopulationSensorDistribution integer_population_distribution(const SensorModel& model, int n) {
  if (n < 0) throw DomainError("integer_population_distribution: negative population");
  if (n == 0) return constant_distribution();

  PopulationSensorDistribution d;
  const std::size_t k = static_cast<std::size_t>(n) + 1;
  d.outcomes.reserve(k);
  for (int c1 = 0; c1 <= n; ++c1) d.outcomes.push_back({c1, n - c1, std::nullopt, 0.0});
  d.cond.resize(kEnvStates * k);
  for (std::size_t e = 0; e < kEnvStates; ++e) {
    for (std::size_t s = 0; s < k; ++s) {
      const int c1 = d.outcomes[s].count_s1;
      const int c2 = d.outcomes[s].count_s2;
      // |T(P)| 2^{-n(H(P) + D(P||q))} == |T(P)| q1^c1 q2^c2
      d.cond[e * k + s] = exact_binomial(n, c1) * std::pow(model(e, 0), c1) *
                          std::pow(model(e, 1), c2);
    }
  }
  return d;
}

PopulationSensorDistribution surrogate_population_distribution(const SensorModel& model,
                                                               int base, double lambda,
                                                               bool normalize) {
  if (base < 0) throw DomainError("surrogate_population_distribution: negative base");
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw DomainError("surrogate_population_distribution: lambda outside [0,1]");
  }

  PopulationSensorDistribution d;
  const std::size_t k = 2 * (static_cast<std::size_t>(base) + 1);
  d.outcomes.reserve(k);
  for (int c1 = 0; c1 <= base; ++c1) {
    for (int b = 0; b < 2; ++b) d.outcomes.push_back({c1, base - c1, b, lambda});
  }

  d.cond.resize(kEnvStates * k);
  for (std::size_t s = 0; s < k; ++s) {
    const auto& o = d.outcomes[s];
    const double n1 = o.count_s1 + (*o.added_state == 0 ? lambda : 0.0);
    const double n2 = o.count_s2 + (*o.added_state == 1 ? lambda : 0.0);
    // A pure base extended by its own state arranges in exactly one way and
    // is double counted only at lambda = 0.
    const bool single_arrangement = (o.count_s2 == 0 && *o.added_state == 0) ||
                                    (o.count_s1 == 0 && *o.added_state == 1);
    const double factor = single_arrangement ? (1.0 + lambda) / kSensorStates
                                             : type_class_size(n1, n2) / kSensorStates;
    for (std::size_t e = 0; e < kEnvStates; ++e) {
      d.cond[e * k + s] = factor * std::pow(model(e, 0), n1) * std::pow(model(e, 1), n2);
    }
  }
  if (normalize) normalize_rows(d);
  return d;
}

PopulationSensorDistribution interpolated_population_distribution(const SensorModel& model,
                                                                  double n, int capacity,
                                                                  bool normalize) {
  if (!(n >= 0.0) || n > static_cast<double>(capacity)) {
    throw DomainError("interpolated_population_distribution: n = " + std::to_string(n) +
                      " outside [0, " + std::to_string(capacity) + "]");
  }
  const double whole = std::floor(n);
  const double lambda = n - whole;
  if (lambda == 0.0) return integer_population_distribution(model, static_cast<int>(whole));
  return surrogate_population_distribution(model, static_cast<int>(whole), lambda, normalize);
}

PopulationSensorDistribution joint_population_distribution(
    const PopulationSensorDistribution& a, const PopulationSensorDistribution& b) {
  const std::size_t ka = a.outcome_count();
  const std::size_t kb = b.outcome_count();
  if (a.cond.size() != kEnvStates * ka || b.cond.size() != kEnvStates * kb) {
    throw ValidationError("joint_population_distribution: malformed input");
  }
  PopulationSensorDistribution d;
  // Outcome labels of a product are not a single type; keep the first
  // factor's labels repeated so that the count matches.
  d.outcomes.reserve(ka * kb);
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t j = 0; j < kb; ++j) d.outcomes.push_back(a.outcomes[i]);
  d.cond.resize(kEnvStates * ka * kb);
  for (std::size_t e = 0; e < kEnvStates; ++e)
    for (std::size_t i = 0; i < ka; ++i)
      for (std::size_t j = 0; j < kb; ++j)
        d.cond[(e * ka + i) * kb + j] = a.prob(e, i) * b.prob(e, j);
  return d;
}

double environment_information(const PopulationSensorDistribution& d) {
  const std::size_t k = d.outcome_count();
  double h_s = 0.0;
  for (std::size_t s = 0; s < k; ++s) {
    double m = 0.0;
    for (std::size_t e = 0; e < kEnvStates; ++e) m += kUniformEnv[e] * d.prob(e, s);
    if (m > 0.0) h_s -= m * std::log2(m);
  }
  double h_s_given_e = 0.0;
  for (std::size_t e = 0; e < kEnvStates; ++e) h_s_given_e += kUniformEnv[e] * row_entropy(d.row(e));
  const double mi = h_s - h_s_given_e;
  return mi < 0.0 ? 0.0 : mi;
}

double environment_information(const PopulationSensorDistribution& a,
                               const PopulationSensorDistribution& b) {
  const std::size_t ka = a.outcome_count();
  const std::size_t kb = b.outcome_count();
  // H(S_a, S_b | E) splits because the populations are independent given E.
  double h_given_e = 0.0;
  for (std::size_t e = 0; e < kEnvStates; ++e) {
    h_given_e += kUniformEnv[e] * (row_entropy(a.row(e)) + row_entropy(b.row(e)));
  }
  double h_joint = 0.0;
  for (std::size_t i = 0; i < ka; ++i) {
    std::array<double, kEnvStates> wa{};
    for (std::size_t e = 0; e < kEnvStates; ++e) wa[e] = kUniformEnv[e] * a.prob(e, i);
    for (std::size_t j = 0; j < kb; ++j) {
      double m = 0.0;
      for (std::size_t e = 0; e < kEnvStates; ++e) m += wa[e] * b.prob(e, j);
      if (m > 0.0) h_joint -= m * std::log2(m);
    }
  }
  const double mi = h_joint - h_given_e;
  return mi < 0.0 ? 0.0 : mi;
}

double population_information(const SensorModel& own, double n, const SensorModel* other,
                              double m, const PopulationInformationOptions& options) {
  const auto own_dist =
      interpolated_population_distribution(own, n, options.capacity_own, options.normalize);
  if (other == nullptr) return environment_information(own_dist);
  const auto other_dist =
      interpolated_population_distribution(*other, m, options.capacity_other, options.normalize);
  return environment_information(own_dist, other_dist);
}

}  // namespace bhgame
