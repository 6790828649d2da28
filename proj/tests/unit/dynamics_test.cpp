#include <gtest/gtest.h>

#include <random>

#include "bhgame/dynamics.hpp"
#include "bhgame/error.hpp"

using namespace bhgame;

namespace {

const EcoParams& defaults() {
  static const EcoParams p;
  return p;
}

const InformationModel& default_model() {
  static const InformationModel m = make_information_model(defaults());
  return m;
}

std::vector<EcoState> random_states(std::size_t count, std::uint64_t seed, double r_max = 3.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0), res(0.0, r_max);
  std::vector<EcoState> states;
  for (std::size_t i = 0; i < count; ++i) states.push_back({unit(rng), unit(rng), res(rng)});
  return states;
}

constexpr std::array<ActionPair, 4> kActions{
    ActionPair{false, false}, ActionPair{false, true}, ActionPair{true, false},
    ActionPair{true, true}};

}  // namespace

TEST(ConsumptionProportion, AbundantResources) {
  EXPECT_EQ(consumption_proportion({0.3, 0.3, 1.0}), 1.0);
}

TEST(ConsumptionProportion, Scarcity) {
  EXPECT_DOUBLE_EQ(consumption_proportion({0.3, 0.3, 0.3}), 0.5);
}

TEST(ConsumptionProportion, Depleted) { EXPECT_EQ(consumption_proportion({0.5, 0.5, 0.0}), 0.0); }

TEST(ConsumptionProportion, EmptySystem) { EXPECT_EQ(consumption_proportion({0, 0, 0}), 1.0); }

TEST(ConsumptionProportion, ExactDemandUsesRatio) {
  EXPECT_DOUBLE_EQ(consumption_proportion({0.25, 0.25, 0.5}), 1.0);
}

TEST(GrowthRate, Endpoints) {
  EXPECT_DOUBLE_EQ(growth_rate(0.0), 0.5);
  EXPECT_DOUBLE_EQ(growth_rate(2.0), 2.0);
  EXPECT_DOUBLE_EQ(growth_rate(1.0), 1.0);
  EXPECT_DOUBLE_EQ(log_growth_rate(0.39), 0.39 - 1.0);
}

TEST(GrowthRate, OutOfRangeThrows) {
  EXPECT_THROW(growth_rate(-0.1), DomainError);
  EXPECT_THROW(growth_rate(2.1), DomainError);
}

TEST(GrowthRate, OtherFitnessValues) {
  EXPECT_DOUBLE_EQ(log_growth_rate(0.0, 4.0), 0.0);
  EXPECT_DOUBLE_EQ(growth_rate(2.0, 4.0), 4.0);
}

TEST(Step, EmptySystemGrowsResources) {
  for (double r : {0.0, 0.5, 2.0}) {
    const EcoState next = step({0, 0, r}, {true, true}, defaults(), default_model());
    EXPECT_EQ(next.x, 0.0);
    EXPECT_EQ(next.y, 0.0);
    EXPECT_DOUBLE_EQ(next.r, 1.05 * r);
  }
}

TEST(Step, GrowthResourceArithmetic) {
  const EcoState next = step({0.3, 0.3, 1.0}, {}, defaults(), default_model());
  EXPECT_NEAR(next.r, 0.42, 1e-15);
}

TEST(Step, ReplenishResourceArithmetic) {
  EcoParams p;
  p.resource_model = ResourceModel::replenish;
  const EcoState next = step({0.3, 0.3, 1.0}, {}, p, default_model());
  EXPECT_NEAR(next.r, 0.45, 1e-15);
  const EcoState starved = step({0.5, 0.5, 0.2}, {}, p, default_model());
  EXPECT_DOUBLE_EQ(starved.r, 0.05);
}

TEST(Step, LogisticUpdateWithSurvivors) {
  const EcoState s{0.4, 0.4, 0.4};  // p = 0.5
  const EcoState next = step(s, {}, defaults(), default_model());
  const double survivors = 0.5 * 0.4;
  const double delta = growth_rate(population_information(default_sensors().x, survivors * 15));
  EXPECT_DOUBLE_EQ(next.x, delta * survivors * (1 - survivors));
  EXPECT_EQ(next.r, 0.0);
}

TEST(Step, LiteralLogisticVariant) {
  EcoParams p;
  p.mortality_in_logistic = false;
  const InformationModel model = make_information_model(p);
  const EcoState s{0.4, 0.4, 0.4};
  const EcoState next = step(s, {}, p, model);
  const double delta = growth_rate(population_information(default_sensors().x, 0.2 * 15));
  EXPECT_DOUBLE_EQ(next.x, delta * 0.4 * 0.6);
}

TEST(Step, SharingUsesPartnerInformation) {
  const EcoState s{0.2, 0.3, 2.0};
  const SensorPair sensors = default_sensors();
  const EcoState shared = step(s, {false, true}, defaults(), default_model());
  const double info = population_information(sensors.x, 3.0, &sensors.y, 4.5);
  EXPECT_DOUBLE_EQ(shared.x, growth_rate(info) * 0.2 * 0.8);
  // X did not share, so Y only uses its own cells
  EXPECT_DOUBLE_EQ(shared.y, growth_rate(population_information(sensors.y, 4.5)) * 0.3 * 0.7);
}

TEST(Step, ConvenienceOverloadAgrees) {
  const EcoState s{0.35, 0.55, 0.7};
  EXPECT_EQ(step(s, {true, false}, defaults()), step(s, {true, false}, defaults(), default_model()));
}

TEST(SharingProperty, NeverReducesOwnStepInformation) {
  for (const auto& s : random_states(300, 21)) {
    const EcoState alone = step(s, {false, false}, defaults(), default_model());
    const EcoState helped = step(s, {false, true}, defaults(), default_model());
    EXPECT_GE(helped.x, alone.x);
    const EcoState helped_y = step(s, {true, false}, defaults(), default_model());
    EXPECT_GE(helped_y.y, alone.y);
  }
}

TEST(ResourceProperty, NonIncreasingInDemand) {
  for (auto model : {ResourceModel::growth, ResourceModel::replenish}) {
    EcoParams p;
    p.resource_model = model;
    for (double r : {0.0, 0.4, 1.3, 2.9}) {
      double previous = INFINITY;
      for (double load = 0.0; load <= 2.0; load += 0.05) {
        const EcoState next = step({load / 2, load / 2, r}, {}, p, default_model());
        EXPECT_LE(next.r, previous);
        previous = next.r;
      }
    }
  }
}

TEST(ResourceProperty, DepletionIsPermanentUnderGrowth) {
  for (const auto& start : random_states(50, 5)) {
    EcoState s{start.x, start.y, 0.0};
    for (int t = 0; t < 5; ++t) {
      s = step(s, kActions[t % 4], defaults(), default_model());
      EXPECT_EQ(s.r, 0.0);
    }
  }
}

TEST(ExtinctionProperty, Absorbing) {
  for (const auto& s : random_states(100, 9)) {
    for (const auto& a : kActions) {
      EXPECT_EQ(step({0.0, s.y, s.r}, a, defaults(), default_model()).x, 0.0);
    }
  }
}

TEST(GrowthFactorProperty, WithinReproductiveLimits) {
  const InformationModel& model = default_model();
  for (const auto& s : random_states(300, 33)) {
    const double p = consumption_proportion(s);
    const double n = p * s.x * 15, m = p * s.y * 15;
    for (double info : {model.info_x(n), model.info_x_with_y(n, m), model.info_y_with_x(m, n)}) {
      const double delta = growth_rate(info);
      EXPECT_GE(delta, 0.5);
      EXPECT_LE(delta, 2.0);
    }
    for (const auto& a : kActions) {
      const EcoState next = step(s, a, defaults(), model);
      EXPECT_GE(next.x, 0.0);
      EXPECT_LE(next.x, 0.5);
      EXPECT_GE(next.r, 0.0);
    }
  }
}

TEST(Params, Validation) {
  EcoParams p;
  EXPECT_NO_THROW(validate_params(p));
  p.alpha = 0.0;
  EXPECT_THROW(validate_params(p), ValidationError);
  p = EcoParams{};
  p.capacity_y = 0;
  EXPECT_THROW(validate_params(p), ValidationError);
  EXPECT_THROW(validate_state({1.5, 0, 0}), ValidationError);
  EXPECT_THROW(validate_state({0.5, 0, -1}), ValidationError);
  EXPECT_EQ(parse_resource_model("replenish"), ResourceModel::replenish);
  EXPECT_THROW(parse_resource_model("bogus"), ValidationError);
}
