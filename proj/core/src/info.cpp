#include "bhgame/info.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "bhgame/error.hpp"

namespace bhgame {
namespace {

void validate_probabilities(std::span<const double> probs, const char* what) {
  if (probs.empty()) {
    throw ValidationError(std::string(what) + ": empty distribution");
  }
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw ValidationError(std::string(what) + ": negative or non-finite entry " +
                            std::to_string(p));
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kNormalizationTolerance) {
    throw ValidationError(std::string(what) + ": entries sum to " +
                          std::to_string(sum));
  }
}

}  // namespace

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
  validate_probabilities(probs_, "Distribution");
}

JointDistribution::JointDistribution(std::size_t env_count, std::size_t outcome_count,
                                     std::vector<double> probs)
    : env_count_(env_count), outcome_count_(outcome_count), probs_(std::move(probs)) {
  if (probs_.size() != env_count_ * outcome_count_) {
    throw ValidationError("JointDistribution: expected " +
                          std::to_string(env_count_ * outcome_count_) + " entries, got " +
                          std::to_string(probs_.size()));
  }
  validate_probabilities(probs_, "JointDistribution");
}

JointDistribution JointDistribution::from_conditional(std::span<const double> prior,
                                                      std::span<const double> cond,
                                                      std::size_t outcome_count) {
  if (cond.size() != prior.size() * outcome_count) {
    throw ValidationError("JointDistribution: conditional table has wrong shape");
  }
  std::vector<double> probs(cond.size());
  for (std::size_t e = 0; e < prior.size(); ++e) {
    for (std::size_t s = 0; s < outcome_count; ++s) {
      probs[e * outcome_count + s] = prior[e] * cond[e * outcome_count + s];
    }
  }
  return JointDistribution(prior.size(), outcome_count, std::move(probs));
}

std::vector<double> JointDistribution::env_marginal() const {
  std::vector<double> m(env_count_, 0.0);
  for (std::size_t e = 0; e < env_count_; ++e) {
    for (std::size_t s = 0; s < outcome_count_; ++s) m[e] += at(e, s);
  }
  return m;
}

std::vector<double> JointDistribution::outcome_marginal() const {
  std::vector<double> m(outcome_count_, 0.0);
  for (std::size_t e = 0; e < env_count_; ++e) {
    for (std::size_t s = 0; s < outcome_count_; ++s) m[s] += at(e, s);
  }
  return m;
}

JointDistribution3::JointDistribution3(std::size_t env_count, std::size_t a_count,
                                       std::size_t b_count, std::vector<double> probs)
    : env_count_(env_count), a_count_(a_count), b_count_(b_count), probs_(std::move(probs)) {
  if (probs_.size() != env_count_ * a_count_ * b_count_) {
    throw ValidationError("JointDistribution3: wrong number of entries");
  }
  validate_probabilities(probs_, "JointDistribution3");
}

JointDistribution JointDistribution3::env_and_a() const {
  std::vector<double> probs(env_count_ * a_count_, 0.0);
  for (std::size_t e = 0; e < env_count_; ++e)
    for (std::size_t a = 0; a < a_count_; ++a)
      for (std::size_t b = 0; b < b_count_; ++b) probs[e * a_count_ + a] += at(e, a, b);
  return JointDistribution(env_count_, a_count_, std::move(probs));
}

JointDistribution JointDistribution3::env_and_ab() const {
  return JointDistribution(env_count_, a_count_ * b_count_, probs_);
}

double entropy(const Distribution& d) {
  double h = 0.0;
  for (double p : d.probs()) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

double kl_divergence(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size()) {
    throw ValidationError("kl_divergence: distributions have different sizes");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) {
      throw InfiniteDivergenceError("kl_divergence: q(" + std::to_string(i) +
                                    ") = 0 where p > 0");
    }
    d += p[i] * std::log2(p[i] / q[i]);
  }
  // Rounding can leave a tiny negative value for p == q.
  return d < 0.0 ? 0.0 : d;
}

double detail::mutual_information_kernel(std::span<const double> prior,
                                         std::span<const double> cond,
                                         std::size_t outcome_count) {
  const std::size_t envs = prior.size();
  double mi = 0.0;
  for (std::size_t s = 0; s < outcome_count; ++s) {
    double marginal = 0.0;
    for (std::size_t e = 0; e < envs; ++e) marginal += prior[e] * cond[e * outcome_count + s];
    if (marginal <= 0.0) continue;
    for (std::size_t e = 0; e < envs; ++e) {
      const double c = cond[e * outcome_count + s];
      const double joint = prior[e] * c;
      if (joint > 0.0) mi += joint * std::log2(c / marginal);
    }
  }
  return mi < 0.0 ? 0.0 : mi;
}

double mutual_information(const JointDistribution& j) {
  const auto pe = j.env_marginal();
  const auto ps = j.outcome_marginal();
  double mi = 0.0;
  for (std::size_t e = 0; e < j.env_count(); ++e) {
    for (std::size_t s = 0; s < j.outcome_count(); ++s) {
      const double p = j.at(e, s);
      if (p > 0.0) mi += p * std::log2(p / (pe[e] * ps[s]));
    }
  }
  return mi < 0.0 ? 0.0 : mi;
}

double conditional_mutual_information(const JointDistribution3& j) {
  const double cmi = mutual_information(j.env_and_ab()) - mutual_information(j.env_and_a());
  return cmi < 0.0 ? 0.0 : cmi;
}

}  // namespace bhgame
