#pragma once

// Exact discrete information measures over small finite distributions.
// All logarithms are base 2; zero-probability cells contribute nothing.

#include <cstddef>
#include <span>
#include <vector>

namespace bhgame {

inline constexpr double kNormalizationTolerance = 1e-9;

class Distribution {
 public:
  /// Throws ValidationError on a negative entry or a sum that misses 1 by
  /// more than kNormalizationTolerance.
  explicit Distribution(std::vector<double> probs);

  std::span<const double> probs() const noexcept { return probs_; }
  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const noexcept { return probs_[i]; }

 private:
  std::vector<double> probs_;
};

/// Joint distribution over (E, S) stored row-major: probs[e * outcomes + s].
class JointDistribution {
 public:
  JointDistribution(std::size_t env_count, std::size_t outcome_count,
                    std::vector<double> probs);

  /// p(e, s) = prior(e) * cond[e][s]; cond is row-major env_count x outcomes.
  static JointDistribution from_conditional(std::span<const double> prior,
                                            std::span<const double> cond,
                                            std::size_t outcome_count);

  std::size_t env_count() const noexcept { return env_count_; }
  std::size_t outcome_count() const noexcept { return outcome_count_; }
  double at(std::size_t e, std::size_t s) const noexcept {
    return probs_[e * outcome_count_ + s];
  }
  std::span<const double> probs() const noexcept { return probs_; }

  std::vector<double> env_marginal() const;
  std::vector<double> outcome_marginal() const;

 private:
  std::size_t env_count_;
  std::size_t outcome_count_;
  std::vector<double> probs_;
};

/// Three-way joint over (E, A, B): probs[(e * a_count + a) * b_count + b].
class JointDistribution3 {
 public:
  JointDistribution3(std::size_t env_count, std::size_t a_count,
                     std::size_t b_count, std::vector<double> probs);

  std::size_t env_count() const noexcept { return env_count_; }
  std::size_t a_count() const noexcept { return a_count_; }
  std::size_t b_count() const noexcept { return b_count_; }
  double at(std::size_t e, std::size_t a, std::size_t b) const noexcept {
    return probs_[(e * a_count_ + a) * b_count_ + b];
  }

  /// Marginalize B away: joint over (E, A).
  JointDistribution env_and_a() const;
  /// Treat (A, B) as one variable: joint over (E, A x B).
  JointDistribution env_and_ab() const;

 private:
  std::size_t env_count_;
  std::size_t a_count_;
  std::size_t b_count_;
  std::vector<double> probs_;
};

double entropy(const Distribution& d);

/// D(p || q) in bits. Throws InfiniteDivergenceError when q lacks support,
/// ValidationError when sizes differ.
double kl_divergence(const Distribution& p, const Distribution& q);

/// I(E; S).
double mutual_information(const JointDistribution& j);

/// I(E; B | A) = I(E; A, B) - I(E; A).
double conditional_mutual_information(const JointDistribution3& j);

namespace detail {
/// Unvalidated kernel: I(E; S) for p(e, s) = prior[e] * cond[e * n + s].
double mutual_information_kernel(std::span<const double> prior,
                                 std::span<const double> cond,
                                 std::size_t outcome_count);
}  // namespace detail

}  // namespace bhgame
