#pragma once

#include <stdexcept>
#include <string>

namespace bhgame {

/// Input failed a structural check (negative probability, bad normalization,
/// malformed file).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// KL divergence with p(x) > 0 where q(x) = 0.
class InfiniteDivergenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Caller asked for something the operation does not support in this
/// configuration (e.g. a slice image of a 3D grid).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bhgame
