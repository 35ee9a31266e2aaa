#pragma once

#include <stdexcept>
#include <string>

namespace sfpds {

/// Bad input: malformed files, inconsistent arguments, violated preconditions.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed request that could not be carried out numerically
/// (SCF divergence, term-budget overflow, complex roots, ...).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sfpds
