#pragma once

#include <stdexcept>
#include <string>

namespace symcensus {

/// Input outside an operation's domain (bad dimension, invalid partition, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dimension for which no special-partition construction exists (e.g. N = 5).
class UnsupportedDimension : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A singular value fell inside the ambiguity band around the rank threshold.
class IndeterminateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations of the same quantity disagreed.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace symcensus
