#pragma once

#include <stdexcept>
#include <string>

namespace mele {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A user-supplied function returned a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Data or likelihood carries no usable information (all-zero series,
// likelihood vanishing at every node, zero MSE denominator, ...).
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mele
