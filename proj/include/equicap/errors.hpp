#pragma once

#include <stdexcept>
#include <string>

namespace equicap {

// Input outside the mathematical domain of an operation (zero polynomial,
// a point on a pole, a set containing 0, ...).
class MathDomainError : public std::domain_error {
 public:
  explicit MathDomainError(const std::string& what) : std::domain_error(what) {}
};

// Floating-point data that cannot be represented faithfully, e.g. integer
// coefficients beyond double range.
class ConditioningError : public MathDomainError {
 public:
  explicit ConditioningError(const std::string& what) : MathDomainError(what) {}
};

// An iterative method exhausted its budget.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace equicap
