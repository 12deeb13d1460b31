#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace zetaforms {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (odd Bernoulli
// index, b > a in a binomial, divergent zeta argument, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A parameter set violates one of its invariants. `constraint()` names it.
class ValidationError : public Error {
 public:
  ValidationError(std::string constraint, const std::string& detail)
      : Error("invalid parameters: " + constraint + " (" + detail + ")"),
        constraint_(std::move(constraint)) {}
  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string constraint_;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

class ConditioningError : public Error {
 public:
  using Error::Error;
};

// Requested accuracy not reachable within the term budget.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// An identity that must hold exactly failed; indicates a bug upstream.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class IrreducibleCombinationError : public Error {
 public:
  IrreducibleCombinationError(const std::string& what, std::vector<std::string> residual_terms)
      : Error(what), residual_terms_(std::move(residual_terms)) {}
  const std::vector<std::string>& residual_terms() const noexcept { return residual_terms_; }

 private:
  std::vector<std::string> residual_terms_;
};

}  // namespace zetaforms
