#pragma once

#include <stdexcept>
#include <string>

namespace ruelle {

// Base class for all library failures that are not plain precondition
// violations (those throw std::invalid_argument).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// m^n exceeds the configured enumeration budget.
class EnumerationError : public Error {
 public:
  using Error::Error;
};

// An iterative solver ran out of iterations; carries the last residual.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// A caller-supplied object violates a documented contract
// (e.g. a potential passed as "normalized" that is not).
class ContractError : public Error {
 public:
  using Error::Error;
};

// An a priori measure without full support (or integrating to ~0).
class DegenerateMeasureError : public Error {
 public:
  using Error::Error;
};

// exp() overflowed while building operator entries; rescale the potential.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace ruelle
