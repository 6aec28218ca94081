#pragma once

#include <stdexcept>
#include <string>

namespace binomoment {

/// Argument outside the domain of a function (support, radius, parameter range).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation at a genuine pole of a gamma-type expression.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// (p, r) lies outside the parameter region an operation requires.
class RegionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative method did not reach its target.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bounded search finished without a conclusion.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace binomoment
