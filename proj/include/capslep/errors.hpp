#pragma once

#include <stdexcept>
#include <string>

namespace capslep {

/// Argument outside the mathematical domain of an operation (|x| > 1, |m| > l, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Index (degree, order, rank) outside the valid range.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Requested size exceeds a documented hard limit.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Iterative solver did not converge within its sweep budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace capslep
