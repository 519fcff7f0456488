#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace starpir {

/// Bad input: wrong shape, out-of-range index, violated precondition.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive computation would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Square matrix without an inverse.
class SingularMatrix : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace starpir
