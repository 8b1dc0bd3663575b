#pragma once

#include <stdexcept>
#include <string>

namespace idsp {

// Bad user-supplied data or parameters (CLI exit code 1).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A solve failed numerically, e.g. a factorization hit a singular system (exit code 2).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// An internal precondition a caller must maintain was violated (exit code 3).
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace idsp
