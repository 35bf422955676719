#pragma once

#include <stdexcept>
#include <string>

namespace strata {

// Malformed or inconsistent user input (files, vertex lists, covers).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its documented domain.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A stratification or filtration violates its structural invariants.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace strata
