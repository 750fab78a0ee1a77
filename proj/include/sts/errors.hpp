#pragma once

#include <stdexcept>
#include <string>

namespace sts {

// Bad parameters or malformed input supplied by the caller.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A certificate was checked against a design it was not issued for.
class DigestMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A randomized construction ran out of its move budget. Retrying with a
// different seed or a larger budget may succeed.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An identity that must hold by construction did not; indicates a bug.
class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sts
