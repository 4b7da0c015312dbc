// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace angleforge {

/// Bad user input: malformed polynomials, intervals, files, flags.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size or time budget would be exceeded.
class BudgetExceeded : public InputError {
 public:
  using InputError::InputError;
};

/// A mathematical invariant failed at runtime. This is a bug in the code
/// (or a counterexample to the construction) and must never be ignored.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace angleforge
