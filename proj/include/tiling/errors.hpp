#pragma once

#include <stdexcept>

namespace tiling {

// An instance exceeds a configured resource budget (box cells, numerator
// terms, conductor). Raised instead of silently truncating.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input document rejected; the message names the offending field.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// witness() was called on a system that is not a nontrivial exact partition.
struct WitnessPrecondition : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exact partition without a repeated maximal shape would refute the
// theorem this library checks; any occurrence is a reportable event.
struct TheoremViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tiling
