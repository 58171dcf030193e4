#pragma once

#include <stdexcept>

namespace olyndon {

// Precondition violation on an operation's input.
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// extend_to_infinite was handed a word that is not omega-Lyndon.
struct NotLyndon : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A construction with a mandatory post-check failed that check.
struct ConstructionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A bounded search ran out of budget before certifying a result.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The caller's cap is below the certified bound, so the verification
// window cannot be inspected at all.
struct CapTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Guard on exponential oracle enumerations.
struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace olyndon
