#pragma once

#include <stdexcept>

namespace permsub {

// Error taxonomy. The CLI maps these onto exit codes: domain errors
// (invalid_input, unsupported_input, undefined_conditional, numeric_failure)
// exit with 2, resource_limit with 3.

// Malformed or out-of-domain argument (bad rank, duplicate entries, ...).
struct invalid_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally valid input outside an operation's domain
// (e.g. a host containing 123 passed to a two-line operation).
struct unsupported_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Request exceeds a configured ceiling (oracle sizes, work caps).
struct resource_limit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A numeric procedure could not meet its contract (no root bracket,
// non-exact division where exactness is required).
struct numeric_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Conditional probability with a zero or unavailable denominator.
struct undefined_conditional : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace permsub
