#pragma once

#include <vector>

#include "permsub/permutation.hpp"

namespace permsub {

// Two-line drawing of a 123-avoider: an entry lies on the upper line U
// exactly when it covers (is right of and above) some earlier D entry.
struct TwoLineRepr {
  std::vector<bool> on_upper;  // by position, 0-based; true = U
  int l = 0;           // D entries below the rightmost U entry; 0 when U empty
  int v = 0;           // U entries covering the rightmost D entry
  int rule_label = 0;  // succession-rule label: l, or n when U is empty
};

// Host must avoid 123 (unsupported_input otherwise).
TwoLineRepr two_line(const Permutation& host);

} // namespace permsub
