#include "permsub/twoline.hpp"

#include <limits>

#include "permsub/errors.hpp"

namespace permsub {

TwoLineRepr two_line(const Permutation& host) {
  static const Permutation mu({1, 2, 3});
  if (contains_pattern(host, mu))
    throw unsupported_input("two_line: host contains 123");
  const int n = host.size();
  TwoLineRepr r;
  r.on_upper.assign(static_cast<std::size_t>(n), false);
  // An entry covers some earlier D entry iff it exceeds the least D value
  // so far; D entries therefore form the running-minimum chain.
  int min_d = std::numeric_limits<int>::max();
  int rightmost_u = 0;  // value of the rightmost U entry, 0 if none
  int rightmost_d = 0;  // value of the rightmost D entry
  for (int i = 1; i <= n; ++i) {
    const int v = host[i];
    if (v > min_d) {
      r.on_upper[static_cast<std::size_t>(i - 1)] = true;
      rightmost_u = v;
    } else {
      min_d = v;
      rightmost_d = v;
    }
  }
  if (rightmost_u != 0) {
    for (int i = 1; i <= n; ++i)
      if (!r.on_upper[static_cast<std::size_t>(i - 1)] && host[i] < rightmost_u)
        ++r.l;
  }
  // The rightmost D entry is the minimum, so the U entries covering it are
  // exactly the entries right of it (all of which lie on U).
  if (n > 0) {
    const int pos_d = host.position_of(rightmost_d);
    r.v = n - pos_d;
  }
  r.rule_label = (rightmost_u != 0) ? r.l : n;
  return r;
}

} // namespace permsub
