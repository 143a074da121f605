#include "permsub/subperm.hpp"

#include "permsub/errors.hpp"

namespace permsub {

SubPermutation sub_permutation(const Permutation& host, int k) {
  const int n = host.size();
  if (k < 1 || k > n) throw invalid_input("sub_permutation: rank out of range");
  const int pos = host.position_of(k);
  int lo = pos, hi = pos;
  while (lo > 1 && host[lo - 1] >= k) --lo;
  while (hi < n && host[hi + 1] >= k) ++hi;
  std::vector<int> window;
  window.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int i = lo; i <= hi; ++i) window.push_back(host[i]);
  SubPermutation s;
  s.generator_value = k;
  s.lo = lo;
  s.hi = hi;
  s.pattern = standardize(window);
  return s;
}

std::vector<SubPermutation> all_sub_permutations(const Permutation& host) {
  if (host.size() < 1) throw invalid_input("all_sub_permutations: empty host");
  std::vector<SubPermutation> out;
  out.reserve(static_cast<std::size_t>(host.size()));
  for (int k = 1; k <= host.size(); ++k) out.push_back(sub_permutation(host, k));
  return out;
}

int gamma(const Permutation& host,
          const std::function<bool(const Permutation&)>& class_test) {
  int best = 0;
  for (int k = 1; k <= host.size(); ++k) {
    const SubPermutation s = sub_permutation(host, k);
    if (s.pattern.size() > best && class_test(s.pattern))
      best = s.pattern.size();
  }
  return best;
}

int gamma_u(const Permutation& host) {
  static const Permutation mu({1, 2, 3});
  if (contains_pattern(host, mu))
    throw unsupported_input("gamma_u: host contains 123");
  int best = 0;
  for (int k = 1; k <= host.size(); ++k) {
    const SubPermutation s = sub_permutation(host, k);
    if (s.lo == 1) continue;  // prefix windows are trivial
    if (s.pattern.size() > best && is_decreasing(s.pattern))
      best = s.pattern.size();
  }
  return best;
}

} // namespace permsub
