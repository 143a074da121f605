#pragma once

#include <functional>
#include <vector>

#include "permsub/permutation.hpp"

namespace permsub {

// The sub-permutation of a host generated by the entry of rank k: the
// maximal window of positions around k whose entries are all >= k,
// together with its standardization.
struct SubPermutation {
  int generator_value = 0;  // k
  int lo = 0, hi = 0;       // inclusive 1-based window positions
  Permutation pattern;      // standardize(host[lo..hi])
};

// Window and pattern for rank k. sub_permutation(host, 1).pattern == host.
SubPermutation sub_permutation(const Permutation& host, int k);

// One record per k = 1..n.
std::vector<SubPermutation> all_sub_permutations(const Permutation& host);

// Size of the largest sub-permutation whose pattern satisfies class_test;
// 0 when none does.
int gamma(const Permutation& host,
          const std::function<bool(const Permutation&)>& class_test);

// Size of the largest decreasing sub-permutation whose window is not a
// prefix of the host (any window starting at position 1 is trivial);
// 0 when none exists. Host must avoid 123.
int gamma_u(const Permutation& host);

} // namespace permsub
