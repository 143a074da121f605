#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "permsub/bigint.hpp"
#include "permsub/permutation.hpp"

namespace permsub {

// Exhaustive generation ceiling: 11 unless PERMSUB_ORACLE_CEILING is set.
int default_oracle_ceiling();

// Streams the permutations of size n, optionally filtered to Av_n(avoided),
// in lexicographic order of the one-line word. Each instance is an
// independent restartable cursor. Sizes above the ceiling raise
// resource_limit; avoidance pruning cuts every branch whose prefix already
// contains the pattern.
class ClassStream {
public:
  ClassStream(int n, std::optional<Permutation> avoided,
              int ceiling = default_oracle_ceiling());

  // Fills out with the next permutation; false when exhausted.
  bool next(Permutation& out);

private:
  bool descend();

  int n_;
  std::optional<Permutation> avoided_;
  std::vector<int> prefix_;
  std::vector<int> cursor_;   // per-depth: next candidate value to try
  std::vector<bool> used_;    // by value, 1-based
  bool done_ = false;
  bool emitted_empty_ = false;
};

// Callback form; fn returning false stops the walk early.
void enumerate_class(int n, const std::optional<Permutation>& avoided,
                     const std::function<bool(const Permutation&)>& fn,
                     int ceiling = default_oracle_ceiling());

Int count_class(int n, const std::optional<Permutation>& avoided,
                int ceiling = default_oracle_ceiling());

} // namespace permsub
