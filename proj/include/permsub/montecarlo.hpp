#pragma once

#include <cstdint>
#include <vector>

#include "permsub/permutation.hpp"

namespace permsub {

// Tri-state pattern search under a work cap (node expansions of the
// backtracking matcher). Length <= 3 patterns never cap.
enum class MatchResult { absent, present, capped };
MatchResult contains_pattern_capped(const Permutation& text,
                                    const Permutation& pattern,
                                    long node_cap);

// xoshiro256** seeded through splitmix64; platform-stable by construction.
class Rng {
public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  // Uniform in [0, bound) by rejection; exactly unbiased.
  std::uint64_t bounded(std::uint64_t bound);

private:
  std::uint64_t s_[4];
};

struct McConfig {
  int n = 0;
  Permutation pattern;
  int k = 1;
  long samples = 100000;
  std::uint64_t seed = 0;
  int workers = 1;
  long node_cap = 10000000;
};

struct McEstimate {
  int n = 0, k = 0;
  double estimate = 0;    // hits / (samples - capped)
  double std_error = 0;   // sqrt(p(1-p) / (samples - capped))
  long samples = 0;
  long capped = 0;
  std::uint64_t seed = 0;
};

// Uniform over S_n by an unbiased shuffle driven by rng.
Permutation random_permutation(int n, Rng& rng);

// Substream for one sample: mixes (seed, n, k, pattern fingerprint, index)
// so estimates are independent of worker count and sweep grouping.
Rng sample_stream(const McConfig& cfg, long sample_index);

// Fraction of samples with sigma in pi and sigma not in g_pi(k). Capped
// samples are excluded from both numerator and denominator and reported.
// Bit-identical for any worker count at fixed seed.
McEstimate estimate_not_avsk(const McConfig& cfg);

std::vector<McEstimate> sweep_k(const McConfig& cfg, int k_from, int k_to);
std::vector<McEstimate> sweep_n(const McConfig& cfg, int n_from, int n_to);

} // namespace permsub
