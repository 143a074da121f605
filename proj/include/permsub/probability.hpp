#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "permsub/bigint.hpp"
#include "permsub/permutation.hpp"

namespace permsub {

// Exact law of |g_pi(k)| for a uniform permutation of size n:
//   Prob(= m) = k m C(n-m-1, k-2) / (n C(n-1, k-1)),  1 <= m <= n-k+1.
// k = 1 bypasses the formula: point mass at m = n.
struct SizeDistribution {
  int n = 0, k = 0;
  std::vector<std::pair<int, Rat>> masses;  // (m, mass), m ascending
  Rat mean() const;
  Rat variance() const;
};

// invalid_input when k < 1 or k > n.
SizeDistribution subperm_size_law(int n, int k);

// Closed forms (2n-k+1)/(k+1) and 2(n+1)(k-1)(n-k)/((k+1)^2 (k+2)).
Rat size_law_mean(int n, int k);
Rat size_law_variance(int n, int k);

// The three disjoint ways a permutation can contain 213 while its
// sub-permutation at 2 avoids it, counted separately.
struct CaseCounts {
  Int two_left_of_one;       // entry 2 left of entry 1
  Int pattern_in_gm;         // 2 right of 1, 213 inside g_pi(m)
  Int gm_avoids;             // 2 right of 1, g_pi(m) avoids, m < M
};

// |S_n \ Av_n(213;2)| by the closed formula
//   2(n-2)! sum_{i=1}^{n-4} c_i/(i-1)! + 2(n-2)(n-3)c_{n-3}
//   + 2(n-2)c_{n-2} - c_n + 2c_{n-1},  n >= 3.
Int not_av_213_2_count(int n);
CaseCounts not_av_213_2_cases(int n);
Int av_213_2_count(int n);  // n! minus the above

// Partial sum sum_{i=1}^{terms} c_i/(i-1)!; converges to 11.75330...
Real h_constant(int terms);

// Terms |Av_i(sigma)| for i = 1.., with per-term provenance.
struct AvoidanceSequence {
  Permutation pattern;
  std::vector<Int> terms;            // terms[i-1] = |Av_i(sigma)|
  std::vector<bool> user_supplied;   // false = computed by oracle

  int available() const { return static_cast<int>(terms.size()); }
  const Int& term(int i) const;      // 1-based; invalid_input when missing

  // Exhaustive counting up to i_max (bounded by the oracle ceiling).
  static AvoidanceSequence from_oracle(const Permutation& sigma, int i_max,
                                       int ceiling);
  // Lines "i count", "#" comments; terms marked user-supplied.
  static AvoidanceSequence load(std::istream& in, const Permutation& sigma);
  static AvoidanceSequence load_file(const std::string& path,
                                     const Permutation& sigma);
};

// Partial sum sum_{i=1}^{terms} |Av_i(sigma)| / (i-1)!.
Real h_sigma(const AvoidanceSequence& seq, int terms);

enum class ProbMethod { exact, asymptotic, truncated_series };

struct ProbEstimate {
  double value = 0;  // clamped to [0,1]
  ProbMethod method = ProbMethod::exact;
  int truncation = 0;        // series terms used; 0 = no truncation applied
  double w_value = 0;        // the convergent weight sum, when applicable
  int denominator_size = 0;  // conditional form: the size K used below
};

// 2 h_sigma / n^2 with h_sigma from the leading seq terms. The raw value
// exceeds 1 for tiny n; clamped to keep estimates in [0,1].
ProbEstimate prob_not_avsk_asymptotic(const AvoidanceSequence& seq, int n,
                                      int terms);

// Truncated sum
//   (k / (n C(n-1,k-1))) sum_m m C(n-m-1,k-2) |Av_m(sigma)| / m!
// over m = 1..min(n-k+1, truncation); also reports the equivalent
// weight-form value w = sum_m C(n-m-1,k-2)/C(n-2,k-2) |Av_m|/(m-1)!.
// k = 1 returns exactly 0.
ProbEstimate prob_not_avsk(const AvoidanceSequence& seq, int n, int k,
                           int truncation = 20);

// Exact Prob(pi not in Av_n(213;2)) = not_av_213_2_count(n) / n!.
ProbEstimate prob_not_213_2_exact(int n);

// Prob(sigma in pi | sigma not in g_pi(k)): numerator as above, the
// denominator Prob(g_pi(k) avoids sigma) approximated by |Av_K(sigma)|/K!
// at K = round(mean of the size law). undefined_conditional when the
// denominator vanishes.
ProbEstimate conditional_presence(const AvoidanceSequence& seq, int n, int k,
                                  int truncation = 20);

} // namespace permsub
