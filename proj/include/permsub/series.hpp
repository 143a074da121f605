#pragma once

#include <utility>
#include <vector>

#include "permsub/bigint.hpp"

namespace permsub {

enum class Family { catalan, pj, lj, m2, dyck_avoid, gamma_u_bounded };

// Exact coefficient sequence indexed from n = 0.
struct CoefficientTable {
  Family family = Family::catalan;
  int index = 0;  // j for pj/dyck_avoid/gamma_u_bounded, m for lj
  std::vector<Int> coeff;
};

CoefficientTable catalan_coefficients(int n_max);

// v_{j,n}: 312-avoiders of size n whose largest 213-avoiding
// sub-permutation has size <= j. Convolution recurrence
//   v_0 = 1,  v_n = sum_{a=0}^{n-1} v_a v_{n-1-a} - 2^j [n = j+1].
CoefficientTable pj_coefficients(int j, int n_max);
// Same recurrence with the convolution summed in parallel; exact integer
// addition makes the result identical for any worker count.
CoefficientTable pj_coefficients_parallel(int j, int n_max);
// Same coefficients through the integer linear recurrence satisfied by
// sqrt(1 - 4x + 2^{j+2} x^{j+2}); O(n) big-integer steps instead of O(n^2).
CoefficientTable pj_coefficients_linear(int j, int n_max);

// 312-avoiders with no 213-avoiding sub-permutation of size j; equals
// the j-1 table above. j >= 2.
CoefficientTable no_size_j_caterpillar(int j, int n_max);

// l_n: 312-avoiders with at least one odd alternating sub-permutation of
// size j = 2m+1. Convolution recurrence
//   l_0 = 0,  l_n = c_m [n = j] + 2 sum c_a l_{n-1-a} - sum l_a l_{n-1-a}.
CoefficientTable lj_coefficients(int m, int n_max);
CoefficientTable lj_coefficients_parallel(int m, int n_max);
// c_n - l_n directly, via the linear recurrence for
// sqrt(1 - 4x + 4 c_m x^{2m+2}).
std::vector<Int> lj_complement_linear(int m, int n_max);

// a_n = 3 (2n-4)! / ((n-3)! n!): 123-avoiders of size n >= 3 with an
// increasing sub-permutation of size 2 (equivalently, first three entries
// in the order 231).
Int m2_count(int n);
// (a_n, b_n) with b_n = c_n - a_n.
std::pair<Int, Int> increasing_split(int n);

// 123-avoiders of size n with largest non-trivial decreasing
// sub-permutation of size <= j, by dynamic programming over the
// succession-rule state (label, consecutive non-increasing applications).
Int gamma_u_bounded_count(int n, int j);

// Dyck paths of semilength n with no factor U^{j+2} D, i.e. all maximal
// ascents of length <= j+1.
Int dyck_avoiding_count(int n, int j);

// Exact E_n = 1 + sum_{j=1}^{n-1} (c_n - v_{j,n}) / c_n, the mean size of
// the largest 213-avoiding sub-permutation over uniform 312-avoiders.
// Uses the linear coefficient path; equality with the convolution path is
// property-tested.
Rat expected_gamma(int n);

} // namespace permsub
