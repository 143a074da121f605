#pragma once

#include "permsub/bigint.hpp"

namespace permsub {

// Radicand families 1 - 4x + B x^J:
//   pj:            B = 2^{j+2},  J = j+2,   index = j >= 1
//   lj_complement: B = 4 c_m,    J = 2m+2,  index = m >= 1
// (m = 0 degenerates to (1-2x)^2 with no sign change in the bracket;
// dominant_root reports numeric_failure there.)
enum class RadicandFamily { pj, lj_complement };

struct AsymptoticParams {
  RadicandFamily family = RadicandFamily::pj;
  int index = 0;
  Real root;      // smallest positive root, inside (1/4, 2/5)
  Real growth;    // 1/root
  Real residual;  // |radicand(root)|, < 1e-12
};

// Bisection to bracket width 1e-20 inside (1/4, 2/5), then Newton polish.
// numeric_failure when the bracket shows no sign change.
AsymptoticParams dominant_root(RadicandFamily family, int index);

// Coefficient growth estimate at n for the series (1 - sqrt(radicand))/2x:
//   (1/4) sqrt((4 rho - J B rho^J) / (pi n^3)) rho^{-(n+1)}.
Real asymptotic_coefficient(RadicandFamily family, int index, long n);

// Exact ratio (caterpillar-free count) / (alternating-free count) at
// size n for fixed m: v_{2m,n} / (c_n - l_n) with j = 2m+1.
Real avoider_ratio_exact(int m, long n);

// The closed-form estimate of that ratio with constant k_m:
//   k_m * ((-1 + (1/4)^{m+1}) / (-1 + c_m (1/4)^{2m+1}))^{n+1}.
Real avoider_ratio_asymptotic(int m, long n, double k_m = 1.0);

// Root ratio a_m / b_m of the two families at the same m.
Real root_ratio(int m);

} // namespace permsub
