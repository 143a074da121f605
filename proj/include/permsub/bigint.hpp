#pragma once

#include <gmpxx.h>

#include <vector>

namespace permsub {

// Exact arbitrary-precision scalars. Real carries enough precision that
// root-finding error stays far below the 3-decimal table tolerances even
// after raising to the 10^4-th power.
using Int = mpz_class;
using Rat = mpq_class;
using Real = mpf_class;

inline constexpr int real_precision_bits = 256;

inline Real make_real(double v = 0.0) { return Real(v, real_precision_bits); }

// Pi to well beyond working precision, for the asymptotic constant.
Real pi_real();

Int factorial(long n);

// C(n, k); zero when k < 0, k > n or n < 0.
Int binomial(long n, long k);

// n-th Catalan number, exact.
Int catalan(long n);

// c_0 .. c_n_max.
std::vector<Int> catalan_table(long n_max);

double to_double(const Rat& q);
double to_double(const Real& r);

} // namespace permsub
