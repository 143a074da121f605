#include "permsub/series.hpp"

#include <omp.h>

#include "permsub/errors.hpp"

namespace permsub {

namespace {

void check_bounds(int n_max) {
  if (n_max < 0) throw invalid_input("coefficient table: n_max must be >= 0");
}

// Coefficients of sqrt(1 - 4x + B x^J) for even B, indices 0..n_top.
// Integrality: the radicand is 1 + 4u with u integral, and the binomial
// expansion of sqrt(1 + 4u) has integer coefficients; each division below
// must therefore be exact, and a remainder signals a bad (B, J).
std::vector<Int> sqrt_radicand_series(const Int& B, int J, int n_top) {
  if (mpz_odd_p(B.get_mpz_t()))
    throw numeric_failure("radicand recurrence requires even B");
  const Int half_B = B / 2;
  std::vector<Int> y(static_cast<std::size_t>(n_top) + 1);
  y[0] = 1;
  for (int n = 1; n <= n_top; ++n) {
    Int t = (4 * n - 6) * y[static_cast<std::size_t>(n - 1)];
    if (n >= J) t += half_B * (3 * J - 2 * n) * y[static_cast<std::size_t>(n - J)];
    if (!mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(n)))
      throw numeric_failure("radicand recurrence division not exact");
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(n));
    y[static_cast<std::size_t>(n)] = t;
  }
  return y;
}

// Series of (1 - sqrt(1 - 4x + B x^J)) / (2x), indices 0..n_max.
std::vector<Int> half_complement_series(const Int& B, int J, int n_max) {
  const std::vector<Int> y = sqrt_radicand_series(B, J, n_max + 1);
  std::vector<Int> f(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    Int t = -y[static_cast<std::size_t>(n) + 1];
    if (mpz_odd_p(t.get_mpz_t()))
      throw numeric_failure("series coefficient not an even integer");
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), 2);
    f[static_cast<std::size_t>(n)] = t;
  }
  return f;
}

void check_pj_args(int j, int n_max) {
  if (j < 1) throw invalid_input("pj coefficients: j must be >= 1");
  check_bounds(n_max);
}

} // namespace

CoefficientTable catalan_coefficients(int n_max) {
  check_bounds(n_max);
  return {Family::catalan, 0, catalan_table(n_max)};
}

CoefficientTable pj_coefficients(int j, int n_max) {
  check_pj_args(j, n_max);
  std::vector<Int> v(static_cast<std::size_t>(n_max) + 1);
  v[0] = 1;
  Int correction = Int(1) << j;
  for (int n = 1; n <= n_max; ++n) {
    Int s = 0;
    for (int a = 0; a < n; ++a)
      s += v[static_cast<std::size_t>(a)] * v[static_cast<std::size_t>(n - 1 - a)];
    if (n == j + 1) s -= correction;
    v[static_cast<std::size_t>(n)] = s;
  }
  return {Family::pj, j, std::move(v)};
}

CoefficientTable pj_coefficients_parallel(int j, int n_max) {
  check_pj_args(j, n_max);
  std::vector<Int> v(static_cast<std::size_t>(n_max) + 1);
  v[0] = 1;
  Int correction = Int(1) << j;
#pragma omp declare reduction(mpzsum : mpz_class : omp_out += omp_in) \
    initializer(omp_priv = mpz_class(0))
  for (int n = 1; n <= n_max; ++n) {
    mpz_class s = 0;
#pragma omp parallel for reduction(mpzsum : s) schedule(static)
    for (int a = 0; a < n; ++a)
      s += v[static_cast<std::size_t>(a)] * v[static_cast<std::size_t>(n - 1 - a)];
    if (n == j + 1) s -= correction;
    v[static_cast<std::size_t>(n)] = s;
  }
  return {Family::pj, j, std::move(v)};
}

CoefficientTable pj_coefficients_linear(int j, int n_max) {
  check_pj_args(j, n_max);
  return {Family::pj, j, half_complement_series(Int(1) << (j + 2), j + 2, n_max)};
}

CoefficientTable no_size_j_caterpillar(int j, int n_max) {
  if (j < 2) throw invalid_input("no_size_j_caterpillar: j must be >= 2");
  CoefficientTable t = pj_coefficients_linear(j - 1, n_max);
  return t;
}

namespace {

void check_lj_args(int m, int n_max) {
  if (m < 0) throw invalid_input("lj coefficients: m must be >= 0");
  check_bounds(n_max);
}

} // namespace

CoefficientTable lj_coefficients(int m, int n_max) {
  check_lj_args(m, n_max);
  const std::vector<Int> c = catalan_table(n_max);
  const Int cm = catalan(m);
  const int j = 2 * m + 1;
  std::vector<Int> l(static_cast<std::size_t>(n_max) + 1);
  l[0] = 0;
  for (int n = 1; n <= n_max; ++n) {
    Int s = n == j ? cm : Int(0);
    for (int a = 0; a < n; ++a)
      s += 2 * c[static_cast<std::size_t>(a)] * l[static_cast<std::size_t>(n - 1 - a)];
    for (int a = 0; a < n; ++a)
      s -= l[static_cast<std::size_t>(a)] * l[static_cast<std::size_t>(n - 1 - a)];
    l[static_cast<std::size_t>(n)] = s;
  }
  return {Family::lj, m, std::move(l)};
}

CoefficientTable lj_coefficients_parallel(int m, int n_max) {
  check_lj_args(m, n_max);
  const std::vector<Int> c = catalan_table(n_max);
  const Int cm = catalan(m);
  const int j = 2 * m + 1;
  std::vector<Int> l(static_cast<std::size_t>(n_max) + 1);
  l[0] = 0;
#pragma omp declare reduction(mpzsum : mpz_class : omp_out += omp_in) \
    initializer(omp_priv = mpz_class(0))
  for (int n = 1; n <= n_max; ++n) {
    mpz_class s = 0;
#pragma omp parallel for reduction(mpzsum : s) schedule(static)
    for (int a = 0; a < n; ++a)
      s += (2 * c[static_cast<std::size_t>(a)] - l[static_cast<std::size_t>(a)]) *
           l[static_cast<std::size_t>(n - 1 - a)];
    if (n == j) s += cm;
    l[static_cast<std::size_t>(n)] = s;
  }
  return {Family::lj, m, std::move(l)};
}

std::vector<Int> lj_complement_linear(int m, int n_max) {
  check_lj_args(m, n_max);
  return half_complement_series(4 * catalan(m), 2 * m + 2, n_max);
}

Int m2_count(int n) {
  if (n < 3) throw invalid_input("m2_count: n must be >= 3");
  Int numer = 3 * factorial(2 * n - 4);
  Int denom = factorial(n - 3) * factorial(n);
  if (!mpz_divisible_p(numer.get_mpz_t(), denom.get_mpz_t()))
    throw numeric_failure("m2_count: closed form not integral");
  Int out;
  mpz_divexact(out.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
  return out;
}

std::pair<Int, Int> increasing_split(int n) {
  Int a = m2_count(n);
  return {a, catalan(n) - a};
}

Int gamma_u_bounded_count(int n, int j) {
  if (n < 0) throw invalid_input("gamma_u_bounded_count: n must be >= 0");
  if (j < 1) throw invalid_input("gamma_u_bounded_count: j must be >= 1");
  if (n <= 1) return 1;
  // dp[l][c]: hosts whose succession-rule label is l after a run of c
  // consecutive label-dropping applications; c may never exceed j.
  const int cmax = std::min(j, n);
  std::vector<std::vector<Int>> dp(
      static_cast<std::size_t>(n) + 2,
      std::vector<Int>(static_cast<std::size_t>(cmax) + 1));
  dp[1][0] = 1;
  for (int step = 1; step < n; ++step) {
    std::vector<std::vector<Int>> ndp(
        static_cast<std::size_t>(n) + 2,
        std::vector<Int>(static_cast<std::size_t>(cmax) + 1));
    for (int c = 0; c <= cmax; ++c) {
      // Label-raising child: (l, c) -> (l+1, 0).
      for (int l = 1; l <= step; ++l)
        if (dp[static_cast<std::size_t>(l)][static_cast<std::size_t>(c)] != 0)
          ndp[static_cast<std::size_t>(l) + 1][0] +=
              dp[static_cast<std::size_t>(l)][static_cast<std::size_t>(c)];
      // Label-dropping children: (l, c) -> (l', c+1) for every l' <= l.
      if (c + 1 <= cmax) {
        Int suffix = 0;
        for (int lp = step; lp >= 1; --lp) {
          suffix += dp[static_cast<std::size_t>(lp)][static_cast<std::size_t>(c)];
          ndp[static_cast<std::size_t>(lp)][static_cast<std::size_t>(c) + 1] += suffix;
        }
      }
    }
    dp = std::move(ndp);
  }
  Int total = 0;
  for (const auto& row : dp)
    for (const Int& x : row) total += x;
  return total;
}

Int dyck_avoiding_count(int n, int j) {
  if (n < 0) throw invalid_input("dyck_avoiding_count: n must be >= 0");
  if (j < 0) throw invalid_input("dyck_avoiding_count: j must be >= 0");
  if (n == 0) return 1;
  // dp[h][r]: prefixes at height h whose current ascent run has length r;
  // runs are capped at j+1, so the factor U^{j+2} D never appears.
  const int rmax = std::min(j + 1, n);
  std::vector<std::vector<Int>> dp(
      static_cast<std::size_t>(n) + 1,
      std::vector<Int>(static_cast<std::size_t>(rmax) + 1));
  dp[0][0] = 1;
  for (int step = 0; step < 2 * n; ++step) {
    std::vector<std::vector<Int>> ndp(
        static_cast<std::size_t>(n) + 1,
        std::vector<Int>(static_cast<std::size_t>(rmax) + 1));
    for (int h = 0; h <= n; ++h) {
      for (int r = 0; r <= rmax; ++r) {
        const Int& cur = dp[static_cast<std::size_t>(h)][static_cast<std::size_t>(r)];
        if (cur == 0) continue;
        if (h + 1 <= n && r + 1 <= rmax)
          ndp[static_cast<std::size_t>(h) + 1][static_cast<std::size_t>(r) + 1] += cur;
        if (h >= 1) ndp[static_cast<std::size_t>(h) - 1][0] += cur;
      }
    }
    dp = std::move(ndp);
  }
  return dp[0][0];
}

Rat expected_gamma(int n) {
  if (n < 1) throw invalid_input("expected_gamma: n must be >= 1");
  const Int cn = catalan(n);
  Int excess = 0;  // sum over j of (c_n - v_{j,n})
  for (int j = 1; j < n; ++j) {
    const CoefficientTable t = pj_coefficients_linear(j, n);
    excess += cn - t.coeff[static_cast<std::size_t>(n)];
  }
  Rat e(excess, cn);
  e += 1;
  e.canonicalize();
  return e;
}

} // namespace permsub
