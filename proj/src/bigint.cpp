#include "permsub/bigint.hpp"

#include "permsub/errors.hpp"

namespace permsub {

Real pi_real() {
  static const Real pi = [] {
    Real v(0, real_precision_bits);
    // 150 digits; parse failure would return -1 from set_str.
    v.set_str(
        "3.14159265358979323846264338327950288419716939937510"
        "58209749445923078164062862089986280348253421170679"
        "82148086513282306647093844609550582231725359408128",
        10);
    return v;
  }();
  return pi;
}

Int factorial(long n) {
  if (n < 0) throw invalid_input("factorial: negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Int catalan(long n) {
  if (n < 0) throw invalid_input("catalan: negative index");
  Int r = binomial(2 * n, n);
  Int d = Int(n + 1);
  Int q;
  mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
  return q;
}

std::vector<Int> catalan_table(long n_max) {
  if (n_max < 0) throw invalid_input("catalan_table: negative bound");
  std::vector<Int> c(static_cast<std::size_t>(n_max) + 1);
  c[0] = 1;
  for (long n = 1; n <= n_max; ++n) {
    // c_n = c_{n-1} * 2(2n-1) / (n+1), exactly divisible.
    Int t = c[n - 1] * (2 * (2 * n - 1));
    Int d = Int(n + 1);
    mpz_divexact(c[n].get_mpz_t(), t.get_mpz_t(), d.get_mpz_t());
  }
  return c;
}

double to_double(const Rat& q) { return q.get_d(); }
double to_double(const Real& r) { return r.get_d(); }

} // namespace permsub
