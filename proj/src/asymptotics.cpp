#include "permsub/asymptotics.hpp"

#include "permsub/errors.hpp"
#include "permsub/series.hpp"

namespace permsub {

namespace {

struct Radicand {
  Int B;
  int J;
};

Radicand radicand_params(RadicandFamily family, int index) {
  if (family == RadicandFamily::pj) {
    if (index < 1) throw invalid_input("radicand: pj index must be >= 1");
    return {Int(1) << (index + 2), index + 2};
  }
  if (index < 0) throw invalid_input("radicand: lj_complement index must be >= 0");
  return {4 * catalan(index), 2 * index + 2};
}

Real pow_ui(const Real& base, unsigned long e) {
  Real out(0, real_precision_bits);
  mpf_pow_ui(out.get_mpf_t(), base.get_mpf_t(), e);
  return out;
}

Real eval_radicand(const Radicand& r, const Real& x) {
  Real b(0, real_precision_bits);
  b = r.B;
  return 1 - 4 * x + b * pow_ui(x, static_cast<unsigned long>(r.J));
}

Real eval_derivative(const Radicand& r, const Real& x) {
  Real b(0, real_precision_bits);
  b = r.B;
  return -4 + r.J * b * pow_ui(x, static_cast<unsigned long>(r.J - 1));
}

} // namespace

AsymptoticParams dominant_root(RadicandFamily family, int index) {
  const Radicand r = radicand_params(family, index);
  Real lo = make_real(0.25);
  Real hi = make_real(2) / make_real(5);
  Real flo = eval_radicand(r, lo);
  Real fhi = eval_radicand(r, hi);
  if (!(flo > 0 && fhi < 0))
    throw numeric_failure("dominant_root: no sign change on (1/4, 2/5)");
  const Real width = make_real(1e-20);
  while (hi - lo > width) {
    Real mid = (lo + hi) / 2;
    if (eval_radicand(r, mid) > 0) lo = mid;
    else hi = mid;
  }
  Real x = (lo + hi) / 2;
  for (int it = 0; it < 8; ++it) x -= eval_radicand(r, x) / eval_derivative(r, x);
  Real residual = abs(eval_radicand(r, x));
  if (residual >= make_real(1e-12))
    throw numeric_failure("dominant_root: residual too large");
  AsymptoticParams out;
  out.family = family;
  out.index = index;
  out.root = x;
  out.growth = make_real(1) / x;
  out.residual = residual;
  return out;
}

Real asymptotic_coefficient(RadicandFamily family, int index, long n) {
  if (n < 1) throw invalid_input("asymptotic_coefficient: n must be >= 1");
  const Radicand r = radicand_params(family, index);
  const AsymptoticParams p = dominant_root(family, index);
  Real b(0, real_precision_bits);
  b = r.B;
  Real inner = 4 * p.root - r.J * b * pow_ui(p.root, static_cast<unsigned long>(r.J));
  if (!(inner > 0))
    throw numeric_failure("asymptotic_coefficient: nonpositive radical");
  Real nn = make_real(static_cast<double>(n));
  Real scale = sqrt(inner / (pi_real() * nn * nn * nn)) / 4;
  return scale * pow_ui(p.growth, static_cast<unsigned long>(n) + 1);
}

Real avoider_ratio_exact(int m, long n) {
  if (m < 1) throw invalid_input("avoider_ratio_exact: m must be >= 1");
  if (n < 0) throw invalid_input("avoider_ratio_exact: n must be >= 0");
  const int nn = static_cast<int>(n);
  const Int numer = pj_coefficients_linear(2 * m, nn).coeff[static_cast<std::size_t>(nn)];
  const Int denom = lj_complement_linear(m, nn)[static_cast<std::size_t>(nn)];
  if (denom == 0) throw numeric_failure("avoider_ratio_exact: empty denominator class");
  Rat ratio(numer, denom);
  ratio.canonicalize();
  Real out(0, real_precision_bits);
  out = ratio;
  return out;
}

Real avoider_ratio_asymptotic(int m, long n, double k_m) {
  if (m < 1) throw invalid_input("avoider_ratio_asymptotic: m must be >= 1");
  if (n < 0) throw invalid_input("avoider_ratio_asymptotic: n must be >= 0");
  // Base ((-1 + (1/4)^{m+1}) / (-1 + c_m (1/4)^{2m+1})) held exactly.
  const Int p1 = Int(1) << (2 * (m + 1));      // 4^{m+1}
  const Int p2 = Int(1) << (2 * (2 * m + 1));  // 4^{2m+1}
  const Int num = 1 - p1;
  const Int den = catalan(m) - p2;
  Rat base = Rat(num, p1) / Rat(den, p2);
  base.canonicalize();
  Real b(0, real_precision_bits);
  b = base;
  return make_real(k_m) * pow_ui(b, static_cast<unsigned long>(n) + 1);
}

Real root_ratio(int m) {
  if (m < 1) throw invalid_input("root_ratio: m must be >= 1");
  const Real a = dominant_root(RadicandFamily::lj_complement, m).root;
  const Real b = dominant_root(RadicandFamily::pj, 2 * m).root;
  return a / b;
}

} // namespace permsub
