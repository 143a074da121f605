#include "permsub/probability.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "permsub/enumerate.hpp"
#include "permsub/errors.hpp"

namespace permsub {

namespace {

double clamp_unit(double v) { return std::min(1.0, std::max(0.0, v)); }

void check_nk(int n, int k, const char* who) {
  if (n < 1 || k < 1 || k > n)
    throw invalid_input(std::string(who) + ": need 1 <= k <= n");
}

} // namespace

Rat SizeDistribution::mean() const {
  Rat s = 0;
  for (const auto& [m, p] : masses) s += m * p;
  s.canonicalize();
  return s;
}

Rat SizeDistribution::variance() const {
  Rat s = 0;
  const Rat mu = mean();
  for (const auto& [m, p] : masses) s += m * m * p;
  s -= mu * mu;
  s.canonicalize();
  return s;
}

SizeDistribution subperm_size_law(int n, int k) {
  check_nk(n, k, "subperm_size_law");
  SizeDistribution d;
  d.n = n;
  d.k = k;
  if (k == 1) {
    d.masses.emplace_back(n, Rat(1));
    return d;
  }
  const Int denom = n * binomial(n - 1, k - 1);
  for (int m = 1; m <= n - k + 1; ++m) {
    Int numer = k * m * binomial(n - m - 1, k - 2);
    Rat p(numer, denom);
    p.canonicalize();
    d.masses.emplace_back(m, std::move(p));
  }
  return d;
}

Rat size_law_mean(int n, int k) {
  check_nk(n, k, "size_law_mean");
  Rat r(2 * n - k + 1, k + 1);
  r.canonicalize();
  return r;
}

Rat size_law_variance(int n, int k) {
  check_nk(n, k, "size_law_variance");
  Int numer = Int(2) * (n + 1) * (k - 1) * (n - k);
  Int denom = Int(k + 1) * (k + 1) * (k + 2);
  Rat r(numer, denom);
  r.canonicalize();
  return r;
}

namespace {

void check_peperone_n(int n) {
  if (n < 3) throw invalid_input("213-at-2 counts need n >= 3");
}

} // namespace

Int not_av_213_2_count(int n) {
  check_peperone_n(n);
  const std::vector<Int> c = catalan_table(n);
  Int total = 0;
  for (int i = 1; i <= n - 4; ++i) {
    Int term = 2 * c[static_cast<std::size_t>(i)] * factorial(n - 2);
    mpz_divexact(term.get_mpz_t(), term.get_mpz_t(),
                 factorial(i - 1).get_mpz_t());
    total += term;
  }
  total += 2 * Int(n - 2) * (n - 3) * c[static_cast<std::size_t>(n - 3)];
  total += 2 * Int(n - 2) * c[static_cast<std::size_t>(n - 2)];
  total -= c[static_cast<std::size_t>(n)];
  total += 2 * c[static_cast<std::size_t>(n - 1)];
  return total;
}

CaseCounts not_av_213_2_cases(int n) {
  check_peperone_n(n);
  const std::vector<Int> c = catalan_table(n);
  CaseCounts out;
  out.two_left_of_one = 0;
  out.pattern_in_gm = 0;
  out.gm_avoids = 0;
  for (int i = 1; i <= n - 2; ++i) {
    const Int& ci = c[static_cast<std::size_t>(i)];
    const Int choose = binomial(n - 2, i - 1);
    out.two_left_of_one += ci * factorial(n - i - 1) * choose;
    out.gm_avoids += ci * c[static_cast<std::size_t>(n - i - 1)] * (choose - 1);
    if (i <= n - 4)
      out.pattern_in_gm +=
          ci * (factorial(n - i - 1) - c[static_cast<std::size_t>(n - i - 1)]) *
          choose;
  }
  return out;
}

Int av_213_2_count(int n) {
  check_peperone_n(n);
  return factorial(n) - not_av_213_2_count(n);
}

Real h_constant(int terms) {
  if (terms < 0) throw invalid_input("h_constant: terms must be >= 0");
  Rat s = 0;
  for (int i = 1; i <= terms; ++i) {
    Rat t(catalan(i), factorial(i - 1));
    t.canonicalize();
    s += t;
  }
  s.canonicalize();
  Real out(0, real_precision_bits);
  out = s;
  return out;
}

const Int& AvoidanceSequence::term(int i) const {
  if (i < 1 || i > available())
    throw invalid_input("avoidance sequence: term " + std::to_string(i) +
                        " not available");
  return terms[static_cast<std::size_t>(i) - 1];
}

AvoidanceSequence AvoidanceSequence::from_oracle(const Permutation& sigma,
                                                 int i_max, int ceiling) {
  if (sigma.empty()) throw invalid_input("avoidance sequence: empty pattern");
  if (i_max < 1) throw invalid_input("avoidance sequence: i_max must be >= 1");
  AvoidanceSequence seq;
  seq.pattern = sigma;
  for (int i = 1; i <= i_max; ++i) {
    seq.terms.push_back(count_class(i, sigma, ceiling));
    seq.user_supplied.push_back(false);
  }
  return seq;
}

AvoidanceSequence AvoidanceSequence::load(std::istream& in,
                                          const Permutation& sigma) {
  if (sigma.empty()) throw invalid_input("avoidance sequence: empty pattern");
  AvoidanceSequence seq;
  seq.pattern = sigma;
  std::string line;
  int expected = 1;
  while (std::getline(in, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long i = 0;
    std::string count_text;
    if (!(ls >> i)) continue;  // blank or comment-only line
    if (!(ls >> count_text))
      throw invalid_input("avoidance sequence: malformed line '" + line + "'");
    std::string extra;
    if (ls >> extra)
      throw invalid_input("avoidance sequence: trailing data on line '" + line +
                          "'");
    if (i != expected)
      throw invalid_input("avoidance sequence: indices must run 1,2,... "
                          "(got " + std::to_string(i) + ")");
    Int value;
    try {
      value = Int(count_text);
    } catch (const std::invalid_argument&) {
      throw invalid_input("avoidance sequence: bad count '" + count_text + "'");
    }
    if (value < 0) throw invalid_input("avoidance sequence: negative count");
    seq.terms.push_back(std::move(value));
    seq.user_supplied.push_back(true);
    ++expected;
  }
  if (seq.terms.empty()) throw invalid_input("avoidance sequence: no terms");
  return seq;
}

AvoidanceSequence AvoidanceSequence::load_file(const std::string& path,
                                               const Permutation& sigma) {
  std::ifstream in(path);
  if (!in) throw invalid_input("avoidance sequence: cannot open " + path);
  return load(in, sigma);
}

Real h_sigma(const AvoidanceSequence& seq, int terms) {
  if (terms < 0) throw invalid_input("h_sigma: terms must be >= 0");
  Rat s = 0;
  for (int i = 1; i <= terms; ++i) {
    Rat t(seq.term(i), factorial(i - 1));
    t.canonicalize();
    s += t;
  }
  s.canonicalize();
  Real out(0, real_precision_bits);
  out = s;
  return out;
}

ProbEstimate prob_not_avsk_asymptotic(const AvoidanceSequence& seq, int n,
                                      int terms) {
  if (n < 1) throw invalid_input("prob_not_avsk_asymptotic: n must be >= 1");
  const Real h = h_sigma(seq, terms);
  ProbEstimate out;
  out.method = ProbMethod::asymptotic;
  out.truncation = terms;
  out.w_value = to_double(h);
  out.value = clamp_unit(to_double(2 * h / (make_real(n) * make_real(n))));
  return out;
}

ProbEstimate prob_not_avsk(const AvoidanceSequence& seq, int n, int k,
                           int truncation) {
  check_nk(n, k, "prob_not_avsk");
  if (truncation < 1)
    throw invalid_input("prob_not_avsk: truncation must be >= 1");
  ProbEstimate out;
  if (k == 1) {
    // g_pi(1) = pi, so the pattern can never be present in pi yet absent
    // from the sub-permutation.
    out.method = ProbMethod::exact;
    return out;
  }
  if (seq.available() == 0)
    throw invalid_input("prob_not_avsk: sequence has no terms");
  const int support = n - k + 1;
  const int used = std::min({support, truncation, seq.available()});
  Rat sum = 0;   // sum of m C(n-m-1,k-2) |Av_m| / m!
  Rat wsum = 0;  // sum of C(n-m-1,k-2)/C(n-2,k-2) |Av_m| / (m-1)!
  const Int wref = binomial(n - 2, k - 2);
  for (int m = 1; m <= used; ++m) {
    const Int choose = binomial(n - m - 1, k - 2);
    if (choose == 0) continue;
    Int numer = m * choose * seq.term(m);
    Rat t(numer, factorial(m));
    t.canonicalize();
    sum += t;
    Int wnum = choose * seq.term(m);
    Rat w(wnum, wref * factorial(m - 1));
    w.canonicalize();
    wsum += w;
  }
  const Int pref_den = Int(n) * binomial(n - 1, k - 1);
  Rat value = Rat(Int(k), pref_den) * sum;
  value.canonicalize();
  wsum.canonicalize();
  out.method = ProbMethod::truncated_series;
  out.truncation = used < support ? used : 0;
  out.w_value = to_double(wsum);
  out.value = clamp_unit(to_double(value));
  return out;
}

ProbEstimate prob_not_213_2_exact(int n) {
  check_peperone_n(n);
  Rat p(not_av_213_2_count(n), factorial(n));
  p.canonicalize();
  ProbEstimate out;
  out.method = ProbMethod::exact;
  out.value = clamp_unit(to_double(p));
  return out;
}

ProbEstimate conditional_presence(const AvoidanceSequence& seq, int n, int k,
                                  int truncation) {
  check_nk(n, k, "conditional_presence");
  ProbEstimate out;
  if (k == 1) {
    out.method = ProbMethod::exact;
    out.denominator_size = n;
    return out;
  }
  const Rat mu = size_law_mean(n, k);
  int K = static_cast<int>(std::llround(to_double(mu)));
  K = std::max(1, std::min(n, K));
  Rat denom(seq.term(K), factorial(K));
  denom.canonicalize();
  if (denom == 0)
    throw undefined_conditional(
        "conditional_presence: avoidance probability vanishes at size " +
        std::to_string(K));
  const ProbEstimate numer = prob_not_avsk(seq, n, k, truncation);
  out.method = ProbMethod::truncated_series;
  out.truncation = numer.truncation;
  out.w_value = numer.w_value;
  out.denominator_size = K;
  out.value = clamp_unit(numer.value / to_double(denom));
  return out;
}

} // namespace permsub
