// Acceptance gate: one pass/fail line per numbered criterion, tolerances
// pinned in code. Exit 0 when everything passes, 4 otherwise.
#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "permsub/asymptotics.hpp"
#include "permsub/bigint.hpp"
#include "permsub/enumerate.hpp"
#include "permsub/errors.hpp"
#include "permsub/montecarlo.hpp"
#include "permsub/probability.hpp"
#include "permsub/series.hpp"
#include "permsub/subperm.hpp"
#include "permsub/trees.hpp"

using namespace permsub;

namespace {

int failures = 0;

void crit(int id, bool ok, const std::string& msg) {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": "
            << msg << "\n";
  if (!ok) ++failures;
}

void info(const std::string& msg) { std::cout << "[INFO] " << msg << "\n"; }

// First three decimal digits, dropped not rounded: matches how the
// reference tables print their values.
long trunc3(const Rat& q) {
  const Rat scaled = Rat(q) * 1000;
  Int t;
  mpz_tdiv_q(t.get_mpz_t(), Rat(scaled).get_num().get_mpz_t(),
             Rat(scaled).get_den().get_mpz_t());
  return t.get_si();
}

long trunc3(double v) { return static_cast<long>(v * 1000); }
long round3(double v) { return std::lround(v * 1000); }

std::string fmt(double v, int decimals = 6) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

// Three decimals with the tail dropped, the convention of the reference
// tables these values are compared against.
std::string fmt3t(double v) { return fmt(trunc3(v) / 1000.0, 3); }

// ---------------------------------------------------------------- 1
void c1_fixture() {
  const Permutation host = Permutation::parse("4 5 3 1 2 6 8 7");
  const std::map<int, std::string> expected = {
      {1, "4 5 3 1 2 6 8 7"}, {2, "1 2 4 3"}, {3, "2 3 1"}, {4, "1 2"},
      {5, "1"},               {6, "1 3 2"},   {7, "2 1"},   {8, "1"}};
  bool ok = all_sub_permutations(host).size() == 8;
  for (const auto& [k, pat] : expected)
    ok = ok && sub_permutation(host, k).pattern.str() == pat;
  const std::string tree_text =
      "(1 L:(3 L:(4 R:(5))) R:(2 R:(6 R:(7 L:(8)))))";
  const Tree t = phi_inverse(host);
  ok = ok && t.str() == tree_text && phi(t) == host &&
       Tree::parse(tree_text, Tree::Role::increasing) == t;
  crit(1, ok, "fixture host 4 5 3 1 2 6 8 7: all eight sub-permutations and "
              "the increasing-tree image match");
}

// ---------------------------------------------------------------- 2
void c2_bijections() {
  bool ok = true;
  long phi_checked = 0, psi_checked = 0, prop1_checked = 0;
  for (int n = 1; n <= 8 && ok; ++n) {
    std::set<std::string> tree_images;
    enumerate_class(n, std::nullopt, [&](const Permutation& p) {
      const Tree t = phi_inverse(p);
      if (phi(t) != p || phi_collapse(t) != p) ok = false;
      tree_images.insert(t.str());
      ++phi_checked;
      for (int k = 1; k <= n && ok; ++k) {
        const SubPermutation s = sub_permutation(p, k);
        if (descendant_count(t, k) != s.pattern.size() ||
            phi(subtree_at(t, k)) != s.pattern)
          ok = false;
        ++prop1_checked;
      }
      return ok;
    }, 8);
    if (Int(static_cast<long>(tree_images.size())) != factorial(n)) ok = false;
  }
  const Permutation s312 = Permutation::parse("3 1 2");
  for (int n = 1; n <= 8 && ok; ++n) {
    Int census = 0;
    enumerate_class(n, s312, [&](const Permutation& p) {
      const Tree t = psi_inverse(p);
      if (psi(t) != p || psi_collapse(t) != p) ok = false;
      ++census;
      ++psi_checked;
      return ok;
    }, 8);
    if (census != catalan(n)) ok = false;
  }
  crit(2, ok, "bijection exhaustives to size 8: " + std::to_string(phi_checked) +
                  " increasing-tree round-trips, " +
                  std::to_string(psi_checked) + " planar round-trips, " +
                  std::to_string(prop1_checked) +
                  " subtree/sub-permutation agreements");
}

// ---------------------------------------------------------------- 3
void c3_tables() {
  bool ok = true;
  const std::vector<long> row = {1, 1, 0, 1, 2, 6, 16, 45, 126, 358, 1024};
  const auto p1 = pj_coefficients(1, 10).coeff;
  for (int n = 0; n <= 10; ++n)
    ok = ok && p1[static_cast<std::size_t>(n)] ==
                   Int(row[static_cast<std::size_t>(n)]);

  for (int n = 1; n <= 50 && ok; ++n) {
    const auto table = pj_coefficients_linear(n, n).coeff;
    ok = ok && table[static_cast<std::size_t>(n)] == catalan(n);
  }

  // Exhaustive side, stated over the 312 avoiders: a caterpillar image
  // avoids 213 and a strictly binary image alternates.
  const Permutation s312 = Permutation::parse("3 1 2");
  const Permutation s213 = Permutation::parse("2 1 3");
  for (int n = 1; n <= 10 && ok; ++n) {
    std::vector<Int> gamma_census(static_cast<std::size_t>(n + 1));
    std::array<Int, 3> window_hits = {0, 0, 0};  // m = 1, 2 at index 1, 2
    enumerate_class(n, s312, [&](const Permutation& p) {
      int widest = 0;
      std::array<bool, 3> seen = {false, false, false};
      for (const SubPermutation& s : all_sub_permutations(p)) {
        if (avoids(s.pattern, s213))
          widest = std::max(widest, s.pattern.size());
        for (int m = 1; m <= 2; ++m)
          if (s.pattern.size() == 2 * m + 1 &&
              is_down_up_alternating(s.pattern))
            seen[static_cast<std::size_t>(m)] = true;
      }
      ++gamma_census[static_cast<std::size_t>(widest)];
      for (int m = 1; m <= 2; ++m)
        if (seen[static_cast<std::size_t>(m)])
          ++window_hits[static_cast<std::size_t>(m)];
      return true;
    }, 11);
    for (int j = 1; j <= 5; ++j) {
      Int below = 0;
      for (int g = 0; g <= std::min(j, n); ++g)
        below += gamma_census[static_cast<std::size_t>(g)];
      ok = ok && pj_coefficients_linear(j, n).coeff[static_cast<std::size_t>(n)] ==
                     below;
    }
    for (int m = 1; m <= 2; ++m) {
      const Int comp = lj_complement_linear(m, n)[static_cast<std::size_t>(n)];
      ok = ok && comp == catalan(n) - window_hits[static_cast<std::size_t>(m)];
    }
  }
  crit(3, ok, "coefficient tables: reference row for index 1, degenerate "
              "j >= n agreement to size 50, exhaustive census to size 10");
}

// ---------------------------------------------------------------- 4
void c4_expected_gamma() {
  const std::vector<std::pair<int, long>> targets = {
      {10, 3596}, {20, 4172}, {50, 5227}, {100, 6121}, {200, 7058}};
  bool ok = true;
  std::string detail;
  for (const auto& [n, want] : targets) {
    const Rat e = expected_gamma(n);
    ok = ok && trunc3(e) == want;
    detail += (detail.empty() ? "" : ", ") + std::to_string(n) + " -> " +
              fmt3t(to_double(e));
  }
  crit(4, ok, "expected largest caterpillar sub-permutation: " + detail);
  const Rat e500 = expected_gamma(500);
  const Rat e1000 = expected_gamma(1000);
  info("extended sizes: 500 -> " + fmt3t(to_double(e500)) +
       " (table 8.336), 1000 -> " + fmt3t(to_double(e1000)) +
       " (table 9.319)");
}

// ---------------------------------------------------------------- 5
void c5_split() {
  const std::vector<long> a = {1, 3, 9, 28, 90, 297, 1001, 3432};
  const std::vector<long> b = {4, 11, 33, 104, 339, 1133, 3861, 13364};
  bool ok = true;
  for (int n = 3; n <= 10; ++n) {
    const auto [x, y] = increasing_split(n);
    ok = ok && x == Int(a[static_cast<std::size_t>(n - 3)]) &&
         y == Int(b[static_cast<std::size_t>(n - 3)]) && x + y == catalan(n);
  }
  crit(5, ok, "split of the 123 avoiders into label classes matches both "
              "reference rows for sizes 3..10 and sums to the Catalan numbers");
}

// ---------------------------------------------------------------- 6
void c6_gamma_u() {
  bool ok = true;
  const std::vector<long> motzkin = {1,   1,   2,    4,    9,    21,  51,
                                     127, 323, 835,  2188, 5798, 15511};
  for (int n = 0; n <= 12; ++n)
    ok = ok && gamma_u_bounded_count(n, 1) ==
                   Int(motzkin[static_cast<std::size_t>(n)]);

  const Permutation s123 = Permutation::parse("1 2 3");
  for (int n = 1; n <= 12 && ok; ++n) {
    std::vector<Int> census(static_cast<std::size_t>(n + 1));
    Int total = 0;
    enumerate_class(n, s123, [&](const Permutation& p) {
      ++census[static_cast<std::size_t>(gamma_u(p))];
      ++total;
      return true;
    }, 12);
    ok = ok && total == catalan(n);
    for (int j = 1; j <= 4; ++j) {
      Int below = 0;
      for (int g = 0; g <= std::min(j, n); ++g)
        below += census[static_cast<std::size_t>(g)];
      ok = ok && gamma_u_bounded_count(n, j) == below &&
           dyck_avoiding_count(n, j) == below;
    }
  }
  for (int j = 1; j <= 4 && ok; ++j)
    ok = ok && gamma_u_bounded_count(0, j) == 1 && dyck_avoiding_count(0, j) == 1;
  crit(6, ok, "bounded non-prefix decreasing statistic: generating-tree and "
              "lattice-path counts equal the exhaustive census to size 12 "
              "for bounds 1..4");
}

// ---------------------------------------------------------------- 7
void c7_avoider_ratio() {
  const std::vector<std::pair<long, std::pair<long, long>>> rows = {
      {50, {986, 988}},   {500, {887, 889}},   {1000, {789, 791}},
      {5000, {308, 310}}, {10000, {95, 96}}};
  bool ok = true;
  std::string detail;
  for (const auto& [n, want] : rows) {
    const double exact = to_double(avoider_ratio_exact(5, n));
    const double asym = to_double(avoider_ratio_asymptotic(5, n));
    ok = ok && trunc3(exact) == want.first && round3(asym) == want.second;
    detail += (detail.empty() ? "" : ", ") + std::to_string(n) + " -> " +
              fmt3t(exact) + "/" + fmt(asym, 3);
  }
  const double ratio = to_double(root_ratio(5));
  const bool root_ok = std::llround(ratio * 1000000) == 999765;
  ok = ok && root_ok;
  crit(7, ok, "escape ratios at window index 5 (exact/asymptotic): " + detail +
                  "; paired-root ratio " + fmt(ratio, 6));
}

// ---------------------------------------------------------------- 8
void c8_escape_counts() {
  const std::vector<long> av = {5, 16, 68, 392, 2905, 25508, 251188, 2703440};
  bool ok = true;
  for (int n = 3; n <= 10; ++n)
    ok = ok && av_213_2_count(n) == Int(av[static_cast<std::size_t>(n - 3)]);

  const Permutation s213 = Permutation::parse("2 1 3");
  for (int n = 3; n <= 8 && ok; ++n) {
    Int stays = 0;
    enumerate_class(n, std::nullopt, [&](const Permutation& p) {
      const Permutation g = sub_permutation(p, 2).pattern;
      if (!contains_pattern(p, s213) || contains_pattern(g, s213)) ++stays;
      return true;
    }, 8);
    ok = ok && stays == av_213_2_count(n);
  }
  crit(8, ok, "escape-free counts at rank 2 match the closed form for sizes "
              "3..10 and the exhaustive census for sizes 3..8");
}

// ---------------------------------------------------------------- 9
void c9_weight_constant() {
  const double h60 = to_double(h_constant(60));
  const bool first = std::llround(h60 * 100000) == 1175330;
  crit(9, first, "weight constant from 60 terms: " + fmt(h60, 7) +
                     " (wanted 11.75330 to five decimals)");

  const double h = to_double(h_constant(120));
  const int n = 40;
  const double p =
      to_double(Rat(not_av_213_2_count(n), factorial(n)));
  const double scaled = n * n * p / 2;
  const double dev = std::abs(scaled - h) / h;
  crit(9, dev < 0.02,
       "scaled escape probability at size 40: deviation " +
           fmt(100 * dev, 4) + "% against the 2% bound");
  if (dev >= 0.02)
    info("documented divergence: the leading correction makes the deviation "
         "exactly 1/(n-1) = " + fmt(100.0 / (n - 1), 4) + "% at size 40; the "
         "2% bound first holds at size 51");
  const int n2 = 60;
  const double p2 = to_double(Rat(not_av_213_2_count(n2), factorial(n2)));
  info("same deviation at size 60: " +
       fmt(100 * std::abs(n2 * n2 * p2 / 2 - h) / h, 4) + "%");
}

// ---------------------------------------------------------------- 10
void c10_size_law() {
  bool exact_ok = true;
  for (int n = 2; n <= 60 && exact_ok; ++n)
    for (int k = 2; k <= n && exact_ok; ++k) {
      const SizeDistribution d = subperm_size_law(n, k);
      Rat total(0);
      for (const auto& [m, mass] : d.masses) total += mass;
      exact_ok = total == Rat(1) && d.mean() == size_law_mean(n, k) &&
                 d.variance() == size_law_variance(n, k);
    }

  const int n = 20, k = 5, samples = 100000;
  Rng rng(20260815);
  std::vector<long> census(static_cast<std::size_t>(n + 1), 0);
  for (int s = 0; s < samples; ++s)
    ++census[static_cast<std::size_t>(
        sub_permutation(random_permutation(n, rng), k).pattern.size())];
  const SizeDistribution law = subperm_size_law(n, k);
  bool bins_ok = true;
  double worst = 0;
  for (const auto& [m, mass] : law.masses) {
    const double p = to_double(mass);
    const double se = std::sqrt(p * (1 - p) / samples);
    const double hat =
        census[static_cast<std::size_t>(m)] / static_cast<double>(samples);
    worst = std::max(worst, std::abs(hat - p) / se);
    bins_ok = bins_ok && std::abs(hat - p) <= 3 * se;
  }
  crit(10, exact_ok && bins_ok,
       "window-size law: exact masses, mean and variance for all ranks to "
       "size 60; sampled frequencies at (20, 5) within 3 standard errors "
       "per bin (worst " + fmt(worst, 2) + ")");
}

// ---------------------------------------------------------------- 11
void c11_monte_carlo(const AvoidanceSequence& seq, const std::string& label,
                     std::uint64_t seed) {
  McConfig cfg;
  cfg.n = 50;
  cfg.pattern = seq.pattern;
  cfg.samples = 100000;
  cfg.seed = seed;
  cfg.workers = 1;
  const std::vector<McEstimate> sweep = sweep_k(cfg, 1, 50);

  int within = 0;
  bool k1_zero = false;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const McEstimate& e : sweep) {
    const double analytic = prob_not_avsk(seq, cfg.n, e.k, 20).value;
    if (std::abs(e.estimate - analytic) <= 3 * e.std_error + 1e-15) ++within;
    if (e.k == 1) k1_zero = e.estimate == 0.0 && analytic == 0.0;
    sx += e.k;
    sy += e.estimate;
    sxx += static_cast<double>(e.k) * e.k;
    sxy += e.k * e.estimate;
  }
  const double slope = (50 * sxy - sx * sy) / (50 * sxx - sx * sx);
  const bool ok = within >= 47 && k1_zero && slope > 0;
  crit(11, ok, "sampled escape curve for " + label + ": " +
                   std::to_string(within) +
                   "/50 ranks within 3 standard errors, rank 1 exact zero, "
                   "regression slope " + fmt(slope, 5));
}

// ---------------------------------------------------------------- 12
std::string run_cli(const std::string& args) {
  const std::string cmd =
      std::string(PERMSUB_CLI_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  if (pclose(pipe) == -1) return "<pclose failed>";
  return out;
}

void c12_determinism() {
  const std::vector<std::string> fixed = {
      "count --family lj --m 1 --n-max 40",
      "prob --pattern \"2 1 3\" --n 50 --k-sweep 2:6 --terms 11",
      "asym --family pj --index 3 --n 500",
      "simulate --pattern \"2 1 3\" --n 30 --k-from 2 --k-to 5 "
      "--samples 3000 --seed 31415 --out json",
  };
  bool ok = true;
  for (const std::string& args : fixed) {
    const std::string a = run_cli(args);
    const std::string b = run_cli(args);
    ok = ok && !a.empty() && a == b && a.find("fail") == std::string::npos;
  }
  const std::string sim =
      "simulate --pattern \"2 1 3\" --n 30 --k-from 2 --k-to 5 "
      "--samples 3000 --seed 31415";
  const std::string w1 = run_cli(sim + " --workers 1");
  const std::string w3 = run_cli(sim + " --workers 3");
  const std::string w1b = run_cli(sim + " --workers 1");
  ok = ok && !w1.empty() && w1 == w3 && w1 == w1b;
  crit(12, ok, "repeated CLI invocations are byte-identical, including "
               "across worker counts at a fixed seed");
}

} // namespace

int main() {
  c1_fixture();
  c2_bijections();
  c3_tables();
  c4_expected_gamma();
  c5_split();
  c6_gamma_u();
  c7_avoider_ratio();
  c8_escape_counts();
  c9_weight_constant();
  c10_size_law();

  AvoidanceSequence seq213;  // Catalan row, exact at every term
  seq213.pattern = Permutation::parse("2 1 3");
  for (int i = 1; i <= 20; ++i) {
    seq213.terms.push_back(catalan(i));
    seq213.user_supplied.push_back(false);
  }
  c11_monte_carlo(seq213, "pattern 213", 9109);

  const AvoidanceSequence seq1324 = AvoidanceSequence::load_file(
      std::string(PERMSUB_DATA_DIR) + "/av1324.seq",
      Permutation::parse("1 3 2 4"));
  c11_monte_carlo(seq1324, "pattern 1324", 28101);

  c12_determinism();

  std::cout << (failures == 0 ? "acceptance: all criteria passed\n"
                              : "acceptance: " + std::to_string(failures) +
                                    " criterion check(s) failed\n");
  return failures == 0 ? 0 : 4;
}
