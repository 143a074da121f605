#include "permsub/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "permsub/asymptotics.hpp"
#include "permsub/enumerate.hpp"
#include "permsub/errors.hpp"
#include "permsub/montecarlo.hpp"
#include "permsub/probability.hpp"
#include "permsub/series.hpp"
#include "permsub/subperm.hpp"
#include "permsub/trees.hpp"
#include "permsub/twoline.hpp"

namespace permsub {

bool OracleReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

int OracleReport::passed_count() const {
  int n = 0;
  for (const auto& c : checks)
    if (c.passed) ++n;
  return n;
}

namespace {

struct Checker {
  OracleReport report;
  int ceiling;

  int cap(int stated) const { return std::min(stated, ceiling); }

  void add(const std::string& name, bool passed, const std::string& detail) {
    report.checks.push_back({name, passed, detail});
  }

  // Runs body() and converts a mismatch message into a failed check.
  void run(const std::string& name,
           const std::function<std::string()>& body) {
    std::string detail;
    bool passed = false;
    try {
      detail = body();
      passed = true;
    } catch (const std::exception& e) {
      detail = e.what();
    }
    add(name, passed, detail);
  }
};

[[noreturn]] void mismatch(const std::string& what) {
  throw std::runtime_error(what);
}

// Naive containment: test every index subset of the text.
bool naive_contains(const Permutation& text, const Permutation& pattern) {
  const int n = text.size();
  const int m = pattern.size();
  if (m > n) return false;
  if (m == 0) return true;
  std::vector<int> idx(static_cast<std::size_t>(m));
  std::function<bool(int, int)> pick = [&](int slot, int start) {
    if (slot == m) {
      std::vector<int> word;
      for (int i : idx) word.push_back(text[i]);
      return standardize(word) == pattern;
    }
    for (int p = start; p <= n - (m - slot) + 1; ++p) {
      idx[static_cast<std::size_t>(slot)] = p;
      if (pick(slot + 1, p + 1)) return true;
    }
    return false;
  };
  return pick(0, 1);
}

std::vector<Permutation> all_perms(int n, int ceiling) {
  std::vector<Permutation> out;
  ClassStream st(n, std::nullopt, ceiling);
  Permutation p;
  while (st.next(p)) out.push_back(p);
  return out;
}

std::vector<Permutation> all_avoiders(int n, const Permutation& sigma,
                                      int ceiling) {
  std::vector<Permutation> out;
  ClassStream st(n, sigma, ceiling);
  Permutation p;
  while (st.next(p)) out.push_back(p);
  return out;
}

bool avoids_213(const Permutation& p) {
  static const Permutation sigma = Permutation::parse("2 1 3");
  return !contains_pattern(p, sigma);
}

bool odd_alternating(const Permutation& p) {
  return p.size() % 2 == 1 && is_down_up_alternating(p);
}

std::string check_phi_bijection(int ceiling) {
  Int total_trees = 0;
  for (int n = 1; n <= std::min(ceiling, 8); ++n) {
    const std::vector<Tree> trees = all_increasing_trees(n);
    if (Int(trees.size()) != factorial(n))
      mismatch("increasing tree census at n=" + std::to_string(n));
    std::set<std::vector<int>> images;
    for (const Tree& t : trees) {
      const Permutation image = phi(t);
      if (image != phi_collapse(t))
        mismatch("reading and collapse disagree at n=" + std::to_string(n));
      if (!(phi_inverse(image) == t))
        mismatch("phi round trip at n=" + std::to_string(n));
      images.insert(image.entries());
    }
    if (Int(images.size()) != factorial(n))
      mismatch("phi images not distinct at n=" + std::to_string(n));
    total_trees += Int(trees.size());
  }
  std::ostringstream os;
  os << total_trees << " trees, image = symmetric group at every size";
  return os.str();
}

std::string check_phi_sub_permutations(int ceiling) {
  long checked = 0;
  for (int n = 1; n <= std::min(ceiling, 7); ++n) {
    for (const Permutation& p : all_perms(n, ceiling)) {
      const Tree t = phi_inverse(p);
      if (phi(t) != p) mismatch("phi(phi_inverse) != id at n=" + std::to_string(n));
      for (int k = 1; k <= n; ++k) {
        const SubPermutation s = sub_permutation(p, k);
        if (s.pattern != phi(subtree_at(t, k)))
          mismatch("sub-permutation vs subtree at n=" + std::to_string(n) +
                   " k=" + std::to_string(k));
        if (s.pattern.size() != descendant_count(t, k))
          mismatch("sub-permutation size vs descendant count");
        ++checked;
      }
    }
  }
  return std::to_string(checked) + " (host, rank) pairs match the tree view";
}

std::string check_psi_bijection(int ceiling) {
  static const Permutation sigma312 = Permutation::parse("3 1 2");
  long total = 0;
  for (int n = 1; n <= std::min(ceiling, 8); ++n) {
    const std::vector<Tree> trees = all_planar_trees(n);
    if (Int(trees.size()) != catalan(n))
      mismatch("planar tree census at n=" + std::to_string(n));
    std::set<std::vector<int>> images;
    for (const Tree& t : trees) {
      const Permutation image = psi(t);
      if (image != psi_collapse(t))
        mismatch("psi reading and collapse disagree at n=" + std::to_string(n));
      if (contains_pattern(image, sigma312))
        mismatch("psi image contains 312 at n=" + std::to_string(n));
      if (!(psi_inverse(image) == t))
        mismatch("psi round trip at n=" + std::to_string(n));
      images.insert(image.entries());
    }
    if (Int(images.size()) != catalan(n))
      mismatch("psi images not distinct at n=" + std::to_string(n));
    if (count_class(n, sigma312, ceiling) != catalan(n))
      mismatch("312-avoider census at n=" + std::to_string(n));
    total += static_cast<long>(trees.size());
  }
  return std::to_string(total) + " trees, image = 312-avoiders at every size";
}

std::string check_psi_inverse_domain(int ceiling) {
  static const Permutation sigma312 = Permutation::parse("3 1 2");
  long rejected = 0, accepted = 0;
  for (int n = 1; n <= std::min(ceiling, 6); ++n) {
    for (const Permutation& p : all_perms(n, ceiling)) {
      if (contains_pattern(p, sigma312)) {
        try {
          psi_inverse(p);
          mismatch("psi_inverse accepted " + p.str());
        } catch (const invalid_input&) {
          ++rejected;
        }
      } else {
        if (psi(psi_inverse(p)) != p)
          mismatch("psi_inverse round trip failed for " + p.str());
        ++accepted;
      }
    }
  }
  return std::to_string(accepted) + " avoiders accepted, " +
         std::to_string(rejected) + " others rejected";
}

std::string check_caterpillar_census(int ceiling) {
  for (int j = 1; j <= std::min(ceiling, 8); ++j) {
    Int count = 0;
    for (const Tree& t : all_planar_trees(j)) {
      const bool cat = is_caterpillar(t);
      if (cat != avoids_213(psi(t)))
        mismatch("caterpillar <-> 213-avoiding image at size " +
                 std::to_string(j));
      if (cat) count += 1;
    }
    if (count != (Int(1) << (j - 1)))
      mismatch("caterpillar count at size " + std::to_string(j));
  }
  return "2^{j-1} caterpillars and image equivalence for every j";
}

std::string check_strict_binary_census(int ceiling) {
  for (int s = 1; s <= std::min(ceiling, 9); s += 2) {
    const int m = (s - 1) / 2;
    Int count = 0;
    for (const Tree& t : all_planar_trees(s)) {
      const bool strict = is_strictly_binary(t);
      if (strict != is_down_up_alternating(psi(t)))
        mismatch("strictly binary <-> alternating image at size " +
                 std::to_string(s));
      if (strict) count += 1;
    }
    if (count != catalan(m))
      mismatch("strictly binary count at size " + std::to_string(s));
  }
  for (int s = 2; s <= std::min(ceiling, 8); s += 2) {
    const std::vector<Tree> trees = all_planar_trees(s);
    try {
      is_strictly_binary(trees.front());
      mismatch("even size accepted by is_strictly_binary");
    } catch (const invalid_input&) {
    }
  }
  return "c_m strictly binary trees of size 2m+1; even sizes rejected";
}

std::string check_gamma_tree_correspondence(int ceiling) {
  static const Permutation sigma312 = Permutation::parse("3 1 2");
  const auto cat_test = [](const Tree& t) { return is_caterpillar(t); };
  const auto strict_test = [](const Tree& t) {
    return t.size() % 2 == 1 && is_strictly_binary(t);
  };
  long checked = 0;
  for (int n = 1; n <= std::min(ceiling, 7); ++n) {
    for (const Permutation& p : all_avoiders(n, sigma312, ceiling)) {
      const Tree t = psi_inverse(p);
      if (gamma(p, avoids_213) != max_subtree_size(t, cat_test))
        mismatch("213 gamma vs caterpillar subtree for " + p.str());
      if (gamma(p, odd_alternating) != max_subtree_size(t, strict_test))
        mismatch("alternating gamma vs strictly binary subtree for " + p.str());
      ++checked;
    }
  }
  return std::to_string(checked) + " avoiders match on both statistics";
}

std::string check_pattern_scan(int ceiling) {
  std::vector<Permutation> patterns;
  for (int m = 1; m <= 4; ++m)
    for (const Permutation& q : all_perms(m, std::max(ceiling, 4)))
      patterns.push_back(q);
  long checked = 0;
  for (int n = 0; n <= std::min(ceiling, 6); ++n) {
    for (const Permutation& p : all_perms(n, ceiling)) {
      for (const Permutation& q : patterns) {
        if (contains_pattern(p, q) != naive_contains(p, q))
          mismatch("scan vs subset search: text " + p.str() + " pattern " +
                   q.str());
        ++checked;
      }
    }
  }
  return std::to_string(checked) + " (text, pattern) pairs agree";
}

std::string check_subperm_windows(int ceiling) {
  long checked = 0;
  for (int n = 1; n <= std::min(ceiling, 7); ++n) {
    for (const Permutation& p : all_perms(n, ceiling)) {
      const std::vector<SubPermutation> subs = all_sub_permutations(p);
      if (static_cast<int>(subs.size()) != n) mismatch("one record per rank");
      if (subs.front().pattern != p) mismatch("rank 1 must reproduce the host");
      for (const SubPermutation& s : subs) {
        const int k = s.generator_value;
        const int pos = p.position_of(k);
        if (!(s.lo <= pos && pos <= s.hi)) mismatch("window misses its rank");
        std::vector<int> word;
        for (int i = s.lo; i <= s.hi; ++i) {
          if (p[i] < k) mismatch("window entry below rank");
          word.push_back(p[i]);
        }
        if (s.lo > 1 && p[s.lo - 1] >= k) mismatch("window not left-maximal");
        if (s.hi < n && p[s.hi + 1] >= k) mismatch("window not right-maximal");
        if (standardize(word) != s.pattern) mismatch("pattern mismatch");
        ++checked;
      }
    }
  }
  return std::to_string(checked) + " windows maximal and standardized";
}

std::string check_two_line_rule(int ceiling) {
  static const Permutation sigma123 = Permutation::parse("1 2 3");
  // Label dynamics: a label-l node has children labelled 1..l+1.
  std::vector<Int> level = {Int(0), Int(1)};  // level 1, by label
  for (int n = 1; n <= std::min(ceiling, 8); ++n) {
    std::map<int, Int> histogram;
    Int total = 0;
    Int child_sum = 0;
    for (const Permutation& p : all_avoiders(n, sigma123, ceiling)) {
      const TwoLineRepr r = two_line(p);
      histogram[r.rule_label] += 1;
      total += 1;
      child_sum += r.rule_label + 1;
    }
    if (total != catalan(n)) mismatch("123-avoider census at n=" + std::to_string(n));
    if (child_sum != catalan(n + 1))
      mismatch("children do not cover the next level at n=" + std::to_string(n));
    for (std::size_t l = 1; l < level.size(); ++l) {
      const Int want = level[l];
      const auto it = histogram.find(static_cast<int>(l));
      const Int got = it == histogram.end() ? Int(0) : it->second;
      if (got != want)
        mismatch("label histogram at n=" + std::to_string(n) +
                 " label=" + std::to_string(l));
    }
    for (const auto& [l, cnt] : histogram)
      if (l < 1 || l >= static_cast<int>(level.size()))
        mismatch("unexpected label " + std::to_string(l));
    // Advance the label dynamics one level.
    std::vector<Int> next(level.size() + 1, Int(0));
    for (std::size_t l = 1; l < level.size(); ++l) {
      if (level[l] == 0) continue;
      for (std::size_t lp = 1; lp <= l + 1; ++lp) next[lp] += level[l];
    }
    level = std::move(next);
  }
  return "rule labels reproduce the succession dynamics level by level";
}

std::string check_gamma_u_counts(int ceiling) {
  static const Permutation sigma123 = Permutation::parse("1 2 3");
  for (int n = 1; n <= std::min(ceiling, 8); ++n) {
    std::vector<Int> at_most(static_cast<std::size_t>(n) + 1, Int(0));
    for (const Permutation& p : all_avoiders(n, sigma123, ceiling)) {
      const int g = gamma_u(p);
      for (int j = std::max(g, 1); j <= n; ++j)
        at_most[static_cast<std::size_t>(j)] += 1;
    }
    for (int j = 1; j <= n; ++j)
      if (gamma_u_bounded_count(n, j) != at_most[static_cast<std::size_t>(j)])
        mismatch("bounded count at n=" + std::to_string(n) +
                 " j=" + std::to_string(j));
  }
  return "dynamic program equals the filtered census for every (n, j)";
}

std::string check_dyck_counts(int ceiling) {
  for (int n = 0; n <= std::min(ceiling, 9); ++n) {
    // Enumerate Dyck paths, recording the longest maximal ascent.
    std::vector<Int> by_max_ascent(static_cast<std::size_t>(n) + 2, Int(0));
    std::vector<int> steps;
    std::function<void(int, int, int)> walk = [&](int h, int run, int best) {
      if (static_cast<int>(steps.size()) == 2 * n) {
        if (h == 0) by_max_ascent[static_cast<std::size_t>(best)] += 1;
        return;
      }
      if (h < n) {
        steps.push_back(1);
        walk(h + 1, run + 1, std::max(best, run + 1));
        steps.pop_back();
      }
      if (h > 0) {
        steps.push_back(-1);
        walk(h - 1, 0, best);
        steps.pop_back();
      }
    };
    walk(0, 0, 0);
    for (int j = 0; j <= n; ++j) {
      Int want = 0;
      for (int a = 0; a <= std::min(j + 1, n); ++a)
        want += by_max_ascent[static_cast<std::size_t>(a)];
      if (dyck_avoiding_count(n, j) != want)
        mismatch("ascent-bounded count at n=" + std::to_string(n) +
                 " j=" + std::to_string(j));
    }
  }
  return "ascent-bounded dynamic program equals the path census";
}

std::string check_pj_tables(int ceiling) {
  static const Permutation sigma312 = Permutation::parse("3 1 2");
  const int n_max = std::min(ceiling, 8);
  // One pass: histogram of gamma over 312-avoiders, then cumulative.
  std::vector<std::vector<Int>> at_most(
      static_cast<std::size_t>(n_max) + 1,
      std::vector<Int>(static_cast<std::size_t>(n_max) + 1, Int(0)));
  for (int n = 0; n <= n_max; ++n) {
    for (const Permutation& p : all_avoiders(n, sigma312, ceiling)) {
      const int g = n == 0 ? 0 : gamma(p, avoids_213);
      for (int j = g; j <= n_max; ++j)
        at_most[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)] += 1;
    }
  }
  for (int j = 1; j <= n_max; ++j) {
    const CoefficientTable t = pj_coefficients(j, n_max);
    for (int n = 0; n <= n_max; ++n) {
      if (t.coeff[static_cast<std::size_t>(n)] !=
          at_most[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)])
        mismatch("table vs census at j=" + std::to_string(j) +
                 " n=" + std::to_string(n));
      if (j >= n && t.coeff[static_cast<std::size_t>(n)] != catalan(n))
        mismatch("degenerate column at j=" + std::to_string(j));
    }
  }
  return "coefficients equal bounded-gamma counts on the full grid";
}

std::string check_lj_tables(int ceiling) {
  static const Permutation sigma312 = Permutation::parse("3 1 2");
  const int n_max = std::min(ceiling, 8);
  for (int m = 1; m <= 2; ++m) {
    const int j = 2 * m + 1;
    const CoefficientTable t = lj_coefficients(m, n_max);
    const std::vector<Int> comp = lj_complement_linear(m, n_max);
    if (t.coeff[0] != 0 || comp[0] != 1) mismatch("empty-host terms");
    for (int n = 1; n <= n_max; ++n) {
      Int with = 0;
      for (const Permutation& p : all_avoiders(n, sigma312, ceiling)) {
        bool found = false;
        for (const SubPermutation& s : all_sub_permutations(p))
          if (s.pattern.size() == j && is_down_up_alternating(s.pattern)) {
            found = true;
            break;
          }
        if (found) with += 1;
      }
      if (t.coeff[static_cast<std::size_t>(n)] != with)
        mismatch("census at m=" + std::to_string(m) + " n=" + std::to_string(n));
      if (comp[static_cast<std::size_t>(n)] + with != catalan(n))
        mismatch("complement at m=" + std::to_string(m) +
                 " n=" + std::to_string(n));
    }
  }
  return "alternating-window census matches both recurrence and complement";
}

std::string check_path_agreement(int) {
  const int n_max = 120;
  for (int j = 1; j <= 6; ++j) {
    const CoefficientTable serial = pj_coefficients(j, n_max);
    const CoefficientTable parallel = pj_coefficients_parallel(j, n_max);
    const CoefficientTable linear = pj_coefficients_linear(j, n_max);
    if (serial.coeff != parallel.coeff)
      mismatch("serial vs parallel at j=" + std::to_string(j));
    if (serial.coeff != linear.coeff)
      mismatch("serial vs linear at j=" + std::to_string(j));
  }
  for (int m = 0; m <= 3; ++m) {
    const CoefficientTable serial = lj_coefficients(m, n_max);
    const CoefficientTable parallel = lj_coefficients_parallel(m, n_max);
    const std::vector<Int> comp = lj_complement_linear(m, n_max);
    const std::vector<Int> cat = catalan_table(n_max);
    if (serial.coeff != parallel.coeff)
      mismatch("serial vs parallel at m=" + std::to_string(m));
    for (int n = 0; n <= n_max; ++n)
      if (comp[static_cast<std::size_t>(n)] !=
          cat[static_cast<std::size_t>(n)] -
              serial.coeff[static_cast<std::size_t>(n)])
        mismatch("complement vs linear at m=" + std::to_string(m));
  }
  return "serial, parallel and linear paths agree to n=120";
}

std::string check_m2_split(int ceiling) {
  static const Permutation sigma123 = Permutation::parse("1 2 3");
  for (int n = 3; n <= std::min(ceiling, 8); ++n) {
    Int with_231 = 0, gamma_two = 0, gamma_one = 0;
    for (const Permutation& p : all_avoiders(n, sigma123, ceiling)) {
      const Permutation head = standardize({p[1], p[2], p[3]});
      if (head == Permutation::parse("2 3 1")) with_231 += 1;
      const int g = gamma(p, is_increasing);
      if (g == 2) gamma_two += 1;
      else if (g == 1) gamma_one += 1;
      else mismatch("gamma outside {1,2} for " + p.str());
    }
    const auto [a, b] = increasing_split(n);
    if (a != with_231) mismatch("231-head census at n=" + std::to_string(n));
    if (a != gamma_two || b != gamma_one)
      mismatch("gamma split at n=" + std::to_string(n));
  }
  // Independent recursion: f_0(l) = 1, f_d(l) = sum_{l'=1}^{l+1} f_{d-1}(l').
  for (int n = 3; n <= 25; ++n) {
    std::map<int, Int> f;  // f_d by label, built upward
    for (int l = 1; l <= n; ++l) f[l] = 1;
    for (int d = 1; d <= n - 3; ++d) {
      std::map<int, Int> g;
      for (int l = 1; l <= n - d; ++l) {
        Int s = 0;
        for (int lp = 1; lp <= l + 1; ++lp) s += f[lp];
        g[l] = s;
      }
      f = std::move(g);
    }
    if (m2_count(n) != f[2])
      mismatch("succession recursion at n=" + std::to_string(n));
  }
  return "closed form matches census, gamma split and label recursion";
}

std::string check_not_av_213_2(int ceiling) {
  static const Permutation sigma213 = Permutation::parse("2 1 3");
  for (int n = 3; n <= std::min(ceiling, 8); ++n) {
    Int brute = 0;
    for (const Permutation& p : all_perms(n, ceiling)) {
      if (!contains_pattern(p, sigma213)) continue;
      if (!contains_pattern(sub_permutation(p, 2).pattern, sigma213)) brute += 1;
    }
    if (not_av_213_2_count(n) != brute)
      mismatch("closed form vs census at n=" + std::to_string(n));
    if (av_213_2_count(n) != factorial(n) - brute)
      mismatch("complement at n=" + std::to_string(n));
  }
  for (int n = 3; n <= 40; ++n) {
    const CaseCounts c = not_av_213_2_cases(n);
    if (c.two_left_of_one + c.pattern_in_gm + c.gm_avoids !=
        not_av_213_2_count(n))
      mismatch("case split does not sum at n=" + std::to_string(n));
  }
  return "closed form equals census; case split sums to it through n=40";
}

std::string check_size_law(int ceiling) {
  for (int n = 1; n <= std::min(ceiling, 8); ++n) {
    const std::vector<Permutation> perms = all_perms(n, ceiling);
    for (int k = 1; k <= n; ++k) {
      std::map<int, Int> freq;
      for (const Permutation& p : perms)
        freq[sub_permutation(p, k).pattern.size()] += 1;
      const SizeDistribution law = subperm_size_law(n, k);
      Rat total = 0;
      for (const auto& [m, mass] : law.masses) {
        const auto it = freq.find(m);
        const Int count = it == freq.end() ? Int(0) : it->second;
        Rat expected(count, factorial(n));
        expected.canonicalize();
        if (mass != expected)
          mismatch("mass at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                   " m=" + std::to_string(m));
        total += mass;
      }
      if (total != 1) mismatch("masses do not sum to one");
      Int weighted = 0;
      for (const auto& [m, cnt] : freq) weighted += Int(m) * cnt;
      Rat mean(weighted, factorial(n));
      mean.canonicalize();
      if (law.mean() != mean) mismatch("empirical mean mismatch");
    }
  }
  for (int n = 1; n <= 60; ++n)
    for (int k = 1; k <= n; ++k) {
      const SizeDistribution law = subperm_size_law(n, k);
      if (law.mean() != size_law_mean(n, k))
        mismatch("closed-form mean at n=" + std::to_string(n) +
                 " k=" + std::to_string(k));
      if (law.variance() != size_law_variance(n, k))
        mismatch("closed-form variance at n=" + std::to_string(n) +
                 " k=" + std::to_string(k));
    }
  return "law matches census; closed forms match to n=60";
}

std::string check_avoidance_sequences(int ceiling) {
  const int i_max = std::min(ceiling, 8);
  const AvoidanceSequence s213 =
      AvoidanceSequence::from_oracle(Permutation::parse("2 1 3"), i_max, ceiling);
  const AvoidanceSequence s312 =
      AvoidanceSequence::from_oracle(Permutation::parse("3 1 2"), i_max, ceiling);
  const AvoidanceSequence s123 =
      AvoidanceSequence::from_oracle(Permutation::parse("1 2 3"), i_max, ceiling);
  for (int i = 1; i <= i_max; ++i) {
    if (s213.term(i) != catalan(i) || s312.term(i) != catalan(i) ||
        s123.term(i) != catalan(i))
      mismatch("length-3 classes must be Catalan at i=" + std::to_string(i));
  }
  const AvoidanceSequence s21 =
      AvoidanceSequence::from_oracle(Permutation::parse("2 1"), i_max, ceiling);
  const AvoidanceSequence s1 =
      AvoidanceSequence::from_oracle(Permutation::parse("1"), i_max, ceiling);
  for (int i = 1; i <= i_max; ++i) {
    if (s21.term(i) != 1) mismatch("Av(21) must be a single chain");
    if (s1.term(i) != 0) mismatch("Av(1) must be empty");
  }
  return "oracle sequences: Catalan for length-3 patterns, 1 for 21, 0 for 1";
}

std::string check_expected_gamma(int ceiling) {
  static const Permutation sigma312 = Permutation::parse("3 1 2");
  for (int n = 1; n <= std::min(ceiling, 7); ++n) {
    Int total = 0;
    Int count = 0;
    for (const Permutation& p : all_avoiders(n, sigma312, ceiling)) {
      total += gamma(p, avoids_213);
      count += 1;
    }
    Rat mean(total, count);
    mean.canonicalize();
    if (expected_gamma(n) != mean)
      mismatch("mean gamma vs census at n=" + std::to_string(n));
  }
  return "table-driven expectation equals the exhaustive mean";
}

std::string check_h_sandwich(int) {
  // Rational partial sums; the neglected tail is far below the margins.
  const int terms = 120;
  Rat h = 0;
  for (int i = 1; i <= terms; ++i) {
    Rat t(catalan(i), factorial(i - 1));
    t.canonicalize();
    h += t;
  }
  for (int n = 10; n <= 40; ++n) {
    Rat low_sum = 0, high_sum = 0;
    for (int i = 1; i <= n - 1; ++i) {
      const Int num = catalan(i) * catalan(n - i - 1);
      const Int den = factorial(i - 1) * factorial(n - i - 1);
      Rat t(num, den);
      t.canonicalize();
      if (i <= n - 4) low_sum += t;
      else high_sum += t;
    }
    const Int sc = 2 * factorial(n - 2);
    Rat scale(sc);
    Rat lower = scale * (h - low_sum);
    Rat upper = scale * (h + high_sum);
    Rat exact(not_av_213_2_count(n));
    if (!(lower <= exact && exact <= upper))
      mismatch("sandwich fails at n=" + std::to_string(n));
  }
  return "closed form sits inside the two-sided bound for n = 10..40";
}

std::string check_prob_forms(int ceiling) {
  static const Permutation sigma213 = Permutation::parse("2 1 3");
  for (int n = 3; n <= std::min(ceiling, 7); ++n) {
    Int brute = 0;
    for (const Permutation& p : all_perms(n, ceiling)) {
      if (!contains_pattern(p, sigma213)) continue;
      if (!contains_pattern(sub_permutation(p, 2).pattern, sigma213)) brute += 1;
    }
    Rat want(brute, factorial(n));
    want.canonicalize();
    const double got = prob_not_213_2_exact(n).value;
    if (std::abs(got - to_double(want)) > 1e-12)
      mismatch("exact probability at n=" + std::to_string(n));
  }
  const AvoidanceSequence seq =
      AvoidanceSequence::from_oracle(sigma213, std::min(ceiling, 8), ceiling);
  for (int n : {20, 30, 50}) {
    for (int k = 2; k <= 10; ++k) {
      const ProbEstimate e = prob_not_avsk(seq, n, k, 8);
      const double via_w = e.w_value * k * (k - 1.0) / (double(n) * (n - 1.0));
      if (std::abs(e.value - via_w) > 1e-12)
        mismatch("weight identity at n=" + std::to_string(n) +
                 " k=" + std::to_string(k));
    }
    if (prob_not_avsk(seq, n, 1, 8).value != 0.0)
      mismatch("k=1 must be exactly zero");
  }
  return "exact form matches census; weight identity holds on the grid";
}

std::string check_asymptotics(int) {
  for (int j = 1; j <= 12; ++j) {
    const AsymptoticParams p = dominant_root(RadicandFamily::pj, j);
    if (!(p.root > make_real(0.25) && p.root < make_real(0.4)))
      mismatch("root bracket at j=" + std::to_string(j));
    if (!(p.residual < make_real(1e-12)))
      mismatch("residual at j=" + std::to_string(j));
  }
  for (int m = 1; m <= 6; ++m) {
    const AsymptoticParams p = dominant_root(RadicandFamily::lj_complement, m);
    if (!(p.root > make_real(0.25) && p.root < make_real(0.4)))
      mismatch("root bracket at m=" + std::to_string(m));
    if (!(p.residual < make_real(1e-12)))
      mismatch("residual at m=" + std::to_string(m));
  }
  for (int j = 5; j <= 20; ++j) {
    const AsymptoticParams p = dominant_root(RadicandFamily::pj, j);
    Real eps(0, real_precision_bits);
    eps = Int(1) << (j + 4);
    eps = make_real(1) / eps;  // 2^{-(j+4)}, the leading root offset
    const Real dev = abs(p.root - (make_real(0.25) + eps));
    if (!(dev < eps / 2))
      mismatch("quarter-point decay at j=" + std::to_string(j));
  }
  try {
    dominant_root(RadicandFamily::lj_complement, 0);
    mismatch("degenerate m=0 radicand must fail");
  } catch (const numeric_failure&) {
  }
  {
    const int n = 200;
    const CoefficientTable t = pj_coefficients_linear(1, n);
    Real exact(0, real_precision_bits);
    exact = t.coeff[static_cast<std::size_t>(n)];
    const Real est = asymptotic_coefficient(RadicandFamily::pj, 1, n);
    const Real rel = abs(est - exact) / exact;
    if (!(rel < make_real(0.05)))
      mismatch("growth estimate off by more than 5% at n=200");
  }
  return "roots bracketed with tiny residuals; estimate within 5% at n=200";
}

std::string check_montecarlo(int ceiling) {
  static const Permutation sigma213 = Permutation::parse("2 1 3");
  const int n = std::min(ceiling, 6);
  if (n < 3) return "skipped: ceiling below 3";
  Int brute = 0;
  for (const Permutation& p : all_perms(n, ceiling)) {
    if (!contains_pattern(p, sigma213)) continue;
    if (!contains_pattern(sub_permutation(p, 2).pattern, sigma213)) brute += 1;
  }
  Rat want(brute, factorial(n));
  want.canonicalize();
  const double exact = to_double(want);
  McConfig cfg;
  cfg.n = n;
  cfg.pattern = sigma213;
  cfg.k = 2;
  cfg.samples = 20000;
  cfg.seed = 20240801;
  cfg.workers = 1;
  const McEstimate one = estimate_not_avsk(cfg);
  cfg.workers = 3;
  const McEstimate three = estimate_not_avsk(cfg);
  if (one.estimate != three.estimate || one.capped != three.capped)
    mismatch("worker count changed the tally");
  const double se = std::max(one.std_error, 1e-6);
  if (std::abs(one.estimate - exact) > 4 * se)
    mismatch("estimate more than 4 standard errors from the census value");
  cfg.k = 1;
  cfg.workers = 2;
  if (estimate_not_avsk(cfg).estimate != 0.0)
    mismatch("k=1 must never record a hit");
  return "deterministic across workers and within 4 SE of the census";
}

} // namespace

OracleReport run_count_checks(int ceiling) {
  Checker c{{}, ceiling};
  if (ceiling <= 0) return c.report;
  c.run("pj-tables", [&] { return check_pj_tables(c.ceiling); });
  c.run("lj-tables", [&] { return check_lj_tables(c.ceiling); });
  c.run("path-agreement", [&] { return check_path_agreement(c.ceiling); });
  c.run("m2-split", [&] { return check_m2_split(c.ceiling); });
  c.run("not-av-213-2", [&] { return check_not_av_213_2(c.ceiling); });
  return c.report;
}

OracleReport run_oracle_suite(int ceiling) {
  Checker c{{}, ceiling};
  if (ceiling <= 0) return c.report;
  c.run("phi-bijection", [&] { return check_phi_bijection(c.ceiling); });
  c.run("phi-sub-permutations",
        [&] { return check_phi_sub_permutations(c.ceiling); });
  c.run("psi-bijection", [&] { return check_psi_bijection(c.ceiling); });
  c.run("psi-inverse-domain",
        [&] { return check_psi_inverse_domain(c.ceiling); });
  c.run("caterpillar-census",
        [&] { return check_caterpillar_census(c.ceiling); });
  c.run("strict-binary-census",
        [&] { return check_strict_binary_census(c.ceiling); });
  c.run("gamma-tree-correspondence",
        [&] { return check_gamma_tree_correspondence(c.ceiling); });
  c.run("pattern-scan", [&] { return check_pattern_scan(c.ceiling); });
  c.run("subperm-windows", [&] { return check_subperm_windows(c.ceiling); });
  c.run("two-line-rule", [&] { return check_two_line_rule(c.ceiling); });
  c.run("gamma-u-counts", [&] { return check_gamma_u_counts(c.ceiling); });
  c.run("dyck-counts", [&] { return check_dyck_counts(c.ceiling); });
  for (const auto& counted : run_count_checks(ceiling).checks)
    c.report.checks.push_back(counted);
  c.run("size-law", [&] { return check_size_law(c.ceiling); });
  c.run("avoidance-sequences",
        [&] { return check_avoidance_sequences(c.ceiling); });
  c.run("expected-gamma", [&] { return check_expected_gamma(c.ceiling); });
  c.run("h-sandwich", [&] { return check_h_sandwich(c.ceiling); });
  c.run("prob-forms", [&] { return check_prob_forms(c.ceiling); });
  c.run("asymptotics", [&] { return check_asymptotics(c.ceiling); });
  c.run("montecarlo", [&] { return check_montecarlo(c.ceiling); });
  return c.report;
}

} // namespace permsub
