#include "permsub/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

#include "permsub/errors.hpp"
#include "permsub/montecarlo.hpp"

namespace permsub {

namespace {

void validate_entries(const std::vector<int>& entries) {
  const int n = static_cast<int>(entries.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : entries) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw invalid_input("permutation entries must rearrange 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

} // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  validate_entries(entries_);
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw invalid_input("identity: negative size");
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::decreasing(int n) {
  if (n < 0) throw invalid_input("decreasing: negative size");
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(e));
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> e;
  const bool has_space =
      text.find_first_of(" \t\n\r") != std::string::npos;
  if (!has_space && text.size() > 1) {
    // Compact digit form ("45312687"); the spaced form is canonical.
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw invalid_input("cannot parse permutation: " + text);
      e.push_back(c - '0');
    }
  } else {
    std::istringstream in(text);
    int v = 0;
    while (in >> v) e.push_back(v);
    if (!in.eof())
      throw invalid_input("cannot parse permutation: " + text);
  }
  return Permutation(std::move(e));
}

int Permutation::position_of(int value) const {
  for (int i = 0; i < size(); ++i)
    if (entries_[static_cast<std::size_t>(i)] == value) return i + 1;
  throw invalid_input("rank not present");
}

std::string Permutation::str() const {
  std::string s;
  for (int i = 0; i < size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(entries_[static_cast<std::size_t>(i)]);
  }
  return s;
}

Permutation standardize(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return word[static_cast<std::size_t>(a)] < word[static_cast<std::size_t>(b)];
  });
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int rank = 1; rank <= n; ++rank) {
    const int idx = order[static_cast<std::size_t>(rank - 1)];
    if (rank > 1) {
      const int prev = order[static_cast<std::size_t>(rank - 2)];
      if (word[static_cast<std::size_t>(prev)] == word[static_cast<std::size_t>(idx)])
        throw invalid_input("standardize: duplicate entries");
    }
    out[static_cast<std::size_t>(idx)] = rank;
  }
  return Permutation(std::move(out));
}

namespace {

// Direct scans for the six length-3 patterns plus the monotone pairs;
// each is O(n^2) or better and never caps.
bool scan_12(const std::vector<int>& t) {
  int mn = std::numeric_limits<int>::max();
  for (int v : t) {
    if (v > mn) return true;
    mn = std::min(mn, v);
  }
  return false;
}

bool scan_21(const std::vector<int>& t) {
  int mx = std::numeric_limits<int>::min();
  for (int v : t) {
    if (v < mx) return true;
    mx = std::max(mx, v);
  }
  return false;
}

bool scan_123(const std::vector<int>& t) {
  const int n = static_cast<int>(t.size());
  if (n < 3) return false;
  std::vector<int> sufmax(static_cast<std::size_t>(n) + 1,
                          std::numeric_limits<int>::min());
  for (int i = n - 1; i >= 0; --i)
    sufmax[static_cast<std::size_t>(i)] =
        std::max(sufmax[static_cast<std::size_t>(i) + 1],
                 t[static_cast<std::size_t>(i)]);
  int prefmin = std::numeric_limits<int>::max();
  for (int j = 0; j < n; ++j) {
    const int v = t[static_cast<std::size_t>(j)];
    if (prefmin < v && v < sufmax[static_cast<std::size_t>(j) + 1]) return true;
    prefmin = std::min(prefmin, v);
  }
  return false;
}

bool scan_321(const std::vector<int>& t) {
  const int n = static_cast<int>(t.size());
  if (n < 3) return false;
  std::vector<int> sufmin(static_cast<std::size_t>(n) + 1,
                          std::numeric_limits<int>::max());
  for (int i = n - 1; i >= 0; --i)
    sufmin[static_cast<std::size_t>(i)] =
        std::min(sufmin[static_cast<std::size_t>(i) + 1],
                 t[static_cast<std::size_t>(i)]);
  int prefmax = std::numeric_limits<int>::min();
  for (int j = 0; j < n; ++j) {
    const int v = t[static_cast<std::size_t>(j)];
    if (prefmax > v && v > sufmin[static_cast<std::size_t>(j) + 1]) return true;
    prefmax = std::max(prefmax, v);
  }
  return false;
}

bool scan_132(const std::vector<int>& t) {
  const int n = static_cast<int>(t.size());
  for (int i = 0; i + 2 < n; ++i) {
    const int low = t[static_cast<std::size_t>(i)];
    int curmax = std::numeric_limits<int>::min();
    for (int k = i + 1; k < n; ++k) {
      const int v = t[static_cast<std::size_t>(k)];
      if (v > low && curmax > v) return true;
      curmax = std::max(curmax, v);
    }
  }
  return false;
}

bool scan_213(const std::vector<int>& t) {
  const int n = static_cast<int>(t.size());
  for (int i = 0; i + 2 < n; ++i) {
    const int mid = t[static_cast<std::size_t>(i)];
    bool seen_low = false;
    for (int k = i + 1; k < n; ++k) {
      const int v = t[static_cast<std::size_t>(k)];
      if (seen_low && v > mid) return true;
      if (v < mid) seen_low = true;
    }
  }
  return false;
}

bool scan_231(const std::vector<int>& t) {
  const int n = static_cast<int>(t.size());
  for (int i = 0; i + 2 < n; ++i) {
    const int mid = t[static_cast<std::size_t>(i)];
    bool seen_high = false;
    for (int k = i + 1; k < n; ++k) {
      const int v = t[static_cast<std::size_t>(k)];
      if (seen_high && v < mid) return true;
      if (v > mid) seen_high = true;
    }
  }
  return false;
}

bool scan_312(const std::vector<int>& t) {
  const int n = static_cast<int>(t.size());
  for (int i = 0; i + 2 < n; ++i) {
    const int high = t[static_cast<std::size_t>(i)];
    int min_below = std::numeric_limits<int>::max();
    for (int k = i + 1; k < n; ++k) {
      const int v = t[static_cast<std::size_t>(k)];
      if (v < high) {
        if (v > min_below) return true;
        min_below = std::min(min_below, v);
      }
    }
  }
  return false;
}

// Backtracking over pattern slots, left to right in both pattern and text,
// pruned by remaining length and by the value interval forced by already
// assigned slots. budget counts candidate expansions; -1 on exhaustion.
int backtrack_match(const std::vector<int>& text, const std::vector<int>& pat,
                    int slot, int start, std::vector<int>& chosen,
                    long& budget) {
  const int n = static_cast<int>(text.size());
  const int m = static_cast<int>(pat.size());
  if (slot == m) return 1;
  for (int p = start; p <= n - (m - slot); ++p) {
    if (--budget < 0) return -1;
    const int v = text[static_cast<std::size_t>(p)];
    bool ok = true;
    for (int s = 0; s < slot; ++s) {
      const bool below = pat[static_cast<std::size_t>(s)] <
                         pat[static_cast<std::size_t>(slot)];
      if (below ? (chosen[static_cast<std::size_t>(s)] >= v)
                : (chosen[static_cast<std::size_t>(s)] <= v)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen[static_cast<std::size_t>(slot)] = v;
    const int r = backtrack_match(text, pat, slot + 1, p + 1, chosen, budget);
    if (r != 0) return r;
  }
  return 0;
}

} // namespace

MatchResult contains_pattern_capped(const Permutation& text,
                                    const Permutation& pattern,
                                    long node_cap) {
  const int m = pattern.size();
  if (m == 0) throw invalid_input("empty pattern");
  const std::vector<int>& t = text.entries();
  if (text.size() < m) return MatchResult::absent;
  if (m == 1) return MatchResult::present;
  if (m == 2) {
    const bool up = pattern.entries()[0] < pattern.entries()[1];
    return (up ? scan_12(t) : scan_21(t)) ? MatchResult::present
                                          : MatchResult::absent;
  }
  if (m == 3) {
    const std::vector<int>& p = pattern.entries();
    bool found = false;
    if (p == std::vector<int>{1, 2, 3}) found = scan_123(t);
    else if (p == std::vector<int>{3, 2, 1}) found = scan_321(t);
    else if (p == std::vector<int>{1, 3, 2}) found = scan_132(t);
    else if (p == std::vector<int>{2, 1, 3}) found = scan_213(t);
    else if (p == std::vector<int>{2, 3, 1}) found = scan_231(t);
    else found = scan_312(t);
    return found ? MatchResult::present : MatchResult::absent;
  }
  std::vector<int> chosen(static_cast<std::size_t>(m));
  long budget = node_cap;
  const int r = backtrack_match(t, pattern.entries(), 0, 0, chosen, budget);
  if (r < 0) return MatchResult::capped;
  return r ? MatchResult::present : MatchResult::absent;
}

bool contains_pattern(const Permutation& text, const Permutation& pattern) {
  const MatchResult r = contains_pattern_capped(
      text, pattern, std::numeric_limits<long>::max());
  return r == MatchResult::present;
}

bool is_increasing(const Permutation& p) {
  const std::vector<int>& e = p.entries();
  for (std::size_t i = 1; i < e.size(); ++i)
    if (e[i - 1] > e[i]) return false;
  return true;
}

bool is_decreasing(const Permutation& p) {
  const std::vector<int>& e = p.entries();
  for (std::size_t i = 1; i < e.size(); ++i)
    if (e[i - 1] < e[i]) return false;
  return true;
}

bool is_down_up_alternating(const Permutation& p) {
  const std::vector<int>& e = p.entries();
  for (std::size_t i = 1; i < e.size(); ++i) {
    const bool want_down = (i % 2 == 1);
    if (want_down ? (e[i - 1] < e[i]) : (e[i - 1] > e[i])) return false;
  }
  return true;
}

} // namespace permsub
