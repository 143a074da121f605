#pragma once

#include <string>
#include <vector>

namespace permsub {

// A permutation of {1..n} in one-line notation. Immutable after
// construction; n = 0 is the empty permutation.
class Permutation {
public:
  Permutation() = default;
  // Validates that entries is a rearrangement of {1..n}.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);
  static Permutation decreasing(int n);
  // Whitespace-separated ranks, e.g. "4 5 3 1 2 6 8 7".
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  // 1-based position -> rank.
  int operator[](int pos) const { return entries_[pos - 1]; }
  // 1-based position of a rank.
  int position_of(int value) const;
  const std::vector<int>& entries() const { return entries_; }

  std::string str() const;

  bool operator==(const Permutation&) const = default;
  // Lexicographic on the one-line word.
  bool operator<(const Permutation& other) const { return entries_ < other.entries_; }

private:
  std::vector<int> entries_;
};

// Order-isomorphic image of a word of pairwise distinct integers onto
// {1..len}. The empty word maps to the empty permutation.
Permutation standardize(const std::vector<int>& word);

// True iff some subsequence of text standardizes to pattern. Patterns of
// length <= 3 use direct quadratic scans; longer patterns use backtracking
// with remaining-length and value-interval pruning.
bool contains_pattern(const Permutation& text, const Permutation& pattern);

inline bool avoids(const Permutation& text, const Permutation& pattern) {
  return !contains_pattern(text, pattern);
}

bool is_increasing(const Permutation& p);
bool is_decreasing(const Permutation& p);
// p_1 > p_2 < p_3 > ...; sizes 0 and 1 count as alternating.
bool is_down_up_alternating(const Permutation& p);

} // namespace permsub
