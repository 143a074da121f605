#include "permsub/enumerate.hpp"

#include <cstdlib>

#include "permsub/errors.hpp"

namespace permsub {

int default_oracle_ceiling() {
  if (const char* env = std::getenv("PERMSUB_ORACLE_CEILING")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 11;
}

ClassStream::ClassStream(int n, std::optional<Permutation> avoided, int ceiling)
    : n_(n), avoided_(std::move(avoided)) {
  if (n < 0) throw invalid_input("enumerate: negative size");
  if (n > ceiling) throw resource_limit("enumerate: size above oracle ceiling");
  if (avoided_ && avoided_->size() == 0)
    throw invalid_input("enumerate: empty avoided pattern");
  used_.assign(static_cast<std::size_t>(n) + 1, false);
  prefix_.reserve(static_cast<std::size_t>(n));
  cursor_.assign(1, 1);
}

// Pushes candidates depth-first until the prefix reaches full length;
// cursor_ holds, per depth, the next value to try there.
bool ClassStream::descend() {
  while (true) {
    const int depth = static_cast<int>(prefix_.size());
    if (depth == n_) return true;
    int cand = cursor_.back();
    bool pushed = false;
    for (; cand <= n_; ++cand) {
      if (used_[static_cast<std::size_t>(cand)]) continue;
      prefix_.push_back(cand);
      if (avoided_ &&
          contains_pattern(standardize(prefix_), *avoided_)) {
        prefix_.pop_back();
        continue;  // every extension of this prefix also contains it
      }
      used_[static_cast<std::size_t>(cand)] = true;
      cursor_.back() = cand + 1;
      cursor_.push_back(1);
      pushed = true;
      break;
    }
    if (pushed) continue;
    // Exhausted this depth; backtrack.
    cursor_.pop_back();
    if (prefix_.empty()) return false;
    used_[static_cast<std::size_t>(prefix_.back())] = false;
    prefix_.pop_back();
  }
}

bool ClassStream::next(Permutation& out) {
  if (done_) return false;
  if (n_ == 0) {
    done_ = true;
    if (!emitted_empty_) {
      emitted_empty_ = true;
      out = Permutation();
      return true;
    }
    return false;
  }
  if (!prefix_.empty()) {
    // Pop the previously emitted leaf so the walk resumes past it.
    used_[static_cast<std::size_t>(prefix_.back())] = false;
    prefix_.pop_back();
    cursor_.pop_back();
  }
  if (!descend()) {
    done_ = true;
    return false;
  }
  out = Permutation(prefix_);
  return true;
}

void enumerate_class(int n, const std::optional<Permutation>& avoided,
                     const std::function<bool(const Permutation&)>& fn,
                     int ceiling) {
  ClassStream stream(n, avoided, ceiling);
  Permutation p;
  while (stream.next(p))
    if (!fn(p)) return;
}

Int count_class(int n, const std::optional<Permutation>& avoided, int ceiling) {
  Int total = 0;
  enumerate_class(
      n, avoided,
      [&](const Permutation&) {
        ++total;
        return true;
      },
      ceiling);
  return total;
}

} // namespace permsub
