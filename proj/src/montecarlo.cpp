#include "permsub/montecarlo.hpp"

#include <cmath>

#include "permsub/errors.hpp"
#include "permsub/subperm.hpp"

namespace permsub {

namespace {

std::uint64_t splitmix_step(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t mix(std::uint64_t acc, std::uint64_t value) {
  std::uint64_t state = acc ^ (value + 0x9E3779B97F4A7C15ull);
  return splitmix_step(state);
}

std::uint64_t fingerprint(const Permutation& p) {
  std::uint64_t fp = static_cast<std::uint64_t>(p.size());
  for (int v : p.entries()) fp = mix(fp, static_cast<std::uint64_t>(v));
  return fp;
}

std::uint64_t rotl(std::uint64_t x, int r) {
  return (x << r) | (x >> (64 - r));
}

} // namespace

Rng::Rng(std::uint64_t seed) {
  for (auto& word : s_) word = splitmix_step(seed);
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint64_t Rng::bounded(std::uint64_t bound) {
  if (bound == 0) throw invalid_input("bounded: bound must be positive");
  // Rejection below the largest multiple of bound keeps the draw exact.
  const std::uint64_t threshold = (-bound) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

Permutation random_permutation(int n, Rng& rng) {
  if (n < 0) throw invalid_input("random_permutation: negative size");
  std::vector<int> entries(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) entries[static_cast<std::size_t>(i)] = i + 1;
  for (int i = n - 1; i >= 1; --i) {
    const auto j = static_cast<std::size_t>(
        rng.bounded(static_cast<std::uint64_t>(i) + 1));
    std::swap(entries[static_cast<std::size_t>(i)], entries[j]);
  }
  return Permutation(std::move(entries));
}

Rng sample_stream(const McConfig& cfg, long sample_index) {
  std::uint64_t z = cfg.seed;
  z = mix(z, static_cast<std::uint64_t>(cfg.n));
  z = mix(z, static_cast<std::uint64_t>(cfg.k));
  z = mix(z, fingerprint(cfg.pattern));
  z = mix(z, static_cast<std::uint64_t>(sample_index));
  return Rng(z);
}

McEstimate estimate_not_avsk(const McConfig& cfg) {
  if (cfg.n < 1 || cfg.k < 1 || cfg.k > cfg.n)
    throw invalid_input("estimate_not_avsk: need 1 <= k <= n");
  if (cfg.pattern.empty())
    throw invalid_input("estimate_not_avsk: empty pattern");
  if (cfg.samples < 1)
    throw invalid_input("estimate_not_avsk: samples must be >= 1");
  if (cfg.workers < 1)
    throw invalid_input("estimate_not_avsk: workers must be >= 1");
  if (cfg.node_cap < 1)
    throw invalid_input("estimate_not_avsk: node_cap must be >= 1");
  long hits = 0;
  long capped = 0;
  // Per-sample substreams make the tally a plain sum over sample indices,
  // so any worker count produces identical counts.
#pragma omp parallel for num_threads(cfg.workers) reduction(+ : hits, capped) \
    schedule(static)
  for (long i = 0; i < cfg.samples; ++i) {
    Rng rng = sample_stream(cfg, i);
    const Permutation pi = random_permutation(cfg.n, rng);
    const Permutation g = sub_permutation(pi, cfg.k).pattern;
    const MatchResult in_sub = contains_pattern_capped(g, cfg.pattern, cfg.node_cap);
    if (in_sub == MatchResult::capped) {
      ++capped;
      continue;
    }
    if (in_sub == MatchResult::present) continue;
    const MatchResult in_host =
        contains_pattern_capped(pi, cfg.pattern, cfg.node_cap);
    if (in_host == MatchResult::capped) {
      ++capped;
      continue;
    }
    if (in_host == MatchResult::present) ++hits;
  }
  const long effective = cfg.samples - capped;
  if (effective == 0)
    throw numeric_failure("estimate_not_avsk: every sample hit the node cap");
  McEstimate out;
  out.n = cfg.n;
  out.k = cfg.k;
  out.samples = cfg.samples;
  out.capped = capped;
  out.seed = cfg.seed;
  out.estimate = static_cast<double>(hits) / static_cast<double>(effective);
  out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) /
                            static_cast<double>(effective));
  return out;
}

std::vector<McEstimate> sweep_k(const McConfig& cfg, int k_from, int k_to) {
  if (k_from < 1 || k_from > k_to || k_to > cfg.n)
    throw invalid_input("sweep_k: need 1 <= k_from <= k_to <= n");
  std::vector<McEstimate> out;
  for (int k = k_from; k <= k_to; ++k) {
    McConfig c = cfg;
    c.k = k;
    out.push_back(estimate_not_avsk(c));
  }
  return out;
}

std::vector<McEstimate> sweep_n(const McConfig& cfg, int n_from, int n_to) {
  if (n_from < cfg.k || n_from > n_to)
    throw invalid_input("sweep_n: need k <= n_from <= n_to");
  std::vector<McEstimate> out;
  for (int n = n_from; n <= n_to; ++n) {
    McConfig c = cfg;
    c.n = n;
    out.push_back(estimate_not_avsk(c));
  }
  return out;
}

} // namespace permsub
