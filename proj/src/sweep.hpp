#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "report.hpp"

namespace kellymod {

// Distinct words below `bound`, sorted; the whole range when it fits the cap.
inline std::vector<uint64_t> sample_or_enumerate(uint64_t bound, uint64_t cap, uint64_t seed, bool& exhaustive) {
  std::vector<uint64_t> out;
  if (bound <= cap) {
    exhaustive = true;
    out.reserve(bound);
    for (uint64_t x = 0; x < bound; ++x) out.push_back(x);
    return out;
  }
  exhaustive = false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint64_t> dist(0, bound - 1);
  out.reserve(cap);
  for (uint64_t i = 0; i < cap; ++i) out.push_back(dist(rng));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Same, honoring a forced route. Forced exhaustive sweeps refuse to blow up.
inline std::vector<uint64_t> choose_words(uint64_t bound, const VerifyOptions& opts, bool& exhaustive) {
  if (opts.forced_route == Route::Exhaustive) {
    if (bound > (uint64_t{1} << 20))
      throw std::length_error("exhaustive sweep over more than 2^20 instances refused");
    exhaustive = true;
    std::vector<uint64_t> out;
    out.reserve(bound);
    for (uint64_t x = 0; x < bound; ++x) out.push_back(x);
    return out;
  }
  if (opts.forced_route == Route::Sampled)
    return sample_or_enumerate(bound, std::min(opts.sample_cap, bound / 2 + 1), opts.seed, exhaustive);
  return sample_or_enumerate(bound, opts.sample_cap, opts.seed, exhaustive);
}

inline void sorted_insert(std::vector<uint64_t>& words, uint64_t w) {
  auto it = std::lower_bound(words.begin(), words.end(), w);
  if (it == words.end() || *it != w) words.insert(it, w);
}

inline std::string bytes_key(const std::vector<uint8_t>& v) {
  return std::string(reinterpret_cast<const char*>(v.data()), v.size());
}

}  // namespace kellymod
