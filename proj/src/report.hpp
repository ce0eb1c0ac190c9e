#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace kellymod {

using Json = nlohmann::ordered_json;

enum class Route { Kernel, Exhaustive, Sampled, Constructed };
const char* route_name(Route r);

inline constexpr uint64_t kDefaultSeed = 20240901;

// One verification or computation result. Counterexample list empty iff the
// verdict is pass; the seed is present exactly for sampled runs.
struct Report {
  std::string command;
  Json params = Json::object();
  bool pass = true;
  Route route = Route::Exhaustive;
  std::map<std::string, int64_t> counters;
  std::vector<Json> counterexamples;
  std::optional<uint64_t> seed;
  int64_t ms = 0;

  static constexpr size_t kCounterexampleCap = 10;

  void fail(Json counterexample);
  void bump(const std::string& key, int64_t by = 1) { counters[key] += by; }
  void declare_counters(std::initializer_list<const char*> keys) {
    for (const char* k : keys) counters[k];
  }

  // Timings vary run to run, so machine output pins ms to 0; the measured
  // value appears only in the human rendering.
  Json to_json(bool fixed_ms = true) const;
  std::string human() const;
};

struct VerifyOptions {
  std::optional<Route> forced_route;
  uint64_t seed = kDefaultSeed;
  unsigned threads = 0;        // 0 -> available parallelism
  uint64_t sample_cap = 4096;  // 2^12 families or structures per side
};

unsigned effective_threads(unsigned requested);

// Deterministic map-reduce over [0, n): chunks are merged in index order, so
// the result does not depend on the worker count.
template <class Acc, class PerChunk, class Merge>
Acc parallel_reduce(size_t n, unsigned threads, Acc init, PerChunk per_chunk, Merge merge);

}  // namespace kellymod

#include <future>

namespace kellymod {

template <class Acc, class PerChunk, class Merge>
Acc parallel_reduce(size_t n, unsigned threads, Acc init, PerChunk per_chunk, Merge merge) {
  threads = effective_threads(threads);
  const size_t chunks = std::min<size_t>(n, threads * 4);
  if (chunks <= 1) {
    Acc acc = per_chunk(size_t{0}, n);
    merge(init, std::move(acc));
    return init;
  }
  std::vector<std::future<Acc>> futures;
  futures.reserve(chunks);
  for (size_t c = 0; c < chunks; ++c) {
    size_t begin = n * c / chunks, end = n * (c + 1) / chunks;
    futures.push_back(std::async(std::launch::async, [=] { return per_chunk(begin, end); }));
  }
  for (auto& f : futures) merge(init, f.get());
  return init;
}

}  // namespace kellymod
