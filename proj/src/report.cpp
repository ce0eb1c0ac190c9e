#include "report.hpp"

#include <sstream>
#include <thread>

namespace kellymod {

const char* route_name(Route r) {
  switch (r) {
    case Route::Kernel: return "kernel";
    case Route::Exhaustive: return "exhaustive";
    case Route::Sampled: return "sampled";
    case Route::Constructed: return "constructed";
  }
  return "?";
}

void Report::fail(Json counterexample) {
  pass = false;
  bump("counterexamples_total");
  if (counterexamples.size() < kCounterexampleCap) counterexamples.push_back(std::move(counterexample));
}

Json Report::to_json(bool fixed_ms) const {
  Json j;
  j["command"] = command;
  j["params"] = params;
  j["verdict"] = pass ? "pass" : "fail";
  j["route"] = route_name(route);
  Json c = Json::object();
  for (const auto& [k, v] : counters) c[k] = v;
  j["counters"] = c;
  j["counterexamples"] = counterexamples;
  if (seed)
    j["seed"] = *seed;
  else
    j["seed"] = nullptr;
  j["ms"] = fixed_ms ? 0 : ms;
  return j;
}

std::string Report::human() const {
  std::ostringstream out;
  out << command << ": " << (pass ? "PASS" : "FAIL") << "  [route " << route_name(route) << "]\n";
  if (!params.empty()) out << "  params: " << params.dump() << "\n";
  for (const auto& [k, v] : counters) out << "  " << k << ": " << v << "\n";
  if (seed) out << "  seed: " << *seed << "\n";
  for (const Json& ce : counterexamples) out << "  counterexample: " << ce.dump() << "\n";
  out << "  ms: " << ms << "\n";
  return out.str();
}

unsigned effective_threads(unsigned requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

}  // namespace kellymod
