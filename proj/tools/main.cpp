// kellymod CLI: rank / kernel / verify / suite over the shared-library C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "kellymod.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { km_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

int status_exit_code(km_status st) {
  switch (st) {
    case KM_OK: return kExitPass;
    case KM_ERR_RESOURCE: return kExitResource;
    default: return kExitUsage;
  }
}

int report_exit_code(const Json& report) {
  return report.at("verdict").get<std::string>() == "pass" ? kExitPass : kExitCounterexample;
}

void print_report_human(const Json& report) {
  std::cout << report.at("command").get<std::string>() << ": "
            << (report.at("verdict").get<std::string>() == "pass" ? "PASS" : "FAIL") << "  [route "
            << report.at("route").get<std::string>() << "]\n";
  if (!report.at("params").empty()) std::cout << "  params: " << report.at("params").dump() << "\n";
  for (const auto& [key, value] : report.at("counters").items())
    std::cout << "  " << key << ": " << value.dump() << "\n";
  if (!report.at("seed").is_null()) std::cout << "  seed: " << report.at("seed").dump() << "\n";
  for (const auto& ce : report.at("counterexamples")) std::cout << "  counterexample: " << ce.dump() << "\n";
}

int emit(const std::string& json_text, bool json_mode, const std::string& extra_human = "") {
  Json report = Json::parse(json_text);
  if (json_mode) {
    std::cout << json_text << "\n";
  } else {
    print_report_human(report);
    if (!extra_human.empty()) std::cout << extra_human;
  }
  return report_exit_code(report);
}

int usage_error(km_status st) {
  std::cerr << "error: " << km_last_error() << "\n";
  return status_exit_code(st);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact inclusion-matrix ranks, kernels, and reconstruction checks"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit the machine-readable report");

  unsigned v = 0, t = 0, k = 0, p = 0, r = 0, threads = 0;
  uint64_t seed = 0, sample_cap = 0;
  std::string route, graph_path, graph2_path, tournament_path, tournament2_path;

  auto* rank = app.add_subcommand("rank", "Wilson formula vs elimination vs rational rank of W[t,k]");
  rank->add_option("--v", v, "ground-set size")->required();
  rank->add_option("--t", t, "row subset size")->required();
  rank->add_option("--k", k, "column subset size")->required();
  rank->add_option("--p", p, "prime modulus (omit for rational rank only)");

  auto* kernel = app.add_subcommand("kernel", "left kernel of W[t,k] mod p with the digit prediction");
  kernel->add_option("--v", v, "ground-set size")->required();
  kernel->add_option("--t", t, "row subset size")->required();
  kernel->add_option("--k", k, "column subset size")->required();
  kernel->add_option("--p", p, "prime modulus")->required();

  auto* verify = app.add_subcommand("verify", "run a catalogued theorem check");
  std::string id;
  verify->add_option("id", id, "theorem id (see --catalogue)")->required();
  verify->add_option("--v", v, "ground-set / vertex count");
  verify->add_option("--t", t, "member subset size");
  verify->add_option("--k", k, "window subset size");
  verify->add_option("--p", p, "prime modulus");
  verify->add_option("--r", r, "window growth t+r");
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--route", route, "force a route: exhaustive|sampled|kernel");
  verify->add_option("--threads", threads, "worker threads (default: available parallelism)");
  verify->add_option("--sample-cap", sample_cap, "instances per side before sampling kicks in");
  verify->add_option("--graph", graph_path, "graph file for instance checks");
  verify->add_option("--graph2", graph2_path, "second graph file");
  verify->add_option("--tournament", tournament_path, "tournament file for instance checks");
  verify->add_option("--tournament2", tournament2_path, "second tournament file");

  auto* catalogue = app.add_subcommand("catalogue", "list the theorem ids verify accepts");

  auto* suite = app.add_subcommand("suite", "run the full verification grid");
  std::string profile = "quick";
  suite->add_option("--profile", profile, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  suite->add_option("--seed", seed, "sampling seed");
  suite->add_option("--threads", threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? kExitPass : kExitUsage;
  }

  CLI::App* active = app.get_subcommands().front();
  auto given = [&](const std::string& name) {
    const CLI::Option* o = active->get_option_no_throw(name);
    return o && o->count() > 0;
  };
  Json options = Json::object();
  if (given("--seed")) options["seed"] = seed;
  if (given("--threads")) options["threads"] = threads;
  if (given("--sample-cap")) options["sample_cap"] = sample_cap;
  if (!route.empty()) options["route"] = route;
  const std::string options_text = options.dump();

  if (rank->parsed()) {
    OwnedString out;
    km_status st = km_cmd_rank(v, t, k, p, &out.ptr);
    if (st != KM_OK) return usage_error(st);
    return emit(out.str(), json_mode);
  }

  if (kernel->parsed()) {
    OwnedString out, basis;
    km_status st = km_cmd_kernel(v, t, k, p, &out.ptr, &basis.ptr);
    if (st != KM_OK) return usage_error(st);
    std::string extra;
    if (!basis.str().empty()) extra = "  basis rows (colex coordinates):\n" + basis.str();
    return emit(out.str(), json_mode, extra);
  }

  if (catalogue->parsed()) {
    OwnedString out;
    km_status st = km_catalogue(&out.ptr);
    if (st != KM_OK) return usage_error(st);
    std::cout << out.str();
    return kExitPass;
  }

  if (verify->parsed()) {
    Json params = Json::object();
    if (verify->count("--v")) params["v"] = v;
    if (verify->count("--t")) params["t"] = t;
    if (verify->count("--k")) params["k"] = k;
    if (verify->count("--p")) params["p"] = p;
    if (verify->count("--r")) params["r"] = r;
    try {
      if (!graph_path.empty()) params["graph"] = read_file(graph_path);
      if (!graph2_path.empty()) params["graph2"] = read_file(graph2_path);
      if (!tournament_path.empty()) params["tournament"] = read_file(tournament_path);
      if (!tournament2_path.empty()) params["tournament2"] = read_file(tournament2_path);
    } catch (const CLI::ValidationError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    OwnedString out;
    km_status st = km_cmd_verify(id.c_str(), params.dump().c_str(), options_text.c_str(), &out.ptr);
    if (st != KM_OK) return usage_error(st);
    return emit(out.str(), json_mode);
  }

  if (suite->parsed()) {
    OwnedString out, subs;
    km_status st = km_cmd_suite(profile.c_str(), options_text.c_str(), &out.ptr, json_mode ? nullptr : &subs.ptr);
    if (st != KM_OK) return usage_error(st);
    if (json_mode) {
      std::cout << out.str() << "\n";
    } else {
      Json sub_reports = Json::parse(subs.str());
      for (const auto& sub : sub_reports) {
        std::cout << (sub.at("verdict").get<std::string>() == "pass" ? "PASS " : "FAIL ")
                  << sub.at("command").get<std::string>();
        if (!sub.at("params").empty()) std::cout << "  " << sub.at("params").dump();
        std::cout << "\n";
      }
      Json aggregate = Json::parse(out.str());
      for (const auto& [key, value] : aggregate.at("counters").items())
        std::cout << key << ": " << value.dump() << "\n";
      for (const auto& ce : aggregate.at("counterexamples")) std::cout << "failed: " << ce.dump() << "\n";
      std::cout << "suite: " << (aggregate.at("verdict").get<std::string>() == "pass" ? "PASS" : "FAIL") << "\n";
    }
    return report_exit_code(Json::parse(out.str()));
  }

  return kExitUsage;
}
