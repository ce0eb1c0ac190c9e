#include "verify_graphs.hpp"

#include <bit>
#include <chrono>
#include <map>

#include "incidence.hpp"
#include "sweep.hpp"

namespace kellymod {

namespace {

using Clock = std::chrono::steady_clock;

int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

unsigned arg_u(const Json& params, const char* key) {
  if (!params.contains(key)) throw std::invalid_argument(std::string("missing parameter --") + key);
  return params.at(key).get<unsigned>();
}

unsigned arg_u_or(const Json& params, const char* key, unsigned dflt) {
  return params.contains(key) ? params.at(key).get<unsigned>() : dflt;
}

// The statistic family a theorem speaks about, as indicator words over the
// colex t-subset positions.
std::vector<uint64_t> family_words(const Family& f) {
  std::vector<uint64_t> out((f.positions() + 63) / 64, 0);
  for (uint64_t r = 0; r < f.positions(); ++r)
    if (f.test(r)) out[r / 64] |= uint64_t{1} << (r % 64);
  return out;
}

std::vector<uint64_t> statistic_words(const Graph& g, unsigned t) {
  if (t == 2) return std::vector<uint64_t>{g.word0()};
  if (t == 3) return family_words(g.three_homogeneous_sets());
  if (t == 4) return family_words(g.p4_sets());
  throw std::logic_error("statistic_words: unsupported statistic");
}

// Per k-subset: positions of the t-subsets it contains.
std::vector<std::vector<uint64_t>> containment_masks(unsigned v, unsigned t, unsigned k) {
  const InclusionMatrix w = build_inclusion_matrix(v, t, k);
  std::vector<std::vector<uint64_t>> out(w.cols(), std::vector<uint64_t>((w.rows() + 63) / 64, 0));
  for (size_t i = 0; i < w.rows(); ++i)
    for (size_t j = 0; j < w.cols(); ++j)
      if (w.get(i, j)) out[j][i / 64] |= uint64_t{1} << (i % 64);
  return out;
}

uint64_t masked_count(const std::vector<uint64_t>& fam, const std::vector<uint64_t>& mask) {
  uint64_t n = 0;
  for (size_t i = 0; i < mask.size(); ++i) n += static_cast<uint64_t>(std::popcount(fam[i] & mask[i]));
  return n;
}

Json graph_json(const Graph& g) { return g.serialize(); }

struct GraphTheorem {
  std::string id;
  unsigned v, k, p;  // p = 0 means the exact-count version
  unsigned t;
  // hypothesis beyond the count congruence (same 3-homogeneous sets for the
  // parity theorems); empty vector = none
  bool require_h3_equal = false;
  // stated as an equivalence: conclusion pairs must satisfy the hypothesis too
  bool iff = false;
  // conclusion on a hypothesis pair
  enum class Conclusion { EqualGraphs, EqualOrComplement, EqualOrFullEmpty, SameFamily, SameFamilyOrSwap } conclusion;
};

bool conclusion_holds(const GraphTheorem& thm, const Graph& g, const Graph& g2) {
  switch (thm.conclusion) {
    case GraphTheorem::Conclusion::EqualGraphs: return g == g2;
    case GraphTheorem::Conclusion::EqualOrComplement: return g == g2 || g == g2.complement();
    case GraphTheorem::Conclusion::EqualOrFullEmpty: {
      if (g == g2) return true;
      const uint64_t all = binomial_u64(thm.v, 2);
      return (g.edge_count() == all && g2.edge_count() == 0) || (g.edge_count() == 0 && g2.edge_count() == all);
    }
    case GraphTheorem::Conclusion::SameFamily:
      return statistic_words(g, thm.t) == statistic_words(g2, thm.t);
    case GraphTheorem::Conclusion::SameFamilyOrSwap: {
      std::vector<uint64_t> a = statistic_words(g, thm.t), b = statistic_words(g2, thm.t);
      if (a == b) return true;
      uint64_t positions = binomial_u64(thm.v, thm.t);
      for (size_t i = 0; i < a.size(); ++i) {
        uint64_t live = i + 1 < a.size() ? ~uint64_t{0}
                                         : (positions % 64 ? (uint64_t{1} << (positions % 64)) - 1 : ~uint64_t{0});
        if ((a[i] ^ b[i]) != live) return false;
      }
      return true;
    }
  }
  return false;
}

// Direct hypothesis check: counts of the statistic family agree (mod p, or
// exactly when p = 0) on every k-subset, plus the extra H3 clause if any.
bool hypothesis_holds(const GraphTheorem& thm, const Graph& g, const Graph& g2,
                      const std::vector<std::vector<uint64_t>>& masks) {
  std::vector<uint64_t> a = statistic_words(g, thm.t), b = statistic_words(g2, thm.t);
  for (const auto& m : masks) {
    uint64_t ca = masked_count(a, m), cb = masked_count(b, m);
    if (thm.p == 0 ? ca != cb : ca % thm.p != cb % thm.p) return false;
  }
  if (thm.require_h3_equal && !(g.three_homogeneous_sets() == g2.three_homogeneous_sets())) return false;
  return true;
}

std::string group_key(const GraphTheorem& thm, const Graph& g, const std::vector<std::vector<uint64_t>>& masks) {
  std::vector<uint64_t> fam = statistic_words(g, thm.t);
  std::vector<uint8_t> key;
  key.reserve(masks.size() + (thm.require_h3_equal ? fam.size() * 8 : 0));
  for (const auto& m : masks) {
    uint64_t c = masked_count(fam, m);
    if (thm.p == 0) {
      key.push_back(static_cast<uint8_t>(c & 0xff));
      key.push_back(static_cast<uint8_t>((c >> 8) & 0xff));
    } else {
      key.push_back(static_cast<uint8_t>(c % thm.p));
    }
  }
  if (thm.require_h3_equal) {
    std::vector<uint64_t> h3 = family_words(g.three_homogeneous_sets());
    for (uint64_t w : h3)
      for (int b = 0; b < 8; ++b) key.push_back(static_cast<uint8_t>(w >> (8 * b)));
  }
  return bytes_key(key);
}

// Kernel vectors of W[2,k] mod 2 as graph-edge words (GF(2) span, dim capped).
std::vector<uint64_t> gf2_kernel_span(unsigned v, unsigned k) {
  const ResidueMatrix basis = left_kernel_mod_p(build_inclusion_matrix(v, 2, k).to_residue(2));
  if (basis.rows() > 20) throw std::length_error("kernel span too large to enumerate");
  std::vector<uint64_t> gens;
  for (size_t i = 0; i < basis.rows(); ++i) {
    uint64_t w = 0;
    for (size_t j = 0; j < basis.cols(); ++j)
      if (basis.get(i, j)) w |= uint64_t{1} << j;
    gens.push_back(w);
  }
  std::vector<uint64_t> span{0};
  for (uint64_t g : gens) {
    size_t n = span.size();
    for (size_t i = 0; i < n; ++i) span.push_back(span[i] ^ g);
  }
  return span;
}

void run_pair_check(Report& rep, const GraphTheorem& thm, const Graph& g, const Graph& g2,
                    const std::vector<std::vector<uint64_t>>& masks) {
  rep.bump("pairs_examined");
  if (!hypothesis_holds(thm, g, g2, masks)) {
    rep.bump("hypothesis_misses");
    if (thm.iff && conclusion_holds(thm, g, g2))
      rep.fail({{"kind", "converse-violated"}, {"graph", graph_json(g)}, {"graph2", graph_json(g2)}});
    return;
  }
  rep.bump("hypothesis_pairs");
  if (!conclusion_holds(thm, g, g2))
    rep.fail({{"kind", "conclusion-violated"}, {"graph", graph_json(g)}, {"graph2", graph_json(g2)}});
}

Report verify_statistic_theorem(const GraphTheorem& thm, const Json& params, const VerifyOptions& opts) {
  const auto start = Clock::now();
  Report rep;
  rep.command = "verify " + thm.id;
  rep.params = params;
  rep.declare_counters({"counterexamples_total", "pairs_examined", "hypothesis_pairs", "hypothesis_misses"});
  const unsigned v = thm.v;
  if (binomial_u64(v, 2) > 63) throw std::length_error("graph sweep: v too large");
  const auto masks = containment_masks(v, thm.t, thm.k);

  if (params.contains("graph")) {
    Graph g = Graph::parse(params.at("graph").get<std::string>());
    Graph g2 = params.contains("graph2") ? Graph::parse(params.at("graph2").get<std::string>()) : g;
    if (g.vertex_count() != v || g2.vertex_count() != v)
      throw std::invalid_argument("instance vertex count differs from --v");
    rep.route = Route::Constructed;
    run_pair_check(rep, thm, g, g2, masks);
    rep.ms = ms_since(start);
    return rep;
  }

  // kernel facts: the theorem's statistic family lives on t-subsets, so its
  // congruence hypothesis is governed by the left kernel of W[t,k] mod p
  if (thm.p != 0) {
    const KernelClass predicted = kernel_class(thm.t, thm.k, thm.p);
    rep.counters["kernel_class_trivial"] = predicted.tag == KernelTag::Trivial;
    rep.counters["kernel_class_all_ones"] = predicted.tag == KernelTag::AllOnes;
    const ResidueMatrix basis = left_kernel_mod_p(build_inclusion_matrix(v, thm.t, thm.k).to_residue(thm.p));
    const uint64_t dim = basis.rows();
    rep.counters["kernel_dim"] = static_cast<int64_t>(dim);
    bool all_ones = dim == 1;
    if (dim == 1)
      for (size_t j = 0; j < basis.cols(); ++j)
        if (basis.get(0, j) != 1) all_ones = false;
    bool match = predicted.tag == KernelTag::Trivial  ? dim == 0
                 : predicted.tag == KernelTag::AllOnes ? all_ones
                                                        : (dim >= 1 && !all_ones);
    rep.counters["kernel_class_match"] = match;
    if (!match) rep.fail({{"kind", "kernel-class-mismatch"}, {"dim", dim}});
    if (opts.forced_route == Route::Kernel) {
      rep.route = Route::Kernel;
      rep.ms = ms_since(start);
      return rep;
    }
  }

  const uint64_t space = uint64_t{1} << binomial_u64(v, 2);
  bool exhaustive;
  std::vector<uint64_t> words = choose_words(space, opts, exhaustive);
  rep.route = exhaustive ? Route::Exhaustive : Route::Sampled;
  if (!exhaustive) rep.seed = opts.seed;

  if (exhaustive) {
    std::map<std::string, std::vector<uint64_t>> groups;
    for (uint64_t w : words) groups[group_key(thm, graph_from_word(v, w), masks)].push_back(w);
    rep.counters["graphs"] = static_cast<int64_t>(words.size());
    rep.counters["groups"] = static_cast<int64_t>(groups.size());
    for (const auto& [key, members] : groups)
      for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i; j < members.size(); ++j)
          run_pair_check(rep, thm, graph_from_word(v, members[i]), graph_from_word(v, members[j]), masks);
  } else {
    // seeded pool; per pool graph, examine the candidates that can satisfy
    // the hypothesis (complement closure, GF(2) kernel coset, full/empty)
    rep.counters["graphs"] = static_cast<int64_t>(words.size());
    const uint64_t all_edges = space - 1;
    std::vector<uint64_t> coset;
    if (thm.t == 2 && thm.p == 2) coset = gf2_kernel_span(v, thm.k);
    for (uint64_t w : words) {
      const Graph g = graph_from_word(v, w);
      std::vector<uint64_t> candidates{w, all_edges & ~w, 0, all_edges};
      for (uint64_t kvec : coset) candidates.push_back(w ^ kvec);
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      for (uint64_t c : candidates) run_pair_check(rep, thm, g, graph_from_word(v, c), masks);
    }
    // and the capped sample itself, grouped like the exhaustive sweep
    std::map<std::string, std::vector<uint64_t>> groups;
    for (uint64_t w : words) groups[group_key(thm, graph_from_word(v, w), masks)].push_back(w);
    rep.counters["sample_groups"] = static_cast<int64_t>(groups.size());
    for (const auto& [key, members] : groups)
      for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
          run_pair_check(rep, thm, graph_from_word(v, members[i]), graph_from_word(v, members[j]), masks);
  }
  rep.ms = ms_since(start);
  return rep;
}

Report verify_claim_bipartite(const Json& params, const VerifyOptions&) {
  const auto start = Clock::now();
  Report rep;
  rep.command = "verify claim-bipartite";
  rep.params = params;
  rep.route = Route::Kernel;
  const unsigned v = arg_u(params, "v");
  const unsigned k = arg_u_or(params, "k", 3);
  if (k % 4 != 3 || k < 3 || k + 2 > v) throw std::invalid_argument("claim-bipartite: requires k = 3 (mod 4), 3 <= k <= v-2");
  const ResidueMatrix basis = left_kernel_mod_p(build_inclusion_matrix(v, 2, k).to_residue(2));
  rep.counters["kernel_dim"] = static_cast<int64_t>(basis.rows());
  if (basis.rows() != v - 1)
    rep.fail({{"kind", "kernel-dim"}, {"expected", v - 1}, {"got", basis.rows()}});
  if (basis.rows() > 20) throw std::length_error("claim-bipartite: kernel too large to enumerate");
  std::vector<uint64_t> gens;
  for (size_t i = 0; i < basis.rows(); ++i) {
    uint64_t w = 0;
    for (size_t j = 0; j < basis.cols(); ++j)
      if (basis.get(i, j)) w |= uint64_t{1} << j;
    gens.push_back(w);
  }
  std::vector<uint64_t> span{0};
  for (uint64_t g : gens) {
    size_t n = span.size();
    for (size_t i = 0; i < n; ++i) span.push_back(span[i] ^ g);
  }
  rep.counters["kernel_vectors"] = static_cast<int64_t>(span.size());
  int64_t bipartite = 0;
  for (uint64_t w : span) {
    Graph g = graph_from_word(v, w);
    if (g.is_complete_bipartite())
      ++bipartite;
    else
      rep.fail({{"kind", "kernel-vector-not-complete-bipartite"}, {"graph", graph_json(g)}});
  }
  rep.counters["complete_bipartite"] = bipartite;
  rep.ms = ms_since(start);
  return rep;
}

Report verify_claim_clawfree(const Json& params, const VerifyOptions& opts) {
  const auto start = Clock::now();
  Report rep;
  rep.command = "verify claim-clawfree";
  rep.params = params;
  rep.declare_counters({"counterexamples_total", "pairs_examined", "hypothesis_pairs", "hypothesis_misses"});
  const unsigned v = arg_u(params, "v");
  if (v < 4 || binomial_u64(v, 2) > 63) throw std::invalid_argument("claim-clawfree: requires 4 <= v <= 11");

  if (params.contains("graph")) {
    Graph g = Graph::parse(params.at("graph").get<std::string>());
    Graph g2 = params.contains("graph2") ? Graph::parse(params.at("graph2").get<std::string>()) : g;
    rep.route = Route::Constructed;
    rep.bump("pairs_examined");
    if (!(g.three_homogeneous_sets() == g2.three_homogeneous_sets())) {
      rep.bump("hypothesis_misses");
    } else {
      rep.bump("hypothesis_pairs");
      if (!boolean_sum(g, g2).is_claw_free())
        rep.fail({{"kind", "boolean-sum-has-claw"}, {"graph", graph_json(g)}, {"graph2", graph_json(g2)}});
    }
    rep.ms = ms_since(start);
    return rep;
  }

  const uint64_t space = uint64_t{1} << binomial_u64(v, 2);
  bool exhaustive;
  std::vector<uint64_t> words = choose_words(space, opts, exhaustive);
  rep.route = exhaustive ? Route::Exhaustive : Route::Sampled;
  if (!exhaustive) {
    rep.seed = opts.seed;
    std::vector<uint64_t> extra = words;  // complements have the same 3-homogeneous sets
    for (uint64_t w : extra) sorted_insert(words, (space - 1) & ~w);
  }
  rep.counters["graphs"] = static_cast<int64_t>(words.size());
  std::map<std::string, std::vector<uint64_t>> groups;
  for (uint64_t w : words) {
    std::vector<uint64_t> h3 = family_words(graph_from_word(v, w).three_homogeneous_sets());
    std::vector<uint8_t> key;
    for (uint64_t x : h3)
      for (int b = 0; b < 8; ++b) key.push_back(static_cast<uint8_t>(x >> (8 * b)));
    groups[bytes_key(key)].push_back(w);
  }
  rep.counters["groups"] = static_cast<int64_t>(groups.size());
  for (const auto& [key, members] : groups)
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i; j < members.size(); ++j) {
        rep.bump("hypothesis_pairs");
        Graph g = graph_from_word(v, members[i]), g2 = graph_from_word(v, members[j]);
        if (!boolean_sum(g, g2).is_claw_free())
          rep.fail({{"kind", "boolean-sum-has-claw"}, {"graph", graph_json(g)}, {"graph2", graph_json(g2)}});
      }
  rep.ms = ms_since(start);
  return rep;
}

GraphTheorem make_theorem(const std::string& id, const Json& params) {
  GraphTheorem thm;
  thm.id = id;
  thm.v = arg_u(params, "v");
  thm.k = arg_u(params, "k");
  thm.p = arg_u_or(params, "p", 0);
  if (id == "thm-graph-1.4") {
    thm.p = 2;
    thm.t = 2;
    if (thm.k % 4 != 0 || thm.k < 2 || thm.k + 2 > thm.v)
      throw std::invalid_argument(id + ": requires k = 0 (mod 4), 2 <= k <= v-2");
    thm.conclusion = GraphTheorem::Conclusion::EqualOrComplement;
  } else if (id == "thm-graph-1.5") {
    thm.t = 2;
    if (thm.k < 2 || thm.k + 2 > thm.v) throw std::invalid_argument(id + ": requires 2 <= k <= v-2");
    if (thm.p == 2) {
      if (thm.k % 4 != 2) throw std::invalid_argument(id + ": p = 2 requires k = 2 (mod 4)");
      thm.conclusion = GraphTheorem::Conclusion::EqualGraphs;
    } else if (thm.p >= 3 && is_prime(thm.p)) {
      if (thm.k % thm.p == 0)
        thm.conclusion = GraphTheorem::Conclusion::EqualOrFullEmpty;
      else if (thm.k % thm.p == 1)
        throw std::invalid_argument(id + ": no case for k = 1 (mod p)");
      else
        thm.conclusion = GraphTheorem::Conclusion::EqualGraphs;
    } else {
      throw std::invalid_argument(id + ": p must be prime");
    }
  } else if (id == "thm-graph-4.1") {
    thm.t = 3;
    if (thm.k < 3 || thm.k + 3 > thm.v) throw std::invalid_argument(id + ": requires 3 <= k <= v-3");
    if (thm.p != 0) {
      bool ok = (thm.p >= 5 && is_prime(thm.p) && thm.k % thm.p != 1 && thm.k % thm.p != 2) ||
                (thm.p == 2 && thm.k % 4 == 3) || (thm.p == 3 && thm.k % 3 == 0);
      if (!ok) throw std::invalid_argument(id + ": (p, k) outside the stated cases");
    }
    thm.conclusion = GraphTheorem::Conclusion::SameFamily;
  } else if (id == "thm-graph-4.2") {
    thm.t = 4;
    if (thm.k < 4 || thm.k + 4 > thm.v) throw std::invalid_argument(id + ": requires 4 <= k <= v-4");
    thm.conclusion = GraphTheorem::Conclusion::SameFamily;
    if (thm.p != 0) {
      if (thm.p == 2 && thm.k % 8 == 0)
        thm.conclusion = GraphTheorem::Conclusion::SameFamilyOrSwap;
      else {
        bool ok = (thm.p >= 5 && is_prime(thm.p) && thm.k % thm.p != 1 && thm.k % thm.p != 2 && thm.k % thm.p != 3) ||
                  (thm.p == 2 && thm.k % 4 == 0 && thm.k % 8 != 0) ||
                  (thm.p == 3 && (thm.k - 1) % 3 == 0 && (thm.k - 1) % 9 != 0);
        if (!ok) throw std::invalid_argument(id + ": (p, k) outside the stated cases");
      }
    }
  } else if (id == "thm-graph-4.3") {
    thm.t = 2;
    thm.p = 2;
    if (thm.k % 4 != 1 || thm.k < 5 || thm.k + 2 > thm.v)
      throw std::invalid_argument(id + ": requires k = 1 (mod 4), 5 <= k <= v-2");
    thm.require_h3_equal = true;
    thm.iff = true;
    thm.conclusion = GraphTheorem::Conclusion::EqualOrComplement;
  } else if (id == "thm-graph-4.4") {
    thm.t = 2;
    thm.p = 2;
    if (thm.k % 4 != 3 || thm.k < 3 || thm.k + 2 > thm.v)
      throw std::invalid_argument(id + ": requires k = 3 (mod 4), 3 <= k <= v-2");
    thm.require_h3_equal = true;
    thm.iff = true;
    thm.conclusion = GraphTheorem::Conclusion::EqualGraphs;
  } else {
    throw std::invalid_argument("unknown graph theorem id: " + id);
  }
  return thm;
}

}  // namespace

bool is_graph_theorem(const std::string& id) {
  return id == "thm-graph-1.4" || id == "thm-graph-1.5" || id == "thm-graph-4.1" || id == "thm-graph-4.2" ||
         id == "thm-graph-4.3" || id == "thm-graph-4.4" || id == "claim-bipartite" || id == "claim-clawfree";
}

Report verify_graph_theorem(const std::string& id, const Json& params, const VerifyOptions& opts) {
  if (id == "claim-bipartite") return verify_claim_bipartite(params, opts);
  if (id == "claim-clawfree") return verify_claim_clawfree(params, opts);
  return verify_statistic_theorem(make_theorem(id, params), params, opts);
}

}  // namespace kellymod
