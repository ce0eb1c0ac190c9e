#include "suite.hpp"

#include <chrono>
#include <sstream>

#include "incidence.hpp"
#include "verify_graphs.hpp"
#include "verify_sets.hpp"
#include "verify_tournaments.hpp"

namespace kellymod {

namespace {

using Clock = std::chrono::steady_clock;

int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

}  // namespace

Report cmd_rank(unsigned v, unsigned t, unsigned k, uint32_t p) {
  const auto start = Clock::now();
  Report rep;
  rep.command = "rank";
  rep.params = {{"v", v}, {"t", t}, {"k", k}};
  if (p) rep.params["p"] = p;
  rep.route = Route::Kernel;
  if (k > v || t > k || t > v - k) throw std::invalid_argument("rank: requires t <= min(k, v-k)");
  const InclusionMatrix w = build_inclusion_matrix(v, t, k);
  const uint64_t rational = rank_rational(w.to_integer());
  rep.counters["rank_rational"] = static_cast<int64_t>(rational);
  rep.counters["full_row_rank"] = rational == w.rows();
  if (p) {
    if (!is_prime(p)) throw std::invalid_argument("rank: p must be prime");
    const uint64_t wilson = wilson_rank(v, t, k, p);
    const uint64_t elim = rank_mod_p(w.to_residue(p));
    rep.counters["rank_wilson"] = static_cast<int64_t>(wilson);
    rep.counters["rank_elimination"] = static_cast<int64_t>(elim);
    rep.counters["kernel_dim"] = static_cast<int64_t>(w.rows() - elim);
    rep.counters["agree"] = wilson == elim;
    if (wilson != elim) rep.fail({{"kind", "rank-formula-mismatch"}, {"wilson", wilson}, {"elimination", elim}});
  }
  rep.ms = ms_since(start);
  return rep;
}

KernelResult cmd_kernel(unsigned v, unsigned t, unsigned k, uint32_t p) {
  const auto start = Clock::now();
  KernelResult out;
  Report& rep = out.report;
  rep.command = "kernel";
  rep.params = {{"v", v}, {"t", t}, {"k", k}, {"p", p}};
  rep.route = Route::Kernel;
  if (k > v || t > k || t > v - k) throw std::invalid_argument("kernel: requires t <= min(k, v-k)");
  if (!is_prime(p)) throw std::invalid_argument("kernel: p must be prime");
  const InclusionMatrix w = build_inclusion_matrix(v, t, k);
  const ResidueMatrix basis = left_kernel_mod_p(w.to_residue(p));
  const KernelClass predicted = kernel_class(t, k, p);
  rep.counters["kernel_dim"] = static_cast<int64_t>(basis.rows());
  rep.counters["class_trivial"] = predicted.tag == KernelTag::Trivial;
  rep.counters["class_all_ones"] = predicted.tag == KernelTag::AllOnes;
  rep.counters["class_other"] = predicted.tag == KernelTag::Other;
  bool all_ones = basis.rows() == 1;
  if (basis.rows() == 1)
    for (size_t j = 0; j < basis.cols(); ++j)
      if (basis.get(0, j) != 1) all_ones = false;
  bool match = predicted.tag == KernelTag::Trivial   ? basis.rows() == 0
               : predicted.tag == KernelTag::AllOnes ? all_ones
                                                      : (basis.rows() >= 1 && !all_ones);
  rep.counters["class_match"] = match;
  if (t == 0) rep.counters["t_zero_extension"] = 1;  // digit conditions assume t >= 1
  if (!match)
    rep.fail({{"kind", "kernel-class-mismatch"},
              {"predicted", kernel_tag_name(predicted.tag)},
              {"dim", basis.rows()}});
  for (size_t i = 0; i < basis.rows(); ++i) {
    std::ostringstream row;
    for (size_t j = 0; j < basis.cols(); ++j) row << (j ? " " : "") << basis.get(i, j);
    out.basis_rows.push_back(row.str());
  }
  rep.ms = ms_since(start);
  return out;
}

std::vector<std::string> verify_catalogue() {
  return {"thm-main",       "lemma-pouzet",       "thm-graph-1.4",      "thm-graph-1.5", "thm-graph-4.1",
          "thm-graph-4.2",  "thm-graph-4.3",      "thm-graph-4.4",      "claim-bipartite", "claim-clawfree",
          "thm-tournament-5.1", "thm-tournament-5.2", "thm-tournament-5.3", "lemma-hypomorphe", "claim-3hyp4hyp",
          "lemma-41",       "thm-beta6"};
}

Report cmd_verify(const std::string& id, const Json& params, const VerifyOptions& opts) {
  if (id == "thm-main") {
    auto need = [&](const char* key) {
      if (!params.contains(key)) throw std::invalid_argument(std::string("missing parameter --") + key);
      return params.at(key).get<unsigned>();
    };
    return verify_main_theorem(need("v"), need("t"), need("k"), need("p"), opts);
  }
  if (id == "lemma-pouzet") {
    auto need = [&](const char* key) {
      if (!params.contains(key)) throw std::invalid_argument(std::string("missing parameter --") + key);
      return params.at(key).get<unsigned>();
    };
    return verify_pouzet_lemma(need("v"), need("t"), need("r"), opts);
  }
  if (is_graph_theorem(id)) return verify_graph_theorem(id, params, opts);
  if (is_tournament_theorem(id)) return verify_tournament_theorem(id, params, opts);
  std::ostringstream msg;
  msg << "unknown theorem id '" << id << "'; catalogue:";
  for (const std::string& known : verify_catalogue()) msg << " " << known;
  throw std::invalid_argument(msg.str());
}

namespace {

struct SuiteBuilder {
  SuiteResult result;
  const VerifyOptions& opts;
  bool quick;

  explicit SuiteBuilder(const VerifyOptions& o, bool q) : opts(o), quick(q) {}

  void criterion(int number, const std::string& name, bool pass) {
    result.aggregate.counters["criterion_" + std::to_string(number) + "_pass"] = pass;
    if (!pass) result.aggregate.fail({{"criterion", number}, {"name", name}});
  }

  Report& add(Report rep) {
    result.sub.push_back(std::move(rep));
    return result.sub.back();
  }
};

// criteria 1, 2: Wilson rank and rational rank over the whole grid
void run_rank_grids(SuiteBuilder& sb) {
  const unsigned vmax = sb.quick ? 8 : 10;
  const uint32_t primes[] = {2, 3, 5, 7};
  Report wilson_rep, rational_rep;
  wilson_rep.command = "suite wilson-rank-grid";
  wilson_rep.params = {{"vmax", vmax}};
  rational_rep.command = "suite rational-rank-grid";
  rational_rep.params = {{"vmax", vmax}};
  const auto start = Clock::now();
  struct Case {
    unsigned v, t, k;
  };
  std::vector<Case> cases;
  for (unsigned v = 0; v <= vmax; ++v)
    for (unsigned k = 0; k <= v; ++k)
      for (unsigned t = 0; t <= std::min({k, v - k, 4u}); ++t) cases.push_back({v, t, k});

  struct Acc {
    int64_t wilson_checked = 0, wilson_bad = 0, rational_checked = 0, rational_bad = 0;
    std::vector<Json> wilson_ces, rational_ces;
  };
  Acc acc = parallel_reduce(
      cases.size(), sb.opts.threads, Acc{},
      [&](size_t lo, size_t hi) {
        Acc a;
        for (size_t i = lo; i < hi; ++i) {
          const auto [v, t, k] = cases[i];
          const InclusionMatrix w = build_inclusion_matrix(v, t, k);
          for (uint32_t p : primes) {
            ++a.wilson_checked;
            if (wilson_rank(v, t, k, p) != rank_mod_p(w.to_residue(p))) {
              ++a.wilson_bad;
              a.wilson_ces.push_back({{"v", v}, {"t", t}, {"k", k}, {"p", p}});
            }
          }
          ++a.rational_checked;
          if (rank_rational(w.to_integer()) != w.rows()) {
            ++a.rational_bad;
            a.rational_ces.push_back({{"v", v}, {"t", t}, {"k", k}});
          }
        }
        return a;
      },
      [](Acc& into, Acc&& part) {
        into.wilson_checked += part.wilson_checked;
        into.wilson_bad += part.wilson_bad;
        into.rational_checked += part.rational_checked;
        into.rational_bad += part.rational_bad;
        for (auto& ce : part.wilson_ces) into.wilson_ces.push_back(std::move(ce));
        for (auto& ce : part.rational_ces) into.rational_ces.push_back(std::move(ce));
      });
  wilson_rep.counters["cases"] = acc.wilson_checked;
  for (auto& ce : acc.wilson_ces) wilson_rep.fail(std::move(ce));
  wilson_rep.ms = ms_since(start);
  rational_rep.counters["cases"] = acc.rational_checked;
  for (auto& ce : acc.rational_ces) rational_rep.fail(std::move(ce));
  rational_rep.ms = wilson_rep.ms;
  sb.criterion(1, "wilson-rank-oracle-equivalence", sb.add(std::move(wilson_rep)).pass);
  sb.criterion(2, "full-rational-rank", sb.add(std::move(rational_rep)).pass);
}

void run_snf_grid(SuiteBuilder& sb) {
  Report rep;
  rep.command = "suite diagonal-form-grid";
  const auto start = Clock::now();
  const unsigned vmax = 8;
  const size_t dim_cap = sb.quick ? 40 : 160;
  rep.params = {{"vmax", vmax}, {"dim_cap", dim_cap}};
  int64_t cases = 0, skipped = 0;
  for (unsigned v = 0; v <= vmax; ++v)
    for (unsigned k = 0; k <= v; ++k)
      for (unsigned t = 0; t <= std::min({k, v - k, 3u}); ++t) {
        const InclusionMatrix w = build_inclusion_matrix(v, t, k);
        if (w.rows() > dim_cap || w.cols() > dim_cap) {
          ++skipped;
          continue;
        }
        ++cases;
        if (!diagonal_specs_equivalent(smith_normal_form(w.to_integer()), wilson_diagonal(v, t, k)))
          rep.fail({{"v", v}, {"t", t}, {"k", k}});
      }
  rep.counters["cases"] = cases;
  rep.counters["skipped"] = skipped;
  rep.ms = ms_since(start);
  sb.criterion(3, "diagonal-form-equivalence", sb.add(std::move(rep)).pass);
}

void run_kernel_grid(SuiteBuilder& sb) {
  Report rep;
  rep.command = "suite kernel-class-grid";
  const auto start = Clock::now();
  const unsigned vmax = sb.quick ? 8 : 9;
  rep.params = {{"vmax", vmax}};
  const uint32_t primes[] = {2, 3, 5};
  int64_t cases = 0;
  for (unsigned v = 0; v <= vmax; ++v)
    for (unsigned k = 0; k <= v; ++k)
      for (unsigned t = 0; t <= std::min({k, v - k, 3u}); ++t) {
        const InclusionMatrix w = build_inclusion_matrix(v, t, k);
        for (uint32_t p : primes) {
          ++cases;
          const ResidueMatrix basis = left_kernel_mod_p(w.to_residue(p));
          bool all_ones = basis.rows() == 1;
          if (basis.rows() == 1)
            for (size_t j = 0; j < basis.cols(); ++j)
              if (basis.get(0, j) != 1) all_ones = false;
          bool match = true;
          switch (kernel_class(t, k, p).tag) {
            case KernelTag::Trivial: match = basis.rows() == 0; break;
            case KernelTag::AllOnes: match = all_ones; break;
            case KernelTag::Other: match = basis.rows() >= 1 && !all_ones; break;
          }
          // every basis vector annihilates the matrix
          for (size_t i = 0; i < basis.rows() && match; ++i)
            for (size_t c = 0; c < w.cols() && match; ++c) {
              uint64_t dot = 0;
              for (size_t r = 0; r < w.rows(); ++r) dot += uint64_t{basis.get(i, r)} * w.get(r, c);
              if (dot % p != 0) match = false;
            }
          if (!match) rep.fail({{"v", v}, {"t", t}, {"k", k}, {"p", p}});
        }
      }
  rep.counters["cases"] = cases;
  rep.ms = ms_since(start);
  sb.criterion(4, "kernel-characterization", sb.add(std::move(rep)).pass);
}

void run_kneser_grid(SuiteBuilder& sb) {
  Report rep;
  rep.command = "suite kneser-grid";
  const auto start = Clock::now();
  const unsigned vmax = sb.quick ? 8 : 10;
  rep.params = {{"vmax", vmax}};
  int64_t cases = 0;
  for (unsigned v = 0; v <= vmax; ++v)
    for (unsigned t = 0; t <= std::min(v / 2, 3u); ++t) {
      ++cases;
      const IntegerMatrix a = kneser_adjacency(t, v);
      if (rank_rational(a) != a.rows()) rep.fail({{"t", t}, {"v", v}});
    }
  rep.counters["cases"] = cases;
  rep.ms = ms_since(start);
  sb.criterion(5, "kneser-nonsingularity", sb.add(std::move(rep)).pass);
}

}  // namespace

SuiteResult cmd_suite(const std::string& profile, const VerifyOptions& opts) {
  if (profile != "quick" && profile != "full") throw std::invalid_argument("suite: profile must be quick or full");
  const bool quick = profile == "quick";
  SuiteBuilder sb(opts, quick);
  const auto start = Clock::now();
  sb.result.aggregate.command = "suite";
  sb.result.aggregate.params = {{"profile", profile}};
  sb.result.aggregate.route = Route::Exhaustive;

  run_rank_grids(sb);
  run_snf_grid(sb);
  run_kernel_grid(sb);
  run_kneser_grid(sb);

  {  // criterion 6: main theorem at the three stated grids, all family pairs
    VerifyOptions forced = opts;
    forced.forced_route = Route::Exhaustive;
    bool ok = true;
    ok &= sb.add(verify_main_theorem(5, 2, 3, 3, forced)).pass;
    ok &= sb.add(verify_main_theorem(6, 2, 4, 2, forced)).pass;
    ok &= sb.add(verify_main_theorem(5, 1, 2, 2, forced)).pass;
    sb.criterion(6, "main-theorem-exhaustive", ok);
  }
  {  // criterion 7
    bool ok = true;
    ok &= sb.add(verify_pouzet_lemma(5, 1, 1, opts)).pass;
    ok &= sb.add(verify_pouzet_lemma(5, 2, 1, opts)).pass;
    sb.criterion(7, "pouzet-lemma-exhaustive", ok);
  }
  {  // criterion 8: graph theorems
    bool ok = true;
    VerifyOptions kernel_only = opts;
    kernel_only.forced_route = Route::Kernel;
    ok &= sb.add(verify_graph_theorem("thm-graph-1.5", {{"v", 5}, {"k", 2}, {"p", 3}}, opts)).pass;
    for (unsigned v : {6u, 7u, 8u}) {
      ok &= sb.add(verify_graph_theorem("thm-graph-1.4", {{"v", v}, {"k", 4}}, kernel_only)).pass;
      ok &= sb.add(verify_graph_theorem("thm-graph-1.5", {{"v", v}, {"k", 3}, {"p", 3}}, kernel_only)).pass;
      unsigned k3 = v == 8 ? 6 : 2;  // k = 2 (mod 4) within 2 <= k <= v-2
      ok &= sb.add(verify_graph_theorem("thm-graph-1.5", {{"v", v}, {"k", k3}, {"p", 2}}, kernel_only)).pass;
    }
    ok &= sb.add(verify_graph_theorem("thm-graph-1.4", {{"v", 6}, {"k", 4}}, opts)).pass;
    ok &= sb.add(verify_graph_theorem("thm-graph-1.5", {{"v", 6}, {"k", 3}, {"p", 3}}, opts)).pass;
    ok &= sb.add(verify_graph_theorem("thm-graph-1.5", {{"v", 6}, {"k", 2}, {"p", 2}}, opts)).pass;
    for (unsigned v : {5u, 6u, 7u})
      ok &= sb.add(verify_graph_theorem("claim-bipartite", {{"v", v}, {"k", 3}}, opts)).pass;
    ok &= sb.add(verify_graph_theorem("claim-clawfree", {{"v", 5}}, opts)).pass;
    sb.criterion(8, "graph-theorems", ok);
  }
  {  // criterion 9: tournament theorems
    bool ok = true;
    ok &= sb.add(verify_tournament_theorem("thm-tournament-5.1", {{"v", 5}, {"k", 3}, {"p", 3}}, opts)).pass;
    ok &= sb.add(verify_tournament_theorem("lemma-hypomorphe", {{"v", 5}}, opts)).pass;
    ok &= sb.add(verify_tournament_theorem("claim-3hyp4hyp", {{"v", 5}}, opts)).pass;
    ok &= sb.add(verify_tournament_theorem("lemma-41", {{"v", 9}}, opts)).pass;
    sb.criterion(9, "tournament-theorems", ok);
  }
  {  // criterion 10: desk-scale substitutes, never labelled exhaustive
    bool ok = true;
    Report r43 = verify_graph_theorem("thm-graph-4.3", {{"v", 7}, {"k", 5}}, opts);
    ok &= r43.pass && r43.route != Route::Exhaustive;
    sb.add(std::move(r43));
    Report r53 = verify_tournament_theorem("thm-tournament-5.3", {{"v", 8}, {"k", 4}, {"p", 2}}, opts);
    ok &= r53.pass && r53.route == Route::Constructed;
    sb.add(std::move(r53));
    if (!quick) {
      Report rb6 = verify_tournament_theorem("thm-beta6", {{"v", 12}, {"k", 6}, {"p", 7}}, opts);
      ok &= rb6.pass && rb6.route == Route::Constructed;
      sb.add(std::move(rb6));
    }
    sb.criterion(10, "beyond-desk-scale-substitutes", ok);
  }
  {  // criterion 11: deterministic reports for fixed parameters and seed
    Report a = verify_main_theorem(5, 2, 3, 3, opts);
    Report b = verify_main_theorem(5, 2, 3, 3, opts);
    bool ok = a.to_json().dump() == b.to_json().dump();
    Report rep;
    rep.command = "suite determinism-self-check";
    rep.route = Route::Exhaustive;
    rep.counters["byte_identical"] = ok;
    if (!ok) rep.fail({{"kind", "nondeterministic-report"}});
    sb.criterion(11, "determinism", sb.add(std::move(rep)).pass);
  }

  sb.result.aggregate.ms = ms_since(start);
  return sb.result;
}

}  // namespace kellymod
