#include "verify_sets.hpp"

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

// Per-column masks over t-subset ranks: bit r set iff T_r is contained in K.
std::vector<uint64_t> column_masks(unsigned v, unsigned t, unsigned k) {
  const InclusionMatrix w = build_inclusion_matrix(v, t, k);
  std::vector<uint64_t> cols(w.cols(), 0);
  for (size_t i = 0; i < w.rows(); ++i)
    for (size_t j = 0; j < w.cols(); ++j)
      if (w.get(i, j)) cols[j] |= uint64_t{1} << i;
  return cols;
}

Json family_json(unsigned v, unsigned t, uint64_t word) {
  Json members = Json::array();
  for_each_subset(v, t, [&](uint32_t m, uint64_t r) {
    if (word >> r & 1) {
      Json sub = Json::array();
      for (uint32_t x = m; x; x &= x - 1) sub.push_back(std::countr_zero(x));
      members.push_back(sub);
    }
  });
  return members;
}

Json subset_json(uint32_t mask) {
  Json a = Json::array();
  for (uint32_t x = mask; x; x &= x - 1) a.push_back(std::countr_zero(x));
  return a;
}

// Left-kernel structure of W[t,k] mod p checked against the digit prediction.
// Returns the tag; records counters and any mismatch on the report.
KernelTag check_kernel_structure(Report& rep, unsigned v, unsigned t, unsigned k, uint32_t p) {
  const InclusionMatrix w = build_inclusion_matrix(v, t, k);
  const ResidueMatrix basis = left_kernel_mod_p(w.to_residue(p));
  const uint64_t dim = basis.rows();
  const uint64_t wilson = wilson_rank(v, t, k, p);
  const uint64_t elim = rank_mod_p(w.to_residue(p));
  rep.bump("kernel_dim", static_cast<int64_t>(dim));
  rep.counters["rank_wilson"] = static_cast<int64_t>(wilson);
  rep.counters["rank_elimination"] = static_cast<int64_t>(elim);
  if (wilson != elim) rep.fail({{"kind", "rank-formula-mismatch"}, {"wilson", wilson}, {"elimination", elim}});
  bool all_ones_basis = dim == 1;
  if (dim == 1)
    for (size_t j = 0; j < basis.cols(); ++j)
      if (basis.get(0, j) != 1) all_ones_basis = false;
  const KernelClass predicted = kernel_class(t, k, p);
  bool match = true;
  switch (predicted.tag) {
    case KernelTag::Trivial: match = dim == 0; break;
    case KernelTag::AllOnes: match = all_ones_basis; break;
    case KernelTag::Other: match = dim >= 1 && !all_ones_basis; break;
  }
  rep.counters["kernel_class_match"] = match;
  if (t == 0) rep.counters["t_zero_extension"] = 1;  // digit conditions assume t >= 1
  if (!match)
    rep.fail({{"kind", "kernel-class-mismatch"},
              {"predicted", kernel_tag_name(predicted.tag)},
              {"dim", dim},
              {"all_ones_basis", all_ones_basis}});
  return predicted.tag;
}

}  // namespace

Report verify_main_theorem(unsigned v, unsigned t, unsigned k, uint32_t p, const VerifyOptions& opts) {
  const auto start = Clock::now();
  Report rep;
  rep.command = "verify thm-main";
  rep.params = {{"v", v}, {"t", t}, {"k", k}, {"p", p}};
  rep.declare_counters({"counterexamples_total", "hypothesis_pairs", "verdict_equal", "verdict_full_vs_empty",
                        "verdict_boolean_complement", "verdict_unclassified"});
  if (!is_prime(p)) throw std::invalid_argument("verify_main_theorem: modulus must be prime");
  if (k > v || t > k || t > v - k)
    throw std::invalid_argument("verify_main_theorem: requires t <= min(k, v-k)");

  const KernelTag regime = check_kernel_structure(rep, v, t, k, p);

  const uint64_t positions = binomial_u64(v, t);
  if (positions > 63 || opts.forced_route == Route::Kernel) {
    rep.route = Route::Kernel;  // kernel facts only
    rep.ms = ms_since(start);
    return rep;
  }
  const uint64_t space = uint64_t{1} << positions;
  const uint64_t full = space - 1;

  bool exhaustive;
  std::vector<uint64_t> families = choose_words(space, opts, exhaustive);
  if (!exhaustive) {
    sorted_insert(families, 0);
    sorted_insert(families, full);
    if (p == 2) {
      std::vector<uint64_t> extra = families;
      for (uint64_t u : extra) sorted_insert(families, full & ~u);
    }
  }
  rep.route = exhaustive ? Route::Exhaustive : Route::Sampled;
  if (!exhaustive) rep.seed = opts.seed;
  rep.counters["families"] = static_cast<int64_t>(families.size());

  const std::vector<uint64_t> cols = column_masks(v, t, k);

  // group by reduced count vector; map keys give a deterministic group order
  std::map<std::string, std::vector<uint64_t>> groups;
  {
    std::vector<uint8_t> key(cols.size());
    for (uint64_t u : families) {
      for (size_t j = 0; j < cols.size(); ++j)
        key[j] = static_cast<uint8_t>(std::popcount(u & cols[j]) % p);
      groups[bytes_key(key)].push_back(u);
    }
  }
  rep.counters["groups"] = static_cast<int64_t>(groups.size());

  int64_t pairs = 0, n_equal = 0, n_fve = 0, n_bc = 0, n_uncl = 0;
  for (const auto& [key, members] : groups) {
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i; j < members.size(); ++j) {
        const uint64_t a = members[i], b = members[j];
        ++pairs;
        PairTag tag;
        if (a == b)
          tag = PairTag::Equal;
        else if ((a == full && b == 0) || (a == 0 && b == full))
          tag = PairTag::FullVsEmpty;
        else if ((a ^ b) == full)
          tag = PairTag::BooleanComplement;
        else
          tag = PairTag::Unclassified;
        switch (tag) {
          case PairTag::Equal: ++n_equal; break;
          case PairTag::FullVsEmpty: ++n_fve; break;
          case PairTag::BooleanComplement: ++n_bc; break;
          default: ++n_uncl; break;
        }
        bool allowed = true;
        if (regime == KernelTag::Trivial)
          allowed = tag == PairTag::Equal;
        else if (regime == KernelTag::AllOnes)
          allowed = tag == PairTag::Equal || tag == PairTag::FullVsEmpty ||
                    (p == 2 && tag == PairTag::BooleanComplement);
        if (!allowed)
          rep.fail({{"kind", "forbidden-verdict"},
                    {"verdict", pair_tag_name(tag)},
                    {"family_u", family_json(v, t, a)},
                    {"family_u2", family_json(v, t, b)}});
      }
  }
  rep.counters["hypothesis_pairs"] = pairs;
  rep.counters["verdict_equal"] = n_equal;
  rep.counters["verdict_full_vs_empty"] = n_fve;
  rep.counters["verdict_boolean_complement"] = n_bc;
  rep.counters["verdict_unclassified"] = n_uncl;
  rep.counters["regime_trivial"] = regime == KernelTag::Trivial;
  rep.counters["regime_all_ones"] = regime == KernelTag::AllOnes;
  rep.ms = ms_since(start);
  return rep;
}

Report verify_pouzet_lemma(unsigned v, unsigned t, unsigned r, const VerifyOptions& opts) {
  const auto start = Clock::now();
  Report rep;
  rep.command = "verify lemma-pouzet";
  rep.params = {{"v", v}, {"t", t}, {"r", r}};
  rep.declare_counters({"counterexamples_total", "hypothesis_pairs", "nontrivial_pairs", "chain_checks"});
  const unsigned k = t + r;
  if (v < k || v > kMaxGround) throw std::invalid_argument("verify_pouzet_lemma: requires t + r <= v <= 32");
  const uint64_t positions = binomial_u64(v, t);
  if (positions > 63) throw std::length_error("verify_pouzet_lemma: family space too large");
  const uint64_t space = uint64_t{1} << positions;

  bool exhaustive;
  std::vector<uint64_t> families = choose_words(space, opts, exhaustive);
  rep.route = exhaustive ? Route::Exhaustive : Route::Sampled;
  if (!exhaustive) rep.seed = opts.seed;
  rep.counters["families"] = static_cast<int64_t>(families.size());

  const std::vector<uint64_t> cols = column_masks(v, t, k);

  // (T', K') pairs with T' inside K' and at least t+r elements in between,
  // each carrying the mask of t-subsets T with T' <= T <= K'
  struct ChainQuery {
    uint32_t t_prime, k_prime;
    uint64_t members;
  };
  std::vector<ChainQuery> queries;
  const std::vector<uint32_t> tsubs = subsets_colex(v, t);
  for (uint32_t kp = 0; kp < (1u << v); ++kp) {
    const unsigned ksz = subset_cardinality(kp);
    for (uint32_t tp = kp;; tp = (tp - 1) & kp) {
      if (ksz - subset_cardinality(tp) >= k) {
        uint64_t members = 0;
        for (size_t i = 0; i < tsubs.size(); ++i)
          if ((tp & ~tsubs[i]) == 0 && (tsubs[i] & ~kp) == 0) members |= uint64_t{1} << i;
        queries.push_back({tp, kp, members});
      }
      if (tp == 0) break;
    }
  }
  rep.counters["chain_queries"] = static_cast<int64_t>(queries.size());

  std::map<std::string, std::vector<uint64_t>> groups;
  {
    std::vector<uint8_t> key(cols.size());
    for (uint64_t u : families) {
      for (size_t j = 0; j < cols.size(); ++j)
        key[j] = static_cast<uint8_t>(std::popcount(u & cols[j]));
      groups[bytes_key(key)].push_back(u);
    }
  }
  rep.counters["groups"] = static_cast<int64_t>(groups.size());

  int64_t pairs = 0, checks = 0, nontrivial_pairs = 0;
  for (const auto& [key, members] : groups) {
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i; j < members.size(); ++j) {
        const uint64_t a = members[i], b = members[j];
        ++pairs;
        if (a != b) ++nontrivial_pairs;
        for (const ChainQuery& q : queries) {
          ++checks;
          if (std::popcount(a & q.members) != std::popcount(b & q.members))
            rep.fail({{"kind", "chain-count-mismatch"},
                      {"family_u", family_json(v, t, a)},
                      {"family_u2", family_json(v, t, b)},
                      {"t_prime", subset_json(q.t_prime)},
                      {"k_prime", subset_json(q.k_prime)}});
        }
      }
  }
  rep.counters["hypothesis_pairs"] = pairs;
  rep.counters["nontrivial_pairs"] = nontrivial_pairs;
  rep.counters["chain_checks"] = checks;
  rep.ms = ms_since(start);
  return rep;
}

}  // namespace kellymod
