#include "family.hpp"

#include <bit>
#include <stdexcept>

#include "incidence.hpp"

namespace kellymod {

Family::Family(unsigned v, unsigned t) : v_(v), t_(t) {
  if (v > kMaxGround || t > v) throw std::invalid_argument("Family: requires t <= v <= 32");
  positions_ = binomial_u64(v, t);
  bits_.assign((positions_ + 63) / 64, 0);
}

Family Family::full(unsigned v, unsigned t) {
  Family f(v, t);
  for (uint64_t r = 0; r < f.positions_; ++r) f.set(r, true);
  return f;
}

Family Family::from_members(unsigned v, unsigned t, const std::vector<uint32_t>& masks) {
  Family f(v, t);
  for (uint32_t m : masks) {
    if (subset_cardinality(m) != t) throw std::invalid_argument("Family: member has wrong cardinality");
    if (m >> v) throw std::invalid_argument("Family: member outside ground set");
    f.insert(m);
  }
  return f;
}

void Family::set(uint64_t rank, bool value) {
  if (rank >= positions_) throw std::out_of_range("Family: rank out of range");
  uint64_t bit = uint64_t{1} << (rank % 64);
  if (value)
    bits_[rank / 64] |= bit;
  else
    bits_[rank / 64] &= ~bit;
}

uint64_t Family::size() const {
  uint64_t n = 0;
  for (uint64_t w : bits_) n += static_cast<uint64_t>(std::popcount(w));
  return n;
}

std::vector<uint32_t> Family::members() const {
  std::vector<uint32_t> out;
  for_each_subset(v_, t_, [&](uint32_t m, uint64_t r) {
    if (test(r)) out.push_back(m);
  });
  return out;
}

Family Family::member_complement() const {
  Family f(v_, t_);
  for (uint64_t r = 0; r < positions_; ++r) f.set(r, !test(r));
  return f;
}

std::vector<uint64_t> inclusion_counts(const Family& u, unsigned k) {
  if (k < u.t() || k > u.v()) throw std::invalid_argument("inclusion_counts: requires t <= k <= v");
  const std::vector<uint32_t> mem = u.members();
  std::vector<uint64_t> out(binomial_u64(u.v(), k), 0);
  for_each_subset(u.v(), k, [&](uint32_t kmask, uint64_t j) {
    uint64_t c = 0;
    for (uint32_t t : mem)
      if ((t & ~kmask) == 0) ++c;
    out[j] = c;
  });
  return out;
}

std::vector<uint64_t> inclusion_counts_via_matrix(const Family& u, unsigned k) {
  if (k < u.t() || k > u.v()) throw std::invalid_argument("inclusion_counts: requires t <= k <= v");
  InclusionMatrix w = build_inclusion_matrix(u.v(), u.t(), k);
  std::vector<uint64_t> out(w.cols(), 0);
  for (size_t i = 0; i < w.rows(); ++i) {
    if (!u.test(i)) continue;
    for (size_t j = 0; j < w.cols(); ++j) out[j] += w.get(i, j);
  }
  return out;
}

CongruenceCheck congruent_mod_p(const Family& u, const Family& u2, unsigned k, uint32_t p) {
  if (u.v() != u2.v() || u.t() != u2.t())
    throw std::invalid_argument("congruent_mod_p: families live on different index sets");
  if (!is_prime(p)) throw std::invalid_argument("congruent_mod_p: modulus must be prime");
  std::vector<uint64_t> a = inclusion_counts(u, k);
  std::vector<uint64_t> b = inclusion_counts(u2, k);
  CongruenceCheck out;
  for (size_t j = 0; j < a.size(); ++j) {
    if (a[j] % p != b[j] % p) {
      out.congruent = false;
      out.witness = subset_unrank(j, k, u.v());
      return out;
    }
  }
  return out;
}

const char* pair_tag_name(PairTag tag) {
  switch (tag) {
    case PairTag::HypothesisFails: return "hypothesis-fails";
    case PairTag::Equal: return "equal";
    case PairTag::FullVsEmpty: return "full-vs-empty";
    case PairTag::BooleanComplement: return "boolean-complement";
    case PairTag::Unclassified: return "unclassified";
  }
  return "?";
}

PairVerdict classify_pair(const Family& u, const Family& u2, unsigned k, uint32_t p) {
  CongruenceCheck c = congruent_mod_p(u, u2, k, p);
  if (!c.congruent) return {PairTag::HypothesisFails, c.witness};
  if (u == u2) return {PairTag::Equal, std::nullopt};
  if ((u.is_full() && u2.empty()) || (u.empty() && u2.is_full())) return {PairTag::FullVsEmpty, std::nullopt};
  bool complement = true;
  uint64_t first_diff = 0;
  for (uint64_t r = 0; r < u.positions() && complement; ++r)
    if (u.test(r) == u2.test(r)) complement = false;
  if (complement) return {PairTag::BooleanComplement, std::nullopt};
  for (uint64_t r = 0; r < u.positions(); ++r)
    if (u.test(r) != u2.test(r)) {
      first_diff = r;
      break;
    }
  return {PairTag::Unclassified, subset_unrank(first_diff, u.t(), u.v())};
}

uint64_t pouzet_count(const Family& u, uint32_t t_prime, uint32_t k_prime) {
  if (t_prime & ~k_prime) throw std::invalid_argument("pouzet_count: requires T' contained in K'");
  uint64_t c = 0;
  for (uint32_t m : u.members())
    if ((t_prime & ~m) == 0 && (m & ~k_prime) == 0) ++c;
  return c;
}

bool kelly_family_identity(const Family& u) {
  if (u.v() == u.t()) throw std::invalid_argument("kelly_family_identity: requires v > t");
  const uint64_t lhs = u.size() * (u.v() - u.t());
  uint64_t rhs = 0;
  const std::vector<uint32_t> mem = u.members();
  for (unsigned x = 0; x < u.v(); ++x) {
    const uint32_t bit = 1u << x;
    for (uint32_t m : mem)
      if (!(m & bit)) ++rhs;
  }
  return lhs == rhs;
}

}  // namespace kellymod
