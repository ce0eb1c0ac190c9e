#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "combinatorics.hpp"

namespace kellymod {

// A set of t-element subsets of {0..v-1}. The indicator bit at position r
// corresponds to the t-subset of colex rank r.
class Family {
 public:
  Family(unsigned v, unsigned t);

  static Family full(unsigned v, unsigned t);
  static Family from_members(unsigned v, unsigned t, const std::vector<uint32_t>& masks);

  unsigned v() const { return v_; }
  unsigned t() const { return t_; }
  uint64_t positions() const { return positions_; }  // C(v, t)

  bool test(uint64_t rank) const { return (bits_[rank / 64] >> (rank % 64)) & 1; }
  void set(uint64_t rank, bool value);
  bool contains(uint32_t mask) const { return test(subset_rank(mask)); }
  void insert(uint32_t mask) { set(subset_rank(mask), true); }

  uint64_t size() const;
  bool empty() const { return size() == 0; }
  bool is_full() const { return size() == positions_; }
  std::vector<uint32_t> members() const;

  Family member_complement() const;  // T in result iff T not in this

  bool operator==(const Family&) const = default;

 private:
  unsigned v_, t_;
  uint64_t positions_;
  std::vector<uint64_t> bits_;
};

// n(U, K) for every k-subset K in colex order, by direct member iteration.
std::vector<uint64_t> inclusion_counts(const Family& u, unsigned k);

// Same vector via the indicator-times-inclusion-matrix product.
std::vector<uint64_t> inclusion_counts_via_matrix(const Family& u, unsigned k);

struct CongruenceCheck {
  bool congruent = true;
  std::optional<uint32_t> witness;  // colex-least k-subset with differing counts
};

CongruenceCheck congruent_mod_p(const Family& u, const Family& u2, unsigned k, uint32_t p);

enum class PairTag { HypothesisFails, Equal, FullVsEmpty, BooleanComplement, Unclassified };

const char* pair_tag_name(PairTag tag);

struct PairVerdict {
  PairTag tag;
  // k-subset witness for HypothesisFails, t-subset witness for Unclassified
  std::optional<uint32_t> witness;
};

// Classification of a family pair under the mod-p inclusion-count hypothesis.
// Requires matching (v, t) and t <= k <= v; the stricter t <= min(k, v-k) is
// the theorem hypothesis and is enforced by the verification harness instead.
PairVerdict classify_pair(const Family& u, const Family& u2, unsigned k, uint32_t p);

// |{ T in U : T' <= T <= K' }|; requires T' <= K'.
uint64_t pouzet_count(const Family& u, uint32_t t_prime, uint32_t k_prime);

// |U| * (v - t) == sum over ground elements x of |{T in U : x not in T}|.
bool kelly_family_identity(const Family& u);

}  // namespace kellymod
