#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace kellymod {

using BigInt = mpz_class;

// Ground sets are capped so a subset fits one machine word.
inline constexpr unsigned kMaxGround = 32;

// C(n, r); returns 0 for r < 0 or r > n.
BigInt binomial(unsigned n, long long r);

// Same value for quantities known to fit 64 bits (everything indexed by
// subsets of a <= 32 element ground set does). Throws std::overflow_error.
uint64_t binomial_u64(unsigned n, long long r);

bool is_prime(uint32_t n);

// Little-endian base-p digits: n = sum digits[i] * p^i.
// Always holds at least one digit; the top digit is nonzero unless n = 0.
struct DigitVector {
  uint32_t p = 2;
  std::vector<uint32_t> digits{0};

  uint32_t digit(size_t i) const { return i < digits.size() ? digits[i] : 0; }
  size_t top_index() const { return digits.size() - 1; }
  uint64_t value() const;
};

DigitVector digits_base_p(uint64_t n, uint32_t p);

// C(k, t) mod p as the digit-wise product; a factor is 0 when t_i > k_i.
uint32_t binomial_mod_p_lucas(uint64_t k, uint64_t t, uint32_t p);

// Requires t <= k. True iff some base-p digit of t exceeds the digit of k.
bool p_divides_binomial(uint64_t k, uint64_t t, uint32_t p);

// ---- subsets as bitmasks, colex order ----
//
// Colex compares subsets by the largest element where they differ, which is
// exactly numeric order of the masks. The rank of a fixed-cardinality subset
// does not depend on the ground-set size.

unsigned subset_cardinality(uint32_t mask);
uint64_t subset_rank(uint32_t mask);
uint32_t subset_unrank(uint64_t rank, unsigned card, unsigned v);

uint32_t first_subset(unsigned card);
uint32_t next_subset_colex(uint32_t mask);  // Gosper's hack

std::vector<uint32_t> subsets_colex(unsigned v, unsigned card);

template <class Fn>
void for_each_subset(unsigned v, unsigned card, Fn&& fn) {
  if (card > v) return;
  uint64_t count = binomial_u64(v, static_cast<long long>(card));
  uint32_t mask = first_subset(card);
  for (uint64_t r = 0; r < count; ++r) {
    fn(mask, r);
    if (r + 1 < count) mask = next_subset_colex(mask);
  }
}

}  // namespace kellymod
