#include "combinatorics.hpp"

#include <bit>
#include <stdexcept>

namespace kellymod {

BigInt binomial(unsigned n, long long r) {
  if (r < 0 || r > static_cast<long long>(n)) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(r));
  return out;
}

uint64_t binomial_u64(unsigned n, long long r) {
  BigInt b = binomial(n, r);
  if (!b.fits_ulong_p()) throw std::overflow_error("binomial does not fit 64 bits");
  return b.get_ui();
}

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint32_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

uint64_t DigitVector::value() const {
  uint64_t acc = 0;
  for (size_t i = digits.size(); i-- > 0;) acc = acc * p + digits[i];
  return acc;
}

DigitVector digits_base_p(uint64_t n, uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("digits_base_p: modulus must be prime");
  DigitVector d;
  d.p = p;
  d.digits.clear();
  do {
    d.digits.push_back(static_cast<uint32_t>(n % p));
    n /= p;
  } while (n != 0);
  return d;
}

namespace {

uint32_t pow_mod(uint32_t base, uint32_t exp, uint32_t p) {
  uint64_t acc = 1, b = base % p;
  while (exp) {
    if (exp & 1) acc = acc * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<uint32_t>(acc);
}

// C(a, b) mod p for digits a, b < p. Nonzero whenever b <= a (no carries).
uint32_t binom_mod_p_digit(uint32_t a, uint32_t b, uint32_t p) {
  if (b > a) return 0;
  uint64_t acc = 1;
  for (uint32_t i = 1; i <= b; ++i) {
    acc = acc * ((a - b + i) % p) % p;
    acc = acc * pow_mod(i, p - 2, p) % p;
  }
  return static_cast<uint32_t>(acc);
}

}  // namespace

uint32_t binomial_mod_p_lucas(uint64_t k, uint64_t t, uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("binomial_mod_p_lucas: modulus must be prime");
  if (t > k) return 0;
  DigitVector kd = digits_base_p(k, p);
  DigitVector td = digits_base_p(t, p);
  uint64_t acc = 1;
  for (size_t i = 0; i <= td.top_index(); ++i) {
    acc = acc * binom_mod_p_digit(kd.digit(i), td.digit(i), p) % p;
    if (acc == 0) break;
  }
  return static_cast<uint32_t>(acc);
}

bool p_divides_binomial(uint64_t k, uint64_t t, uint32_t p) {
  if (t > k) throw std::invalid_argument("p_divides_binomial: requires t <= k");
  if (!is_prime(p)) throw std::invalid_argument("p_divides_binomial: modulus must be prime");
  DigitVector kd = digits_base_p(k, p);
  DigitVector td = digits_base_p(t, p);
  for (size_t i = 0; i <= td.top_index(); ++i)
    if (td.digit(i) > kd.digit(i)) return true;
  return false;
}

unsigned subset_cardinality(uint32_t mask) { return static_cast<unsigned>(std::popcount(mask)); }

uint64_t subset_rank(uint32_t mask) {
  uint64_t rank = 0;
  unsigned idx = 0;
  while (mask) {
    unsigned e = static_cast<unsigned>(std::countr_zero(mask));
    mask &= mask - 1;
    rank += binomial_u64(e, static_cast<long long>(idx) + 1);
    ++idx;
  }
  return rank;
}

uint32_t subset_unrank(uint64_t rank, unsigned card, unsigned v) {
  if (v > kMaxGround || card > v) throw std::invalid_argument("subset_unrank: bad cardinality/ground size");
  if (rank >= binomial_u64(v, card)) throw std::out_of_range("subset_unrank: rank out of range");
  uint32_t mask = 0;
  unsigned hi = v;
  for (unsigned i = card; i >= 1; --i) {
    unsigned e = hi;
    while (e > 0 && binomial_u64(e - 1, i) > rank) --e;
    // now e-1 is the largest element with C(e-1, i) <= rank
    --e;
    mask |= 1u << e;
    rank -= binomial_u64(e, i);
    hi = e;
  }
  return mask;
}

uint32_t first_subset(unsigned card) { return card == 0 ? 0u : (card >= 32 ? ~0u : (1u << card) - 1u); }

uint32_t next_subset_colex(uint32_t mask) {
  // Gosper: next mask with the same popcount in increasing numeric order.
  uint32_t c = mask & -mask;
  uint32_t r = mask + c;
  return (((r ^ mask) >> 2) / c) | r;
}

std::vector<uint32_t> subsets_colex(unsigned v, unsigned card) {
  std::vector<uint32_t> out;
  if (card > v) return out;
  out.reserve(binomial_u64(v, card));
  for_each_subset(v, card, [&](uint32_t m, uint64_t) { out.push_back(m); });
  return out;
}

}  // namespace kellymod
