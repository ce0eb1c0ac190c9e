#include <doctest.h>

#include <random>

#include "combinatorics.hpp"

using namespace kellymod;

namespace {

// independent oracle: Pascal recurrence on big integers
struct PascalTable {
  std::vector<std::vector<BigInt>> c;
  explicit PascalTable(unsigned nmax) : c(nmax + 1) {
    for (unsigned n = 0; n <= nmax; ++n) {
      c[n].assign(n + 1, 0);
      c[n][0] = 1;
      c[n][n] = 1;
      for (unsigned r = 1; r < n; ++r) c[n][r] = c[n - 1][r - 1] + c[n - 1][r];
    }
  }
  const BigInt& operator()(unsigned n, unsigned r) const { return c[n][r]; }
};

const PascalTable& pascal() {
  static PascalTable table(200);
  return table;
}

}  // namespace

TEST_CASE("binomial agrees with the Pascal recurrence") {
  for (unsigned n = 0; n <= 200; n += 7)
    for (unsigned r = 0; r <= n; ++r) CHECK(binomial(n, r) == pascal()(n, r));
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(6, -1) == 0);
  CHECK(binomial(5, 9) == 0);
  CHECK(binomial(52, 26) == pascal()(52, 26));
  CHECK(binomial(52, 26) == BigInt("495918532948104"));
}

TEST_CASE("binomial_u64 rejects values beyond 64 bits") {
  CHECK(binomial_u64(32, 16) == 601080390);
  CHECK_THROWS_AS(binomial_u64(200, 100), std::overflow_error);
}

TEST_CASE("digits_base_p") {
  CHECK(digits_base_p(10, 3).digits == std::vector<uint32_t>{1, 0, 1});
  CHECK(digits_base_p(4, 2).digits == std::vector<uint32_t>{0, 0, 1});
  CHECK(digits_base_p(0, 5).digits == std::vector<uint32_t>{0});
  CHECK_THROWS_AS(digits_base_p(10, 4), std::invalid_argument);
  CHECK_THROWS_AS(digits_base_p(10, 1), std::invalid_argument);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    uint32_t p = std::vector<uint32_t>{2, 3, 5, 7, 11, 13}[rng() % 6];
    uint64_t n = rng() % 1000000;
    DigitVector d = digits_base_p(n, p);
    CHECK(d.value() == n);
    for (uint32_t digit : d.digits) CHECK(digit < p);
    CHECK((n == 0 || d.digits.back() != 0));
  }
}

TEST_CASE("Lucas product equals the exact binomial mod p on the whole grid") {
  for (uint32_t p : {2u, 3u, 5u, 7u, 11u})
    for (unsigned k = 0; k <= 200; ++k)
      for (unsigned t = 0; t <= k; ++t) {
        BigInt expect = pascal()(k, t) % p;
        REQUIRE(binomial_mod_p_lucas(k, t, p) == expect.get_ui());
        REQUIRE(p_divides_binomial(k, t, p) == (expect == 0));
      }
  CHECK(binomial_mod_p_lucas(7, 3, 2) == 1);   // 35 is odd
  CHECK(binomial_mod_p_lucas(10, 4, 3) == 0);  // 210 = 3 * 70
  for (uint32_t p : {2u, 5u, 11u})
    for (uint64_t n : {0ull, 9ull, 100ull}) CHECK(binomial_mod_p_lucas(n, 0, p) == 1);
}

TEST_CASE("p_divides_binomial is the digit-domination criterion") {
  CHECK(p_divides_binomial(10, 4, 3));
  CHECK_FALSE(p_divides_binomial(7, 3, 2));
  for (unsigned k : {1u, 5u, 31u, 100u})
    for (uint32_t p : {2u, 3u, 7u}) CHECK_FALSE(p_divides_binomial(k, k, p));
  CHECK_THROWS_AS(p_divides_binomial(3, 5, 2), std::invalid_argument);
}

TEST_CASE("colex rank and unrank") {
  CHECK(subset_unrank(0, 2, 4) == 0b0011u);
  CHECK(subset_unrank(5, 2, 4) == 0b1100u);
  std::vector<uint32_t> expect{0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100};
  CHECK(subsets_colex(4, 2) == expect);
  CHECK_THROWS_AS(subset_unrank(6, 2, 4), std::out_of_range);

  for (unsigned v = 0; v <= 9; ++v)
    for (unsigned card = 0; card <= v; ++card) {
      uint64_t prev_rank = 0;
      for_each_subset(v, card, [&](uint32_t m, uint64_t r) {
        CHECK(subset_cardinality(m) == card);
        CHECK(subset_rank(m) == r);
        CHECK(subset_unrank(r, card, v) == m);
        if (r > 0) CHECK(subset_rank(m) > prev_rank);
        prev_rank = subset_rank(m);
      });
    }

  CHECK(subsets_colex(6, 0) == std::vector<uint32_t>{0});
  CHECK(subsets_colex(5, 5) == std::vector<uint32_t>{0b11111});
}
