#include <doctest.h>

#include <random>

#include "family.hpp"
#include "incidence.hpp"

using namespace kellymod;

namespace {

Family random_family(unsigned v, unsigned t, std::mt19937_64& rng) {
  Family f(v, t);
  for (uint64_t r = 0; r < f.positions(); ++r)
    if (rng() & 1) f.set(r, true);
  return f;
}

}  // namespace

TEST_CASE("inclusion counts") {
  Family all = Family::full(5, 2);
  for (uint64_t c : inclusion_counts(all, 4)) CHECK(c == 6);

  Family empty(5, 2);
  for (uint64_t c : inclusion_counts(empty, 3)) CHECK(c == 0);

  Family u = Family::from_members(5, 2, {0b00011, 0b01100});
  std::vector<uint64_t> counts = inclusion_counts(u, 3);
  CHECK(counts[subset_rank(0b00111)] == 1);  // {0,1,2}
  CHECK(counts[subset_rank(0b11100)] == 1);  // {2,3,4}
  CHECK(counts[subset_rank(0b10011)] == 1);  // {0,1,4}
  CHECK(counts[subset_rank(0b10101)] == 0);  // {0,2,4}

  CHECK_THROWS_AS(inclusion_counts(u, 1), std::invalid_argument);
  CHECK_THROWS_AS(inclusion_counts(u, 6), std::invalid_argument);

  // the direct path agrees with the indicator-matrix product
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    unsigned v = 4 + rng() % 4;
    unsigned t = 1 + rng() % 3;
    if (t > v) continue;
    unsigned k = t + rng() % (v - t + 1);
    Family f = random_family(v, t, rng);
    CHECK(inclusion_counts(f, k) == inclusion_counts_via_matrix(f, k));
  }
}

TEST_CASE("congruence with witness") {
  Family all = Family::full(5, 2), empty(5, 2);
  CHECK(congruent_mod_p(all, all, 3, 5).congruent);
  CHECK(congruent_mod_p(all, empty, 4, 2).congruent);  // 6 = 0 (mod 2)

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    Family u = random_family(5, 2, rng);
    CHECK(congruent_mod_p(u, u.member_complement(), 4, 2).congruent);
  }

  Family one = Family::from_members(5, 2, {0b00011});
  CongruenceCheck c = congruent_mod_p(one, empty, 3, 2);
  CHECK_FALSE(c.congruent);
  REQUIRE(c.witness.has_value());
  CHECK(*c.witness == 0b00111);  // colex-least 3-subset containing {0,1}

  Family other_t(5, 3);
  CHECK_THROWS_AS(congruent_mod_p(one, other_t, 4, 2), std::invalid_argument);
}

TEST_CASE("pair classification") {
  std::mt19937_64 rng(13);
  Family all = Family::full(5, 2), empty(5, 2);
  for (int trial = 0; trial < 20; ++trial) {
    Family u = random_family(5, 2, rng);
    CHECK(classify_pair(u, u, 4, 2).tag == PairTag::Equal);
  }
  CHECK(classify_pair(all, empty, 4, 2).tag == PairTag::FullVsEmpty);
  CHECK(classify_pair(empty, all, 4, 2).tag == PairTag::FullVsEmpty);

  for (int trial = 0; trial < 20; ++trial) {
    Family u = random_family(5, 2, rng);
    if (u.empty() || u.is_full()) continue;
    PairVerdict verdict = classify_pair(u, u.member_complement(), 4, 2);
    CHECK(verdict.tag == PairTag::BooleanComplement);
    // symmetry
    CHECK(classify_pair(u.member_complement(), u, 4, 2).tag == PairTag::BooleanComplement);
  }

  Family one = Family::from_members(5, 2, {0b00011});
  PairVerdict fails = classify_pair(one, empty, 3, 2);
  CHECK(fails.tag == PairTag::HypothesisFails);
  CHECK(fails.witness.has_value());
}

TEST_CASE("chain counts between nested subsets") {
  Family u = Family::from_members(5, 2, {0b00011, 0b00101, 0b01001, 0b10001});  // pairs containing 0
  CHECK(pouzet_count(u, 0, 0b11111) == 4);
  CHECK(pouzet_count(u, 0b00111, 0b11111) == 0);  // |T'| = 3 > t
  CHECK(pouzet_count(u, 0b00001, 0b00111) == 2);  // {0,1}, {0,2}
  CHECK_THROWS_AS(pouzet_count(u, 0b01000, 0b00111), std::invalid_argument);
}

TEST_CASE("Kelly identity for families") {
  Family empty(6, 2);
  CHECK(kelly_family_identity(empty));
  CHECK(kelly_family_identity(Family::full(6, 2)));
  Family star = Family::from_members(5, 2, {0b00011, 0b00101, 0b01001, 0b10001});
  CHECK(kelly_family_identity(star));  // 4*3 = 0+3+3+3+3
  CHECK_THROWS_AS(kelly_family_identity(Family::full(4, 4)), std::invalid_argument);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10000; ++trial) {
    unsigned v = 2 + rng() % 9;
    unsigned t = rng() % v;
    CHECK(kelly_family_identity(random_family(v, t, rng)));
  }
}

TEST_CASE("unclassified verdicts carry the colex-least differing member") {
  // (t, k, p) = (2, 3, 2) at v = 5 has a kernel beyond the all-ones span;
  // the star family (all pairs through 0) is congruent to the empty family
  Family star = Family::from_members(5, 2, {0b00011, 0b00101, 0b01001, 0b10001});
  Family empty(5, 2);
  REQUIRE(congruent_mod_p(star, empty, 3, 2).congruent);
  PairVerdict verdict = classify_pair(empty, star, 3, 2);
  CHECK(verdict.tag == PairTag::Unclassified);
  REQUIRE(verdict.witness.has_value());
  CHECK(*verdict.witness == 0b00011);  // colex-least pair of the star
}

TEST_CASE("trivial regime: random hypothesis pairs never classify beyond equality") {
  // (t, k, p) = (2, 6, 2) is a zero-kernel regime; any congruent pair must be
  // equal, so random distinct pairs must fail the hypothesis
  std::mt19937_64 rng(21);
  REQUIRE(kernel_class(2, 6, 2).tag == KernelTag::Trivial);
  for (int trial = 0; trial < 10000; ++trial) {
    Family u = random_family(8, 2, rng), u2 = random_family(8, 2, rng);
    PairTag tag = classify_pair(u, u2, 6, 2).tag;
    CHECK((tag == PairTag::Equal || tag == PairTag::HypothesisFails));
  }
}
