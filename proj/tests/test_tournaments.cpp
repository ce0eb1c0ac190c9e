#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <random>
#include <thread>

#include "tournaments.hpp"

using namespace kellymod;

namespace {

Tournament c4_paper() {
  // the 4-cycle as written: arcs (0,3), (0,1), (3,1), (1,2), (2,0), (2,3)
  Tournament t(4);
  t.set_arc(0, 3);
  t.set_arc(0, 1);
  t.set_arc(3, 1);
  t.set_arc(1, 2);
  t.set_arc(2, 0);
  t.set_arc(2, 3);
  return t;
}

Tournament random_tournament(unsigned v, std::mt19937_64& rng) {
  Tournament t(v);
  for (unsigned b = 1; b < v; ++b)
    for (unsigned a = 0; a < b; ++a)
      if (rng() & 1)
        t.set_arc(a, b);
      else
        t.set_arc(b, a);
  return t;
}

bool brute_isomorphic(const Tournament& a, const Tournament& b) {
  const unsigned n = a.vertex_count();
  if (b.vertex_count() != n) return false;
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    bool ok = true;
    for (unsigned y = 1; y < n && ok; ++y)
      for (unsigned x = 0; x < y && ok; ++x)
        if (a.beats(x, y) != b.beats(perm[x], perm[y])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("tournament text format") {
  Tournament c3 = Tournament::parse("v 3\na 0 1\na 1 2\na 2 0\n");
  CHECK(c3.beats(0, 1));
  CHECK(c3.beats(1, 2));
  CHECK(c3.beats(2, 0));
  CHECK(Tournament::parse(c3.serialize()) == c3);

  auto line_of = [](const std::string& text) {
    try {
      Tournament::parse(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return size_t{0};
  };
  CHECK(line_of("v 3\na 0 1\na 1 2\n") > 0);           // missing pair
  CHECK(line_of("v 3\na 0 1\na 1 0\na 1 2\n") == 3);   // duplicate pair
  CHECK(line_of("v 3\na 1 1\n") == 2);                 // loop
  CHECK(line_of("v 3\na 0 5\n") == 2);                 // out of range
}

TEST_CASE("dual and chains") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Tournament t = random_tournament(2 + rng() % 6, rng);
    CHECK(t.dual().dual() == t);
    CHECK(t.c3_count() == t.dual().c3_count());
  }
  Tournament chain = Tournament::chain(3);
  CHECK(chain.beats(0, 1));
  CHECK(chain.beats(1, 2));
  CHECK(chain.beats(0, 2));
  Tournament rev = chain.dual();
  CHECK(rev.beats(2, 1));
  CHECK(rev.beats(1, 0));
  CHECK(diamond_plus().dual().c3_count() == 1);
  // dual of the positive diamond is the negative diamond
  auto [p, m] = diamond_sets(diamond_plus().dual());
  CHECK(p.size() == 0);
  CHECK(m.size() == 1);
}

TEST_CASE("3-cycle counts of the named 4-vertex tournaments") {
  CHECK(Tournament::chain(4).c3_count() == 0);
  CHECK(c4_paper().c3_count() == 2);
  CHECK(diamond_plus().c3_count() == 1);
}

TEST_CASE("classification of 4-subsets") {
  CHECK(classify_4(diamond_plus(), 0b1111) == Class4::DiamondPlus);
  CHECK(classify_4(diamond_plus().dual(), 0b1111) == Class4::DiamondMinus);
  CHECK(classify_4(c4_paper(), 0b1111) == Class4::Cycle4);
  CHECK(classify_4(Tournament::chain(4), 0b1111) == Class4::Chain4);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Tournament t = random_tournament(4 + rng() % 4, rng);
    uint64_t tags = 0;
    for_each_subset(t.vertex_count(), 4, [&](uint32_t m, uint64_t) {
      ++tags;
      Class4 c = classify_4(t, m);
      uint64_t cycles = t.induced(m).c3_count();
      if (c == Class4::Chain4) CHECK(cycles == 0);
      if (c == Class4::Cycle4) CHECK(cycles == 2);
      if (c == Class4::DiamondPlus || c == Class4::DiamondMinus) CHECK(cycles == 1);
    });
    CHECK(tags == binomial_u64(t.vertex_count(), 4));
  }

  // dual swaps the diamond families
  for (int trial = 0; trial < 50; ++trial) {
    Tournament t = random_tournament(5 + rng() % 3, rng);
    auto [plus, minus] = diamond_sets(t);
    auto [dplus, dminus] = diamond_sets(t.dual());
    CHECK(plus == dminus);
    CHECK(minus == dplus);
  }
}

TEST_CASE("circular tournaments") {
  CHECK(Tournament::circular(0).vertex_count() == 1);
  Tournament c3 = Tournament::circular(1);
  CHECK(c3.beats(0, 1));
  CHECK(c3.beats(1, 2));
  CHECK(c3.beats(2, 0));

  for (unsigned h = 1; h <= 4; ++h) {
    Tournament t = Tournament::circular(h);
    const unsigned m = 2 * h + 1;
    for (unsigned x = 0; x < m; ++x) CHECK(t.out_degree(x) == h);
    // rotational rule
    for (unsigned i = 0; i < m; ++i)
      for (unsigned j = 0; j < m; ++j)
        if (i != j) CHECK(t.beats(i, j) == ((j + m - i) % m <= h));
    // diamond-free
    if (m >= 4) {
      auto [plus, minus] = diamond_sets(t);
      CHECK(plus.size() == 0);
      CHECK(minus.size() == 0);
    }
  }
}

TEST_CASE("lexicographic sums") {
  std::mt19937_64 rng(13);
  Tournament skel = random_tournament(4, rng);
  std::vector<Tournament> singles(4, Tournament::chain(1));
  CHECK(Tournament::lexicographic_sum(skel, singles) == skel);

  Tournament beta = beta6_plus();
  CHECK(beta.vertex_count() == 6);
  // component vertex sets are intervals
  CHECK(beta.is_interval(0b000111));
  CHECK(beta.is_interval(0b011000));
  CHECK(beta.is_interval(0b100000));
  // the paper's arc picture: (0<1<2) -> (3<4) -> 5 -> (0<1<2)
  CHECK(beta.beats(0, 1));
  CHECK(beta.beats(1, 2));
  CHECK(beta.beats(0, 3));
  CHECK(beta.beats(4, 5));
  CHECK(beta.beats(5, 0));

  CHECK_THROWS_AS(Tournament::lexicographic_sum(skel, {Tournament::chain(1)}), std::invalid_argument);
  CHECK_THROWS_AS(
      Tournament::lexicographic_sum(Tournament::chain(2), {Tournament::chain(0), Tournament::chain(1)}),
      std::invalid_argument);
}

TEST_CASE("beta6 families") {
  Tournament beta = beta6_plus();
  auto [plus, minus] = beta6_sets(beta);
  CHECK(plus.size() == 1);
  CHECK(plus.contains(0b111111));
  CHECK(minus.size() == 0);
  auto [dplus, dminus] = beta6_sets(beta.dual());
  CHECK(dplus.size() == 0);
  CHECK(dminus.size() == 1);
  // circular dilations with all-singleton profile carry no beta6
  Tournament t7 = Tournament::circular(3);
  auto [p7, m7] = beta6_sets(t7);
  CHECK(p7.size() == 0);
  CHECK(m7.size() == 0);
}

TEST_CASE("intervals") {
  Tournament beta = beta6_plus();
  CHECK(beta.is_interval(0));
  for (unsigned x = 0; x < 6; ++x) CHECK(beta.is_interval(1u << x));
  CHECK(beta.is_interval(0b111111));
  CHECK(diamond_plus().is_interval(0b0111));
  Tournament c3 = Tournament::circular(1);
  CHECK_FALSE(c3.is_interval(0b011));
  CHECK_FALSE(c3.is_interval(0b101));
  CHECK_FALSE(c3.is_interval(0b110));
}

TEST_CASE("canonical codes equal orbit minima on every tournament with at most 5 vertices") {
  for (unsigned n = 2; n <= 5; ++n) {
    const uint64_t space = uint64_t{1} << binomial_u64(n, 2);
    for (uint64_t w = 0; w < space; ++w) {
      Tournament t = tournament_from_word(n, w);
      const uint32_t full = (1u << n) - 1;
      uint32_t code = induced_code(t, full);
      CHECK(code == static_cast<uint32_t>(w));
      // orbit minimum by explicit relabelling
      uint32_t best = UINT32_MAX;
      std::vector<unsigned> perm(n);
      std::iota(perm.begin(), perm.end(), 0u);
      do {
        uint32_t recoded = 0;
        for (unsigned j = 1; j < n; ++j)
          for (unsigned i = 0; i < j; ++i)
            if (t.beats(perm[i], perm[j])) recoded |= 1u << pair_rank(i, j);
        best = std::min(best, recoded);
      } while (std::next_permutation(perm.begin(), perm.end()));
      CHECK(canonical_tournament_code(n, code) == best);
    }
  }
}

TEST_CASE("hypomorphy") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    unsigned v = 4 + rng() % 4;
    Tournament t = random_tournament(v, rng);
    CHECK(is_hypomorphic_up_to(t, t, std::min(v, 7u)));
    CHECK(is_k_hypomorphic(t, t.dual(), 3));  // 3-subtournaments are self-dual
  }
  Tournament dp = diamond_plus(), dm = diamond_plus().dual();
  CHECK(is_k_hypomorphic(dp, dm, 3));
  CHECK_FALSE(is_k_hypomorphic(dp, dm, 4));
  CHECK(is_k_hypomorphic(dp, dm, 4, true));  // up to duality
  CHECK_THROWS_AS(is_k_hypomorphic(dp, dm, 8), std::length_error);

  // canonical-code equality against raw permutation search on 4-subsets
  for (int trial = 0; trial < 300; ++trial) {
    Tournament a = random_tournament(4, rng), b = random_tournament(4, rng);
    CHECK(induced_isomorphic(a, 0b1111, b, 0b1111) == brute_isomorphic(a, b));
  }
  for (int trial = 0; trial < 200; ++trial) {
    Tournament a = random_tournament(5, rng), b = random_tournament(5, rng);
    CHECK(induced_isomorphic(a, 0b11111, b, 0b11111) == brute_isomorphic(a, b));
  }
}

TEST_CASE("canonical-code cache is safe under concurrent lookups") {
  // write-once atomic tables: hammer the same codes from several threads and
  // compare against a serial reference
  std::vector<uint32_t> reference(1 << 10);
  for (uint32_t code = 0; code < (1u << 10); ++code) reference[code] = canonical_tournament_code(5, code);
  std::vector<std::thread> workers;
  std::atomic<bool> ok{true};
  for (int w = 0; w < 4; ++w)
    workers.emplace_back([&, w] {
      std::mt19937_64 rng(100 + w);
      for (int i = 0; i < 20000; ++i) {
        uint32_t code = static_cast<uint32_t>(rng()) & 1023;
        if (canonical_tournament_code(5, code) != reference[code]) ok = false;
      }
    });
  for (auto& t : workers) t.join();
  CHECK(ok.load());
}

TEST_CASE("disagreement graphs") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    unsigned v = 2 + rng() % 6;
    Tournament t = random_tournament(v, rng);
    CHECK(t.disagreement_graph(t).edge_count() == 0);
    CHECK(t.disagreement_graph(t.dual()) == Graph::complete(v));
  }
}

TEST_CASE("difference classes") {
  std::mt19937_64 rng(19);
  Tournament t = random_tournament(6, rng);
  std::vector<uint32_t> classes = difference_classes(t, t);
  CHECK(classes.size() == 6);  // all singletons

  Tournament c3 = Tournament::circular(1);
  classes = difference_classes(c3, c3.dual());
  REQUIRE(classes.size() == 1);
  CHECK(classes[0] == 0b111);

  // classes of (<=4)-hypomorphic pairs are intervals of both: exhaustive
  // five-vertex sweep grouped by the (triple, quad) classification signature
  std::map<std::string, std::vector<uint64_t>> groups;
  const std::vector<uint32_t> triples = subsets_colex(5, 3);
  const std::vector<uint32_t> quads = subsets_colex(5, 4);
  for (uint64_t w = 0; w < (1u << 10); ++w) {
    Tournament a = tournament_from_word(5, w);
    std::string key;
    for (uint32_t m : triples) key += a.is_three_cycle(m) ? '1' : '0';
    for (uint32_t m : quads) key += static_cast<char>('0' + static_cast<int>(classify_4(a, m)));
    groups[key].push_back(w);
  }
  int64_t pairs = 0;
  for (const auto& [key, members] : groups)
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i + 1; j < members.size(); ++j) {
        Tournament a = tournament_from_word(5, members[i]), b = tournament_from_word(5, members[j]);
        REQUIRE(is_hypomorphic_up_to(a, b, 4));
        ++pairs;
        for (uint32_t cls : difference_classes(a, b)) {
          CHECK(a.is_interval(cls));
          CHECK(b.is_interval(cls));
        }
      }
  CHECK(pairs > 0);
}

TEST_CASE("circular decomposition recognition") {
  auto chain5 = recognize_circular_decomposition(Tournament::chain(5));
  REQUIRE(chain5.has_value());
  CHECK(chain5->h == 0);
  CHECK(chain5->lengths() == std::vector<unsigned>{5});

  auto c3 = recognize_circular_decomposition(Tournament::circular(1));
  REQUIRE(c3.has_value());
  CHECK(c3->h == 1);
  CHECK(c3->lengths() == std::vector<unsigned>{1, 1, 1});

  auto beta = recognize_circular_decomposition(beta6_plus());
  REQUIRE(beta.has_value());
  CHECK(beta->h == 1);
  CHECK(beta->lengths() == std::vector<unsigned>{1, 3, 2});  // rotation-minimal

  CHECK_FALSE(recognize_circular_decomposition(diamond_plus()).has_value());

  // inverts lexicographic sums of chains for every profile with <= 9 vertices
  for (unsigned h = 1; h <= 4; ++h) {
    const unsigned m = 2 * h + 1;
    const unsigned max_entry = 10 - m;
    std::vector<unsigned> profile(m, 1);
    for (;;) {
      unsigned total = 0;
      for (unsigned x : profile) total += x;
      if (total <= 9) {
        std::vector<Tournament> parts;
        for (unsigned len : profile) parts.push_back(Tournament::chain(len));
        Tournament t = Tournament::lexicographic_sum(Tournament::circular(h), parts);
        auto dec = recognize_circular_decomposition(t);
        REQUIRE(dec.has_value());
        CHECK(dec->h == h);
        // recovered lengths match the profile as a cyclic sequence
        std::vector<unsigned> got = dec->lengths();
        bool match = false;
        for (unsigned r = 0; r < m && !match; ++r) {
          bool ok = true;
          for (unsigned i = 0; i < m && ok; ++i)
            if (got[i] != profile[(i + r) % m]) ok = false;
          match = ok;
        }
        CHECK(match);
      }
      unsigned pos = 0;
      while (pos < m) {
        if (profile[pos] < max_entry) {
          ++profile[pos];
          for (unsigned x = 0; x < pos; ++x) profile[x] = 1;
          break;
        }
        ++pos;
      }
      if (pos == m) break;
    }
  }

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    Tournament t = random_tournament(5 + rng() % 3, rng);
    auto [plus, minus] = diamond_sets(t);
    auto dec = recognize_circular_decomposition(t);
    CHECK(dec.has_value() == (plus.size() + minus.size() == 0));
  }
}
