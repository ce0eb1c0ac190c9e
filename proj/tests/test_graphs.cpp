#include <doctest.h>

#include <random>

#include "graphs.hpp"
#include "tournaments.hpp"

using namespace kellymod;

namespace {

Graph c5() {
  Graph g(5);
  for (unsigned i = 0; i < 5; ++i) g.set_edge(i, (i + 1) % 5, true);
  return g;
}

Graph p4() {
  Graph g(4);
  g.set_edge(0, 1, true);
  g.set_edge(1, 2, true);
  g.set_edge(2, 3, true);
  return g;
}

Graph star(unsigned v) {
  Graph g(v);
  for (unsigned x = 1; x < v; ++x) g.set_edge(0, x, true);
  return g;
}

Graph random_graph(unsigned v, std::mt19937_64& rng) {
  Graph g(v);
  for (unsigned b = 1; b < v; ++b)
    for (unsigned a = 0; a < b; ++a)
      if (rng() & 1) g.set_edge(a, b, true);
  return g;
}

}  // namespace

TEST_CASE("graph text format") {
  Graph tri = Graph::parse("v 3\ne 0 1\ne 1 2\ne 0 2\n");
  CHECK(tri.edge_count() == 3);
  CHECK(Graph::parse("v 4\n").edge_count() == 0);
  CHECK(Graph::parse("v 4").vertex_count() == 4);

  // round trip to canonical form: serializer emits colex order
  std::string scrambled = "v 4\ne 2 3\ne 0 1\ne 0 3\n";
  Graph g = Graph::parse(scrambled);
  CHECK(g.serialize() == "v 4\ne 0 1\ne 0 3\ne 2 3\n");
  CHECK(Graph::parse(g.serialize()) == g);

  auto line_of = [](const std::string& text) {
    try {
      Graph::parse(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return size_t{0};
  };
  CHECK(line_of("v 3\ne 0 1\ne 0 1\n") == 3);  // duplicate
  CHECK(line_of("v 3\ne 1 1\n") == 2);         // loop
  CHECK(line_of("v 3\ne 0 7\n") == 2);         // out of range
  CHECK(line_of("v 3\ne 1 0\n") == 2);         // endpoints out of order
  CHECK(line_of("v 3\nx 1 0\n") == 2);         // unknown tag
  CHECK(line_of("e 0 1\n") == 1);              // edge before header
}

TEST_CASE("parser rejects garbage without crashing") {
  std::mt19937_64 rng(71);
  const std::string alphabet = "ve a0123456789 -\n\t";
  for (int trial = 0; trial < 3000; ++trial) {
    std::string text;
    size_t len = rng() % 40;
    for (size_t i = 0; i < len; ++i) text += alphabet[rng() % alphabet.size()];
    try {
      Graph g = Graph::parse(text);
      CHECK(Graph::parse(g.serialize()) == g);  // anything accepted round-trips
    } catch (const ParseError&) {
    }
    try {
      Tournament t = Tournament::parse(text);
      CHECK(Tournament::parse(t.serialize()) == t);
    } catch (const ParseError&) {
    }
  }
}

TEST_CASE("induced edge counts: mask path equals the double loop") {
  Graph k5 = Graph::complete(5);
  CHECK(k5.induced_edge_count(0b00111) == 3);
  CHECK(Graph(5).induced_edge_count(0b11111) == 0);
  for (unsigned drop = 0; drop < 5; ++drop)
    CHECK(c5().induced_edge_count(0b11111u & ~(1u << drop)) == 3);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10000; ++trial) {
    unsigned v = 1 + rng() % 12;
    Graph g = random_graph(v, rng);
    uint32_t mask = static_cast<uint32_t>(rng()) & ((1u << v) - 1);
    CHECK(g.induced_edge_count(mask) == g.induced_edge_count_naive(mask));
  }
}

TEST_CASE("3-homogeneous sets") {
  CHECK(Graph::complete(5).three_homogeneous_sets().size() == 10);
  CHECK(c5().three_homogeneous_sets().size() == 0);

  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = random_graph(6, rng);
    CHECK(g.three_homogeneous_sets().size() >= 1);  // Ramsey at six vertices
  }
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(4 + rng() % 4, rng);
    CHECK(g.three_homogeneous_sets() == g.complement().three_homogeneous_sets());
  }
}

TEST_CASE("P4 recognition: signature equals brute isomorphism on all 4-vertex graphs") {
  const Graph pattern = p4();
  for (uint64_t code = 0; code < 64; ++code) {
    Graph g = graph_from_word(4, code);
    bool by_signature = g.p4_sets().size() == 1;
    CHECK(by_signature == graphs_isomorphic(g, pattern));
  }
  CHECK(p4().p4_sets().size() == 1);
  CHECK(c5().p4_sets().size() == 5);
  CHECK(Graph::complete(4).p4_sets().size() == 0);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(4 + rng() % 4, rng);
    CHECK(g.p4_sets() == g.complement().p4_sets());  // P4 is self-complementary
  }
}

TEST_CASE("boolean sum") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    unsigned v = 2 + rng() % 8;
    Graph a = random_graph(v, rng), b = random_graph(v, rng), c = random_graph(v, rng);
    CHECK(boolean_sum(a, a) == Graph(v));
    CHECK(boolean_sum(a, Graph(v)) == a);
    CHECK(boolean_sum(a, Graph::complete(v)) == a.complement());
    CHECK(boolean_sum(a, b) == boolean_sum(b, a));
    CHECK(boolean_sum(boolean_sum(a, b), c) == boolean_sum(a, boolean_sum(b, c)));
  }
  CHECK_THROWS_AS(boolean_sum(Graph(3), Graph(4)), std::invalid_argument);
}

TEST_CASE("complete bipartite and claw-free recognition") {
  CHECK(star(4).is_complete_bipartite());
  CHECK_FALSE(star(4).is_claw_free());
  CHECK_FALSE(c5().is_complete_bipartite());
  CHECK(c5().is_claw_free());
  CHECK(Graph(5).is_complete_bipartite());
  CHECK(Graph(5).is_claw_free());
  CHECK(Graph::complete(2).is_complete_bipartite());
  CHECK_FALSE(Graph::complete(3).is_complete_bipartite());
  CHECK_FALSE(Graph::complete(5).is_complete_bipartite());
  CHECK(Graph::parse("v 3\ne 0 1\ne 1 2\n").is_complete_bipartite());  // path = K(1,2)

  // oracle: complete bipartite iff edges are exactly the cross pairs of some
  // bipartition
  std::mt19937_64 rng(41);
  for (uint64_t code = 0; code < (1u << 10); ++code) {
    Graph g = graph_from_word(5, code);
    bool expect = false;
    for (uint32_t side = 0; side < 32 && !expect; ++side) {
      bool match = true;
      for (unsigned b = 1; b < 5 && match; ++b)
        for (unsigned a = 0; a < b && match; ++a) {
          bool cross = ((side >> a) & 1) != ((side >> b) & 1);
          if (g.has_edge(a, b) != cross) match = false;
        }
      expect = match;
    }
    CHECK(g.is_complete_bipartite() == expect);
  }
  (void)rng;
}

TEST_CASE("induced pattern counting and the Kelly identity") {
  Graph edge(2);
  edge.set_edge(0, 1, true);
  CHECK(count_induced_copies(Graph::complete(3), edge) == 3);
  CHECK(count_induced_copies(c5(), p4()) == 5);
  CHECK(count_induced_copies(c5(), p4()) == c5().p4_sets().size());

  // every labelled pattern on at most 4 vertices
  std::mt19937_64 rng(43);
  std::vector<Graph> patterns;
  patterns.push_back(Graph(1));
  for (uint64_t code = 0; code < 2; ++code) patterns.push_back(graph_from_word(2, code));
  for (uint64_t code = 0; code < 8; ++code) patterns.push_back(graph_from_word(3, code));
  for (uint64_t code = 0; code < 64; ++code) patterns.push_back(graph_from_word(4, code));
  for (int trial = 0; trial < 12; ++trial) {
    unsigned v = 5 + rng() % 4;
    Graph g = random_graph(v, rng);
    for (const Graph& f : patterns) {
      uint64_t lhs = count_induced_copies(g, f) * (v - f.vertex_count());
      uint64_t rhs = 0;
      for (unsigned x = 0; x < v; ++x) rhs += count_induced_copies(g.induced(((1u << v) - 1) & ~(1u << x)), f);
      CHECK(lhs == rhs);
    }
  }
}
