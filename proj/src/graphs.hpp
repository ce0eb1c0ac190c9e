#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "family.hpp"

namespace kellymod {

struct ParseError : std::runtime_error {
  ParseError(size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  size_t line;
};

// Colex rank of the pair {a, b} among 2-subsets; independent of v.
inline uint64_t pair_rank(unsigned a, unsigned b) {
  if (a > b) std::swap(a, b);
  return uint64_t{b} * (b - 1) / 2 + a;
}

// Simple graph on {0..v-1}; edges as a bitset over the C(v,2) colex pairs.
class Graph {
 public:
  explicit Graph(unsigned v);

  static Graph complete(unsigned v);
  static Graph parse(const std::string& text);
  std::string serialize() const;  // edges in colex order

  unsigned vertex_count() const { return v_; }
  uint64_t pair_count() const { return pairs_; }
  uint64_t edge_count() const;
  bool has_edge(unsigned a, unsigned b) const;
  void set_edge(unsigned a, unsigned b, bool present);
  unsigned degree(unsigned x) const;

  Graph complement() const;

  // Edges with both ends in k_set: bit-parallel mask path.
  uint64_t induced_edge_count(uint32_t k_set) const;
  // Reference double loop; must agree with the mask path.
  uint64_t induced_edge_count_naive(uint32_t k_set) const;

  Family three_homogeneous_sets() const;  // t = 3
  Family p4_sets() const;                 // t = 4

  bool is_complete_bipartite() const;
  bool is_claw_free() const;

  Graph induced(uint32_t k_set) const;  // vertices relabelled in increasing order
  std::vector<uint32_t> component_masks() const;

  bool operator==(const Graph&) const = default;

  const std::vector<uint64_t>& words() const { return bits_; }
  uint64_t word0() const { return bits_.empty() ? 0 : bits_[0]; }

 private:
  unsigned v_;
  uint64_t pairs_;
  std::vector<uint64_t> bits_;
};

Graph boolean_sum(const Graph& g, const Graph& g2);

// Number of vertex subsets of g inducing a graph isomorphic to pattern;
// isomorphism by permutation search, pattern.v <= 5.
uint64_t count_induced_copies(const Graph& g, const Graph& pattern);

bool graphs_isomorphic(const Graph& a, const Graph& b);

// Graph whose edge bitset is `word` over the colex pairs of a v-set (v <= 11).
Graph graph_from_word(unsigned v, uint64_t word);

}  // namespace kellymod
