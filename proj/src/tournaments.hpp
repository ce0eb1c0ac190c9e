#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphs.hpp"

namespace kellymod {

// Tournament on {0..v-1}; one arc per unordered pair. Bit r of the
// orientation bitset is set iff the smaller endpoint of the colex-rank-r
// pair beats the larger one.
class Tournament {
 public:
  explicit Tournament(unsigned v);

  static Tournament chain(unsigned v);     // natural order, 0 beats everyone
  static Tournament circular(unsigned h);  // T_{2h+1}
  static Tournament lexicographic_sum(const Tournament& skeleton, const std::vector<Tournament>& parts);
  static Tournament parse(const std::string& text);
  std::string serialize() const;

  unsigned vertex_count() const { return v_; }
  bool beats(unsigned x, unsigned y) const;
  void set_arc(unsigned winner, unsigned loser);
  unsigned out_degree(unsigned x) const;

  Tournament dual() const;
  Tournament induced(uint32_t mask) const;  // vertices relabelled in increasing order

  bool is_three_cycle(uint32_t triple) const;
  Family three_cycles() const;
  uint64_t c3_count() const;
  bool is_transitive() const;

  bool is_interval(uint32_t mask) const;

  // Pairs on which the two tournaments disagree, as a graph.
  Graph disagreement_graph(const Tournament& other) const;

  bool operator==(const Tournament&) const = default;

 private:
  unsigned v_;
  uint64_t pairs_;
  std::vector<uint64_t> bits_;
};

enum class Class4 { Chain4, Cycle4, DiamondPlus, DiamondMinus };
const char* class4_name(Class4 c);

// Classification of a 4-element induced subtournament by its 3-cycle count
// (0 chain, 2 cycle, 1 diamond) and the side the lone cycle is on.
Class4 classify_4(const Tournament& t, uint32_t four_set);

std::pair<Family, Family> diamond_sets(const Tournament& t);  // (D+, D-)
std::pair<Family, Family> beta6_sets(const Tournament& t);    // (B+, B-)

Tournament diamond_plus();  // C3 on {0,1,2}, {0,1,2} -> 3
Tournament beta6_plus();    // T3((0<1<2), (3<4), (5))

// ---- isomorphism of small subtournaments ----

// Orientation bits of the induced subtournament, pairs in colex order of the
// relabelled vertices. |mask| <= 8.
uint32_t induced_code(const Tournament& t, uint32_t mask);

// Lexicographically least orientation code over all relabellings; n <= 7.
// Backed by lazily built write-once tables, safe for concurrent use.
uint32_t canonical_tournament_code(unsigned n, uint32_t code);

uint32_t dual_code(unsigned n, uint32_t code);

bool induced_isomorphic(const Tournament& a, uint32_t ma, const Tournament& b, uint32_t mb);

// Every k-subset induces isomorphic subtournaments (up to duality when the
// flag is set). k <= 7.
bool is_k_hypomorphic(const Tournament& a, const Tournament& b, unsigned k, bool up_to_duality = false);
// Same for every h = 1..k.
bool is_hypomorphic_up_to(const Tournament& a, const Tournament& b, unsigned k, bool up_to_duality = false);

// Classes of the difference relation: the equivalence generated by the pairs
// on which the tournaments disagree. Returned as masks sorted by least element.
std::vector<uint32_t> difference_classes(const Tournament& a, const Tournament& b);

struct CircularDecomposition {
  unsigned h = 0;
  std::vector<uint32_t> chains;  // dilation classes in circular order, rotation-minimal

  std::vector<unsigned> lengths() const;
};

// For a diamond-free tournament, the dilation profile realizing it as a
// lexicographic sum of chains over T_{2h+1} (h = 0 iff the tournament is a
// chain); absent when a diamond exists.
std::optional<CircularDecomposition> recognize_circular_decomposition(const Tournament& t);

// True iff the two chain sequences agree as cyclic sequences.
bool chains_match_up_to_rotation(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);

// Tournament whose orientation bitset is `word` over the colex pairs (v <= 11).
Tournament tournament_from_word(unsigned v, uint64_t word);
uint64_t tournament_word(const Tournament& t);

}  // namespace kellymod
