#include "graphs.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace kellymod {

Graph::Graph(unsigned v) : v_(v) {
  if (v > kMaxGround) throw std::invalid_argument("Graph: vertex count exceeds 32");
  pairs_ = binomial_u64(v, 2);
  bits_.assign((pairs_ + 63) / 64, 0);
}

Graph Graph::complete(unsigned v) {
  Graph g(v);
  for (unsigned b = 1; b < v; ++b)
    for (unsigned a = 0; a < b; ++a) g.set_edge(a, b, true);
  return g;
}

uint64_t Graph::edge_count() const {
  uint64_t n = 0;
  for (uint64_t w : bits_) n += static_cast<uint64_t>(std::popcount(w));
  return n;
}

bool Graph::has_edge(unsigned a, unsigned b) const {
  uint64_t r = pair_rank(a, b);
  return (bits_[r / 64] >> (r % 64)) & 1;
}

void Graph::set_edge(unsigned a, unsigned b, bool present) {
  if (a == b) throw std::invalid_argument("Graph: loops not allowed");
  if (a >= v_ || b >= v_) throw std::invalid_argument("Graph: vertex out of range");
  uint64_t r = pair_rank(a, b);
  uint64_t bit = uint64_t{1} << (r % 64);
  if (present)
    bits_[r / 64] |= bit;
  else
    bits_[r / 64] &= ~bit;
}

unsigned Graph::degree(unsigned x) const {
  unsigned d = 0;
  for (unsigned y = 0; y < v_; ++y)
    if (y != x && has_edge(x, y)) ++d;
  return d;
}

Graph Graph::complement() const {
  Graph g(v_);
  for (size_t i = 0; i < bits_.size(); ++i) g.bits_[i] = ~bits_[i];
  // clear padding beyond the last pair
  if (pairs_ % 64 && !g.bits_.empty()) g.bits_.back() &= (uint64_t{1} << (pairs_ % 64)) - 1;
  return g;
}

namespace {

std::vector<uint64_t> pair_mask_words(unsigned v, uint32_t k_set) {
  std::vector<uint64_t> mask((binomial_u64(v, 2) + 63) / 64, 0);
  for (uint32_t hi = k_set; hi;) {
    unsigned b = static_cast<unsigned>(std::countr_zero(hi));
    hi &= hi - 1;
    for (uint32_t lo = k_set & ((1u << b) - 1); lo;) {
      unsigned a = static_cast<unsigned>(std::countr_zero(lo));
      lo &= lo - 1;
      uint64_t r = pair_rank(a, b);
      mask[r / 64] |= uint64_t{1} << (r % 64);
    }
  }
  return mask;
}

}  // namespace

uint64_t Graph::induced_edge_count(uint32_t k_set) const {
  if (k_set >> v_) throw std::invalid_argument("induced_edge_count: subset outside vertex set");
  std::vector<uint64_t> mask = pair_mask_words(v_, k_set);
  uint64_t n = 0;
  for (size_t i = 0; i < bits_.size(); ++i) n += static_cast<uint64_t>(std::popcount(bits_[i] & mask[i]));
  return n;
}

uint64_t Graph::induced_edge_count_naive(uint32_t k_set) const {
  uint64_t n = 0;
  for (unsigned b = 0; b < v_; ++b) {
    if (!(k_set >> b & 1)) continue;
    for (unsigned a = 0; a < b; ++a)
      if ((k_set >> a & 1) && has_edge(a, b)) ++n;
  }
  return n;
}

Family Graph::three_homogeneous_sets() const {
  if (v_ < 3) throw std::invalid_argument("three_homogeneous_sets: requires v >= 3");
  Family f(v_, 3);
  for_each_subset(v_, 3, [&](uint32_t m, uint64_t r) {
    uint64_t e = induced_edge_count_naive(m);
    if (e == 0 || e == 3) f.set(r, true);
  });
  return f;
}

Family Graph::p4_sets() const {
  if (v_ < 4) throw std::invalid_argument("p4_sets: requires v >= 4");
  Family f(v_, 4);
  for_each_subset(v_, 4, [&](uint32_t m, uint64_t r) {
    Graph h = induced(m);
    // P4 signature: degrees {1,1,2,2}, connected, triangle-free
    unsigned ones = 0, twos = 0;
    for (unsigned x = 0; x < 4; ++x) {
      unsigned d = h.degree(x);
      if (d == 1) ++ones;
      if (d == 2) ++twos;
    }
    if (ones != 2 || twos != 2) return;
    if (h.component_masks().size() != 1) return;
    bool triangle = false;
    for_each_subset(4, 3, [&](uint32_t t3, uint64_t) {
      if (h.induced_edge_count_naive(t3) == 3) triangle = true;
    });
    if (!triangle) f.set(r, true);
  });
  return f;
}

Graph Graph::induced(uint32_t k_set) const {
  unsigned n = subset_cardinality(k_set);
  std::vector<unsigned> el;
  el.reserve(n);
  for (uint32_t m = k_set; m; m &= m - 1) el.push_back(static_cast<unsigned>(std::countr_zero(m)));
  Graph h(n);
  for (unsigned b = 1; b < n; ++b)
    for (unsigned a = 0; a < b; ++a)
      if (has_edge(el[a], el[b])) h.set_edge(a, b, true);
  return h;
}

std::vector<uint32_t> Graph::component_masks() const {
  std::vector<uint32_t> comps;
  uint32_t seen = 0;
  for (unsigned s = 0; s < v_; ++s) {
    if (seen >> s & 1) continue;
    uint32_t comp = 1u << s, frontier = comp;
    while (frontier) {
      unsigned x = static_cast<unsigned>(std::countr_zero(frontier));
      frontier &= frontier - 1;
      for (unsigned y = 0; y < v_; ++y)
        if (!(comp >> y & 1) && has_edge(x, y)) {
          comp |= 1u << y;
          frontier |= 1u << y;
        }
    }
    seen |= comp;
    comps.push_back(comp);
  }
  return comps;
}

bool Graph::is_complete_bipartite() const {
  Graph co = complement();
  std::vector<uint32_t> comps = co.component_masks();
  if (comps.size() > 2) return false;
  if (comps.size() <= 1) return edge_count() == 0;  // one side empty
  for (uint32_t part : comps)
    for (uint32_t hi = part; hi;) {
      unsigned b = static_cast<unsigned>(std::countr_zero(hi));
      hi &= hi - 1;
      for (uint32_t lo = part & ((1u << b) - 1); lo;) {
        unsigned a = static_cast<unsigned>(std::countr_zero(lo));
        lo &= lo - 1;
        if (has_edge(a, b)) return false;
      }
    }
  for (uint32_t x = comps[0]; x;) {
    unsigned a = static_cast<unsigned>(std::countr_zero(x));
    x &= x - 1;
    for (uint32_t y = comps[1]; y;) {
      unsigned b = static_cast<unsigned>(std::countr_zero(y));
      y &= y - 1;
      if (!has_edge(a, b)) return false;
    }
  }
  return true;
}

bool Graph::is_claw_free() const {
  bool claw = false;
  for_each_subset(v_, 4, [&](uint32_t m, uint64_t) {
    if (claw) return;
    unsigned el[4], n = 0;
    for (uint32_t x = m; x; x &= x - 1) el[n++] = static_cast<unsigned>(std::countr_zero(x));
    for (unsigned c = 0; c < 4 && !claw; ++c) {
      unsigned leaves[3], ln = 0;
      for (unsigned i = 0; i < 4; ++i)
        if (i != c) leaves[ln++] = el[i];
      if (has_edge(el[c], leaves[0]) && has_edge(el[c], leaves[1]) && has_edge(el[c], leaves[2]) &&
          !has_edge(leaves[0], leaves[1]) && !has_edge(leaves[0], leaves[2]) && !has_edge(leaves[1], leaves[2]))
        claw = true;
    }
  });
  return !claw;
}

Graph boolean_sum(const Graph& g, const Graph& g2) {
  if (g.vertex_count() != g2.vertex_count()) throw std::invalid_argument("boolean_sum: vertex counts differ");
  Graph out(g.vertex_count());
  for (unsigned b = 1; b < g.vertex_count(); ++b)
    for (unsigned a = 0; a < b; ++a)
      if (g.has_edge(a, b) != g2.has_edge(a, b)) out.set_edge(a, b, true);
  return out;
}

bool graphs_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  const unsigned n = a.vertex_count();
  if (a.edge_count() != b.edge_count()) return false;
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (unsigned y = 1; y < n && ok; ++y)
      for (unsigned x = 0; x < y && ok; ++x)
        if (a.has_edge(x, y) != b.has_edge(perm[x], perm[y])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

uint64_t count_induced_copies(const Graph& g, const Graph& pattern) {
  if (pattern.vertex_count() > 5) throw std::invalid_argument("count_induced_copies: pattern exceeds 5 vertices");
  if (pattern.vertex_count() > g.vertex_count()) return 0;
  uint64_t n = 0;
  for_each_subset(g.vertex_count(), pattern.vertex_count(), [&](uint32_t m, uint64_t) {
    if (graphs_isomorphic(g.induced(m), pattern)) ++n;
  });
  return n;
}

Graph graph_from_word(unsigned v, uint64_t word) {
  Graph g(v);
  if (g.pair_count() > 64) throw std::invalid_argument("graph_from_word: too many pairs for one word");
  for (unsigned b = 1; b < v; ++b)
    for (unsigned a = 0; a < b; ++a)
      if (word >> pair_rank(a, b) & 1) g.set_edge(a, b, true);
  return g;
}

Graph Graph::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  std::optional<Graph> g;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") {
      if (g) throw ParseError(lineno, "duplicate vertex-count line");
      long long n = -1;
      if (!(ls >> n) || n < 0 || n > static_cast<long long>(kMaxGround))
        throw ParseError(lineno, "bad vertex count");
      std::string rest;
      if (ls >> rest) throw ParseError(lineno, "trailing tokens");
      g.emplace(static_cast<unsigned>(n));
    } else if (tag == "e") {
      if (!g) throw ParseError(lineno, "edge before vertex-count line");
      long long a = -1, b = -1;
      if (!(ls >> a >> b)) throw ParseError(lineno, "bad edge line");
      std::string rest;
      if (ls >> rest) throw ParseError(lineno, "trailing tokens");
      if (a == b) throw ParseError(lineno, "loop edge");
      if (a < 0 || b < 0 || a >= static_cast<long long>(g->vertex_count()) ||
          b >= static_cast<long long>(g->vertex_count()))
        throw ParseError(lineno, "vertex out of range");
      if (a > b) throw ParseError(lineno, "edge endpoints out of order");
      if (g->has_edge(static_cast<unsigned>(a), static_cast<unsigned>(b)))
        throw ParseError(lineno, "duplicate edge");
      g->set_edge(static_cast<unsigned>(a), static_cast<unsigned>(b), true);
    } else {
      throw ParseError(lineno, "unknown line tag '" + tag + "'");
    }
  }
  if (!g) throw ParseError(lineno, "missing vertex-count line");
  return *g;
}

std::string Graph::serialize() const {
  std::ostringstream out;
  out << "v " << v_ << "\n";
  // colex pair order: by larger endpoint, then smaller
  for (unsigned b = 1; b < v_; ++b)
    for (unsigned a = 0; a < b; ++a)
      if (has_edge(a, b)) out << "e " << a << " " << b << "\n";
  return out.str();
}

}  // namespace kellymod
