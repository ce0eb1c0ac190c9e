#include "tournaments.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <mutex>
#include <numeric>
#include <sstream>

namespace kellymod {

Tournament::Tournament(unsigned v) : v_(v) {
  if (v > kMaxGround) throw std::invalid_argument("Tournament: vertex count exceeds 32");
  pairs_ = binomial_u64(v, 2);
  bits_.assign((pairs_ + 63) / 64, 0);
}

Tournament Tournament::chain(unsigned v) {
  Tournament t(v);
  for (size_t i = 0; i < t.bits_.size(); ++i) t.bits_[i] = ~uint64_t{0};
  if (t.pairs_ % 64 && !t.bits_.empty()) t.bits_.back() &= (uint64_t{1} << (t.pairs_ % 64)) - 1;
  return t;
}

bool Tournament::beats(unsigned x, unsigned y) const {
  uint64_t r = pair_rank(x, y);
  bool small_beats = (bits_[r / 64] >> (r % 64)) & 1;
  return x < y ? small_beats : !small_beats;
}

void Tournament::set_arc(unsigned winner, unsigned loser) {
  if (winner == loser) throw std::invalid_argument("Tournament: loop arc");
  if (winner >= v_ || loser >= v_) throw std::invalid_argument("Tournament: vertex out of range");
  uint64_t r = pair_rank(winner, loser);
  uint64_t bit = uint64_t{1} << (r % 64);
  if (winner < loser)
    bits_[r / 64] |= bit;
  else
    bits_[r / 64] &= ~bit;
}

unsigned Tournament::out_degree(unsigned x) const {
  unsigned d = 0;
  for (unsigned y = 0; y < v_; ++y)
    if (y != x && beats(x, y)) ++d;
  return d;
}

Tournament Tournament::dual() const {
  Tournament t(v_);
  for (size_t i = 0; i < bits_.size(); ++i) t.bits_[i] = ~bits_[i];
  if (pairs_ % 64 && !t.bits_.empty()) t.bits_.back() &= (uint64_t{1} << (pairs_ % 64)) - 1;
  return t;
}

Tournament Tournament::induced(uint32_t mask) const {
  unsigned n = subset_cardinality(mask);
  std::vector<unsigned> el;
  el.reserve(n);
  for (uint32_t m = mask; m; m &= m - 1) el.push_back(static_cast<unsigned>(std::countr_zero(m)));
  Tournament t(n);
  for (unsigned b = 1; b < n; ++b)
    for (unsigned a = 0; a < b; ++a)
      if (beats(el[a], el[b]))
        t.set_arc(a, b);
      else
        t.set_arc(b, a);
  return t;
}

bool Tournament::is_three_cycle(uint32_t triple) const {
  unsigned el[3], n = 0;
  for (uint32_t m = triple; m; m &= m - 1) el[n++] = static_cast<unsigned>(std::countr_zero(m));
  bool ab = beats(el[0], el[1]), bc = beats(el[1], el[2]), ac = beats(el[0], el[2]);
  return (ab && bc && !ac) || (!ab && !bc && ac);
}

Family Tournament::three_cycles() const {
  if (v_ < 3) throw std::invalid_argument("three_cycles: requires v >= 3");
  Family f(v_, 3);
  for_each_subset(v_, 3, [&](uint32_t m, uint64_t r) {
    if (is_three_cycle(m)) f.set(r, true);
  });
  return f;
}

uint64_t Tournament::c3_count() const {
  if (v_ < 3) return 0;
  uint64_t n = 0;
  for_each_subset(v_, 3, [&](uint32_t m, uint64_t) {
    if (is_three_cycle(m)) ++n;
  });
  return n;
}

bool Tournament::is_transitive() const { return c3_count() == 0; }

bool Tournament::is_interval(uint32_t mask) const {
  if (mask >> v_) throw std::invalid_argument("is_interval: subset outside vertex set");
  for (unsigned x = 0; x < v_; ++x) {
    if (mask >> x & 1) continue;
    int seen = -1;
    for (uint32_t m = mask; m; m &= m - 1) {
      unsigned a = static_cast<unsigned>(std::countr_zero(m));
      int dir = beats(a, x) ? 1 : 0;
      if (seen == -1)
        seen = dir;
      else if (seen != dir)
        return false;
    }
  }
  return true;
}

Graph Tournament::disagreement_graph(const Tournament& other) const {
  if (v_ != other.v_) throw std::invalid_argument("disagreement_graph: vertex counts differ");
  Graph g(v_);
  for (unsigned b = 1; b < v_; ++b)
    for (unsigned a = 0; a < b; ++a)
      if (beats(a, b) != other.beats(a, b)) g.set_edge(a, b, true);
  return g;
}

Tournament Tournament::circular(unsigned h) {
  Tournament t(2 * h + 1);
  for (unsigned b = 1; b <= h; ++b)
    for (unsigned a = 0; a < b; ++a) t.set_arc(a, b);
  for (unsigned b = h + 2; b <= 2 * h; ++b)
    for (unsigned a = h + 1; a < b; ++a) t.set_arc(a, b);
  for (unsigned i = 0; i + 1 <= h; ++i) {
    unsigned w = i + h + 1;
    for (unsigned a = 0; a <= i; ++a) t.set_arc(w, a);
    for (unsigned a = i + 1; a <= h; ++a) t.set_arc(a, w);
  }
  return t;
}

Tournament Tournament::lexicographic_sum(const Tournament& skeleton, const std::vector<Tournament>& parts) {
  if (parts.size() != skeleton.vertex_count())
    throw std::invalid_argument("lexicographic_sum: one part per skeleton vertex required");
  unsigned v = 0;
  std::vector<unsigned> offset(parts.size());
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].vertex_count() == 0) throw std::invalid_argument("lexicographic_sum: empty part");
    offset[i] = v;
    v += parts[i].vertex_count();
  }
  Tournament t(v);
  for (size_t i = 0; i < parts.size(); ++i) {
    const Tournament& p = parts[i];
    for (unsigned b = 1; b < p.vertex_count(); ++b)
      for (unsigned a = 0; a < b; ++a)
        if (p.beats(a, b))
          t.set_arc(offset[i] + a, offset[i] + b);
        else
          t.set_arc(offset[i] + b, offset[i] + a);
    for (size_t j = 0; j < i; ++j) {
      bool i_beats_j = skeleton.beats(static_cast<unsigned>(i), static_cast<unsigned>(j));
      for (unsigned a = 0; a < p.vertex_count(); ++a)
        for (unsigned b = 0; b < parts[j].vertex_count(); ++b)
          if (i_beats_j)
            t.set_arc(offset[i] + a, offset[j] + b);
          else
            t.set_arc(offset[j] + b, offset[i] + a);
    }
  }
  return t;
}

const char* class4_name(Class4 c) {
  switch (c) {
    case Class4::Chain4: return "chain";
    case Class4::Cycle4: return "cycle";
    case Class4::DiamondPlus: return "diamond+";
    case Class4::DiamondMinus: return "diamond-";
  }
  return "?";
}

Class4 classify_4(const Tournament& t, uint32_t four_set) {
  if (subset_cardinality(four_set) != 4) throw std::invalid_argument("classify_4: requires a 4-subset");
  unsigned el[4], n = 0;
  for (uint32_t m = four_set; m; m &= m - 1) el[n++] = static_cast<unsigned>(std::countr_zero(m));
  unsigned cycles = 0;
  uint32_t cycle_triple = 0;
  for (unsigned drop = 0; drop < 4; ++drop) {
    uint32_t triple = four_set & ~(1u << el[drop]);
    if (t.is_three_cycle(triple)) {
      ++cycles;
      cycle_triple = triple;
    }
  }
  if (cycles == 0) return Class4::Chain4;
  if (cycles == 2) return Class4::Cycle4;
  // lone 3-cycle: the remaining vertex sees it uniformly
  unsigned d = static_cast<unsigned>(std::countr_zero(four_set & ~cycle_triple));
  unsigned beats_d = 0;
  for (uint32_t m = cycle_triple; m; m &= m - 1)
    if (t.beats(static_cast<unsigned>(std::countr_zero(m)), d)) ++beats_d;
  if (beats_d == 3) return Class4::DiamondPlus;
  if (beats_d == 0) return Class4::DiamondMinus;
  throw std::logic_error("classify_4: lone 3-cycle is not an interval");
}

std::pair<Family, Family> diamond_sets(const Tournament& t) {
  if (t.vertex_count() < 4) throw std::invalid_argument("diamond_sets: requires v >= 4");
  Family plus(t.vertex_count(), 4), minus(t.vertex_count(), 4);
  for_each_subset(t.vertex_count(), 4, [&](uint32_t m, uint64_t r) {
    Class4 c = classify_4(t, m);
    if (c == Class4::DiamondPlus) plus.set(r, true);
    if (c == Class4::DiamondMinus) minus.set(r, true);
  });
  return {plus, minus};
}

Tournament diamond_plus() {
  Tournament t(4);
  t.set_arc(0, 1);
  t.set_arc(1, 2);
  t.set_arc(2, 0);
  t.set_arc(0, 3);
  t.set_arc(1, 3);
  t.set_arc(2, 3);
  return t;
}

Tournament beta6_plus() {
  return Tournament::lexicographic_sum(Tournament::circular(1),
                                       {Tournament::chain(3), Tournament::chain(2), Tournament::chain(1)});
}

std::pair<Family, Family> beta6_sets(const Tournament& t) {
  if (t.vertex_count() < 6) throw std::invalid_argument("beta6_sets: requires v >= 6");
  static const uint32_t plus_code = [] {
    Tournament b = beta6_plus();
    return canonical_tournament_code(6, induced_code(b, (1u << 6) - 1));
  }();
  static const uint32_t minus_code = canonical_tournament_code(6, dual_code(6, plus_code));
  Family plus(t.vertex_count(), 6), minus(t.vertex_count(), 6);
  for_each_subset(t.vertex_count(), 6, [&](uint32_t m, uint64_t r) {
    uint32_t canon = canonical_tournament_code(6, induced_code(t, m));
    if (canon == plus_code) plus.set(r, true);
    if (canon == minus_code) minus.set(r, true);
  });
  return {plus, minus};
}

uint32_t induced_code(const Tournament& t, uint32_t mask) {
  unsigned n = subset_cardinality(mask);
  if (n > 8) throw std::invalid_argument("induced_code: subset exceeds 8 vertices");
  unsigned el[8], c = 0;
  for (uint32_t m = mask; m; m &= m - 1) el[c++] = static_cast<unsigned>(std::countr_zero(m));
  uint32_t code = 0;
  for (unsigned b = 1; b < n; ++b)
    for (unsigned a = 0; a < b; ++a)
      if (t.beats(el[a], el[b])) code |= 1u << pair_rank(a, b);
  return code;
}

uint32_t dual_code(unsigned n, uint32_t code) {
  uint64_t pairs = binomial_u64(n, 2);
  return static_cast<uint32_t>(~code & ((uint64_t{1} << pairs) - 1));
}

namespace {

constexpr unsigned kMaxCanon = 7;

const std::vector<std::array<uint8_t, kMaxCanon>>& permutations_of(unsigned n) {
  static std::vector<std::array<uint8_t, kMaxCanon>> tables[kMaxCanon + 1];
  static std::once_flag flags[kMaxCanon + 1];
  std::call_once(flags[n], [n] {
    std::array<uint8_t, kMaxCanon> p{};
    std::iota(p.begin(), p.begin() + n, static_cast<uint8_t>(0));
    do {
      tables[n].push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + n));
  });
  return tables[n];
}

uint32_t recode(unsigned n, uint32_t code, const std::array<uint8_t, kMaxCanon>& perm) {
  // bit (i<j) of result = original orientation between perm[i], perm[j]
  uint32_t out = 0;
  for (unsigned j = 1; j < n; ++j)
    for (unsigned i = 0; i < j; ++i) {
      unsigned a = perm[i], b = perm[j];
      bool small_beats = code >> pair_rank(a, b) & 1;
      bool i_beats_j = a < b ? small_beats : !small_beats;
      if (i_beats_j) out |= 1u << pair_rank(i, j);
    }
  return out;
}

// Write-once canonical-code tables, one per vertex count, filled orbit by
// orbit on first lookup.
std::atomic<uint32_t>* canon_table(unsigned n) {
  static std::vector<std::atomic<uint32_t>> tables[kMaxCanon + 1];
  static std::once_flag flags[kMaxCanon + 1];
  std::call_once(flags[n], [n] {
    size_t size = size_t{1} << binomial_u64(n, 2);
    tables[n] = std::vector<std::atomic<uint32_t>>(size);
    for (auto& x : tables[n]) x.store(UINT32_MAX, std::memory_order_relaxed);
  });
  return tables[n].data();
}

}  // namespace

uint32_t canonical_tournament_code(unsigned n, uint32_t code) {
  if (n > kMaxCanon) throw std::invalid_argument("canonical_tournament_code: exceeds 7 vertices");
  std::atomic<uint32_t>* table = canon_table(n);
  uint32_t cached = table[code].load(std::memory_order_relaxed);
  if (cached != UINT32_MAX) return cached;
  const auto& perms = permutations_of(n);
  std::vector<uint32_t> orbit;
  orbit.reserve(perms.size());
  uint32_t best = code;
  for (const auto& p : perms) {
    uint32_t r = recode(n, code, p);
    orbit.push_back(r);
    best = std::min(best, r);
  }
  for (uint32_t r : orbit) table[r].store(best, std::memory_order_relaxed);
  return best;
}

bool induced_isomorphic(const Tournament& a, uint32_t ma, const Tournament& b, uint32_t mb) {
  unsigned n = subset_cardinality(ma);
  if (n != subset_cardinality(mb)) return false;
  return canonical_tournament_code(n, induced_code(a, ma)) == canonical_tournament_code(n, induced_code(b, mb));
}

bool is_k_hypomorphic(const Tournament& a, const Tournament& b, unsigned k, bool up_to_duality) {
  if (a.vertex_count() != b.vertex_count()) throw std::invalid_argument("is_k_hypomorphic: vertex counts differ");
  if (k > kMaxCanon) throw std::length_error("is_k_hypomorphic: k exceeds 7");
  if (k > a.vertex_count()) throw std::invalid_argument("is_k_hypomorphic: k exceeds vertex count");
  bool ok = true;
  for_each_subset(a.vertex_count(), k, [&](uint32_t m, uint64_t) {
    if (!ok) return;
    uint32_t ca = canonical_tournament_code(k, induced_code(a, m));
    uint32_t cb = canonical_tournament_code(k, induced_code(b, m));
    if (ca == cb) return;
    if (up_to_duality && canonical_tournament_code(k, dual_code(k, induced_code(a, m))) == cb) return;
    ok = false;
  });
  return ok;
}

bool is_hypomorphic_up_to(const Tournament& a, const Tournament& b, unsigned k, bool up_to_duality) {
  for (unsigned h = 1; h <= k; ++h)
    if (!is_k_hypomorphic(a, b, h, up_to_duality)) return false;
  return true;
}

namespace {

struct Dsu {
  std::vector<unsigned> parent;
  explicit Dsu(unsigned n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  unsigned find(unsigned x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(unsigned a, unsigned b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<uint32_t> difference_classes(const Tournament& a, const Tournament& b) {
  if (a.vertex_count() != b.vertex_count())
    throw std::invalid_argument("difference_classes: vertex counts differ");
  const unsigned v = a.vertex_count();
  Dsu dsu(v);
  for (unsigned y = 1; y < v; ++y)
    for (unsigned x = 0; x < y; ++x)
      if (a.beats(x, y) != b.beats(x, y)) dsu.unite(x, y);
  std::vector<uint32_t> classes;
  for (unsigned x = 0; x < v; ++x)
    if (dsu.find(x) == x) {
      uint32_t mask = 0;
      for (unsigned y = 0; y < v; ++y)
        if (dsu.find(y) == x) mask |= 1u << y;
      classes.push_back(mask);
    }
  std::sort(classes.begin(), classes.end(),
            [](uint32_t l, uint32_t r) { return std::countr_zero(l) < std::countr_zero(r); });
  return classes;
}

std::vector<unsigned> CircularDecomposition::lengths() const {
  std::vector<unsigned> out;
  out.reserve(chains.size());
  for (uint32_t c : chains) out.push_back(subset_cardinality(c));
  return out;
}

std::optional<CircularDecomposition> recognize_circular_decomposition(const Tournament& t) {
  const unsigned v = t.vertex_count();
  if (v == 0) return std::nullopt;
  if (v >= 4) {
    bool diamond = false;
    for_each_subset(v, 4, [&](uint32_t m, uint64_t) {
      if (diamond) return;
      Class4 c = classify_4(t, m);
      if (c == Class4::DiamondPlus || c == Class4::DiamondMinus) diamond = true;
    });
    if (diamond) return std::nullopt;
  }
  // maximal chain intervals: transitive closure of pair intervals
  Dsu dsu(v);
  for (unsigned y = 1; y < v; ++y)
    for (unsigned x = 0; x < y; ++x)
      if (t.is_interval((1u << x) | (1u << y))) dsu.unite(x, y);
  std::vector<uint32_t> classes;
  for (unsigned x = 0; x < v; ++x)
    if (dsu.find(x) == x) {
      uint32_t mask = 0;
      for (unsigned y = 0; y < v; ++y)
        if (dsu.find(y) == x) mask |= 1u << y;
      classes.push_back(mask);
    }
  for (uint32_t c : classes) {
    if (!t.is_interval(c)) return std::nullopt;
    if (subset_cardinality(c) >= 3 && t.induced(c).c3_count() != 0) return std::nullopt;
  }
  const unsigned m = static_cast<unsigned>(classes.size());
  if (m == 1) {
    if (!t.is_transitive()) return std::nullopt;
    CircularDecomposition d;
    d.h = 0;
    d.chains = {v >= 32 ? ~0u : (1u << v) - 1};
    return d;
  }
  if (m % 2 == 0) return std::nullopt;
  const unsigned h = (m - 1) / 2;
  // quotient on class representatives (least elements)
  std::vector<unsigned> rep(m);
  for (unsigned i = 0; i < m; ++i) rep[i] = static_cast<unsigned>(std::countr_zero(classes[i]));
  auto beats_q = [&](unsigned i, unsigned j) { return t.beats(rep[i], rep[j]); };
  std::vector<uint32_t> outset(m, 0);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j)
      if (i != j && beats_q(i, j)) outset[i] |= 1u << j;
  for (unsigned i = 0; i < m; ++i)
    if (static_cast<unsigned>(std::popcount(outset[i])) != h) return std::nullopt;
  // walk the rotation: the successor of x beats everything x beats except itself
  std::vector<unsigned> seq;
  seq.reserve(m);
  std::vector<bool> used(m, false);
  unsigned cur = 0;
  seq.push_back(cur);
  used[cur] = true;
  for (unsigned step = 1; step < m; ++step) {
    int next = -1;
    for (uint32_t cand = outset[cur]; cand;) {
      unsigned y = static_cast<unsigned>(std::countr_zero(cand));
      cand &= cand - 1;
      if ((outset[cur] & ~(1u << y) & ~outset[y]) == 0) {
        if (next != -1) return std::nullopt;
        next = static_cast<int>(y);
      }
    }
    if (next == -1 || used[next]) return std::nullopt;
    cur = static_cast<unsigned>(next);
    seq.push_back(cur);
    used[cur] = true;
  }
  // verify the rotational rule over the discovered order
  for (unsigned i = 0; i < m; ++i)
    for (unsigned d = 1; d < m; ++d) {
      bool expect = d <= h;
      if (beats_q(seq[i], seq[(i + d) % m]) != expect) return std::nullopt;
    }
  // rotation-minimal labelling: least length sequence, ties by least vertex
  std::vector<unsigned> len(m);
  for (unsigned i = 0; i < m; ++i) len[i] = subset_cardinality(classes[seq[i]]);
  unsigned best = 0;
  for (unsigned r = 1; r < m; ++r) {
    for (unsigned i = 0; i < m; ++i) {
      unsigned a = len[(best + i) % m], b = len[(r + i) % m];
      if (a != b) {
        if (b < a) best = r;
        break;
      }
      if (i + 1 == m) {
        unsigned va = rep[seq[best]], vb = rep[seq[r]];
        if (vb < va) best = r;
      }
    }
  }
  CircularDecomposition d;
  d.h = h;
  d.chains.reserve(m);
  for (unsigned i = 0; i < m; ++i) d.chains.push_back(classes[seq[(best + i) % m]]);
  return d;
}

bool chains_match_up_to_rotation(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const size_t m = a.size();
  for (size_t r = 0; r < m; ++r) {
    bool ok = true;
    for (size_t i = 0; i < m && ok; ++i)
      if (a[i] != b[(i + r) % m]) ok = false;
    if (ok) return true;
  }
  return false;
}

Tournament tournament_from_word(unsigned v, uint64_t word) {
  Tournament t(v);
  if (binomial_u64(v, 2) > 64) throw std::invalid_argument("tournament_from_word: too many pairs for one word");
  for (unsigned b = 1; b < v; ++b)
    for (unsigned a = 0; a < b; ++a)
      if (word >> pair_rank(a, b) & 1)
        t.set_arc(a, b);
      else
        t.set_arc(b, a);
  return t;
}

uint64_t tournament_word(const Tournament& t) {
  const unsigned v = t.vertex_count();
  if (binomial_u64(v, 2) > 64) throw std::invalid_argument("tournament_word: too many pairs for one word");
  uint64_t w = 0;
  for (unsigned b = 1; b < v; ++b)
    for (unsigned a = 0; a < b; ++a)
      if (t.beats(a, b)) w |= uint64_t{1} << pair_rank(a, b);
  return w;
}

Tournament Tournament::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  std::optional<Tournament> t;
  std::vector<bool> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") {
      if (t) throw ParseError(lineno, "duplicate vertex-count line");
      long long n = -1;
      if (!(ls >> n) || n < 0 || n > static_cast<long long>(kMaxGround))
        throw ParseError(lineno, "bad vertex count");
      std::string rest;
      if (ls >> rest) throw ParseError(lineno, "trailing tokens");
      t.emplace(static_cast<unsigned>(n));
      seen.assign(binomial_u64(static_cast<unsigned>(n), 2), false);
    } else if (tag == "a") {
      if (!t) throw ParseError(lineno, "arc before vertex-count line");
      long long a = -1, b = -1;
      if (!(ls >> a >> b)) throw ParseError(lineno, "bad arc line");
      std::string rest;
      if (ls >> rest) throw ParseError(lineno, "trailing tokens");
      if (a == b) throw ParseError(lineno, "loop arc");
      if (a < 0 || b < 0 || a >= static_cast<long long>(t->vertex_count()) ||
          b >= static_cast<long long>(t->vertex_count()))
        throw ParseError(lineno, "vertex out of range");
      uint64_t r = pair_rank(static_cast<unsigned>(a), static_cast<unsigned>(b));
      if (seen[r]) throw ParseError(lineno, "duplicate pair");
      seen[r] = true;
      t->set_arc(static_cast<unsigned>(a), static_cast<unsigned>(b));
    } else {
      throw ParseError(lineno, "unknown line tag '" + tag + "'");
    }
  }
  if (!t) throw ParseError(lineno, "missing vertex-count line");
  for (bool s : seen)
    if (!s) throw ParseError(lineno, "missing pair");
  return *t;
}

std::string Tournament::serialize() const {
  std::ostringstream out;
  out << "v " << v_ << "\n";
  for (unsigned b = 1; b < v_; ++b)
    for (unsigned a = 0; a < b; ++a) {
      if (beats(a, b))
        out << "a " << a << " " << b << "\n";
      else
        out << "a " << b << " " << a << "\n";
    }
  return out.str();
}

}  // namespace kellymod
