#include "incidence.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace kellymod {

uint64_t matrix_entry_cap() {
  static const uint64_t cap = [] {
    if (const char* env = std::getenv("KELLYMOD_ENTRY_CAP")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<uint64_t>(v);
    }
    return uint64_t{1} << 28;
  }();
  return cap;
}

InclusionMatrix::InclusionMatrix(unsigned v, unsigned t, unsigned k)
    : v_(v), t_(t), k_(k), rows_(binomial_u64(v, t)), cols_(binomial_u64(v, k)) {
  bits_.assign(rows_ * cols_, 0);
  if (t > k) return;  // no containments
  // For each column K enumerate the t-subsets of K directly.
  std::vector<unsigned> elems(k);
  for_each_subset(v, k, [&](uint32_t kmask, uint64_t kj) {
    unsigned n = 0;
    for (uint32_t m = kmask; m; m &= m - 1) elems[n++] = static_cast<unsigned>(std::countr_zero(m));
    for_each_subset(k, t, [&](uint32_t idxmask, uint64_t) {
      uint32_t tmask = 0;
      for (uint32_t m = idxmask; m; m &= m - 1) tmask |= 1u << elems[std::countr_zero(m)];
      bits_[subset_rank(tmask) * cols_ + kj] = 1;
    });
  });
}

ResidueMatrix InclusionMatrix::to_residue(uint32_t p) const {
  ResidueMatrix out(rows_, cols_, p);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (bits_[i * cols_ + j]) out.set(i, j, 1);
  return out;
}

IntegerMatrix InclusionMatrix::to_integer() const {
  IntegerMatrix out(rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (bits_[i * cols_ + j]) out.set(i, j, 1);
  return out;
}

InclusionMatrix build_inclusion_matrix(unsigned v, unsigned t, unsigned k) {
  if (v > kMaxGround || t > v || k > v)
    throw std::invalid_argument("build_inclusion_matrix: requires t, k <= v <= 32");
  const uint64_t product = binomial_u64(v, t) * binomial_u64(v, k);
  if (product > matrix_entry_cap())
    throw std::length_error("build_inclusion_matrix: entry count " + std::to_string(product) +
                            " exceeds cap " + std::to_string(matrix_entry_cap()));
  return InclusionMatrix(v, t, k);
}

namespace {

void require_wilson_precondition(unsigned v, unsigned t, unsigned k, const char* who) {
  if (k > v || t > k || t > v - k)
    throw std::invalid_argument(std::string(who) + ": requires t <= min(k, v-k)");
}

}  // namespace

uint64_t wilson_rank(unsigned v, unsigned t, unsigned k, uint32_t p) {
  require_wilson_precondition(v, t, k, "wilson_rank");
  if (!is_prime(p)) throw std::invalid_argument("wilson_rank: modulus must be prime");
  uint64_t rank = 0;
  for (unsigned i = 0; i <= t; ++i) {
    if (p_divides_binomial(k - i, t - i, p)) continue;
    rank += binomial_u64(v, i) - binomial_u64(v, static_cast<long long>(i) - 1);
  }
  return rank;
}

DiagonalSpec wilson_diagonal(unsigned v, unsigned t, unsigned k) {
  require_wilson_precondition(v, t, k, "wilson_diagonal");
  DiagonalSpec spec;
  spec.rows = binomial_u64(v, t);
  spec.cols = binomial_u64(v, k);
  for (unsigned i = 0; i <= t; ++i) {
    uint64_t mult = binomial_u64(v, i) - binomial_u64(v, static_cast<long long>(i) - 1);
    spec.entries.emplace_back(binomial(k - i, static_cast<long long>(t) - i), mult);
  }
  return spec;
}

KernelClass kernel_class(unsigned t, unsigned k, uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("kernel_class: modulus must be prime");
  if (k < t) throw std::invalid_argument("kernel_class: requires k >= t");
  if (t == 0) return {KernelTag::Trivial, 0};
  DigitVector td = digits_base_p(t, p);
  DigitVector kd = digits_base_p(k, p);
  const size_t n = td.top_index();  // t(p)
  bool low_equal = true;
  for (size_t i = 0; i < n; ++i)
    if (kd.digit(i) != td.digit(i)) low_equal = false;
  if (low_equal && kd.digit(n) >= td.digit(n)) return {KernelTag::Trivial, 0};
  bool t_single = true;
  for (size_t i = 0; i < n; ++i)
    if (td.digit(i) != 0) t_single = false;
  bool k_high = true;
  for (size_t i = 0; i <= n; ++i)
    if (kd.digit(i) != 0) k_high = false;
  if (t_single && k_high) return {KernelTag::AllOnes, 1};
  return {KernelTag::Other, std::nullopt};
}

const char* kernel_tag_name(KernelTag tag) {
  switch (tag) {
    case KernelTag::Trivial: return "trivial";
    case KernelTag::AllOnes: return "all-ones";
    case KernelTag::Other: return "other";
  }
  return "?";
}

uint64_t kernel_dim(unsigned v, unsigned t, unsigned k, uint32_t p) {
  return binomial_u64(v, t) - wilson_rank(v, t, k, p);
}

IntegerMatrix kneser_adjacency(unsigned t, unsigned v) {
  if (2 * t > v) throw std::invalid_argument("kneser_adjacency: requires 2t <= v");
  if (v > kMaxGround) throw std::invalid_argument("kneser_adjacency: ground set exceeds 32");
  const uint64_t n = binomial_u64(v, t);
  if (n * n > matrix_entry_cap()) throw std::length_error("kneser_adjacency: entry count exceeds cap");
  std::vector<uint32_t> subs = subsets_colex(v, t);
  IntegerMatrix a(n, n);
  for (size_t i = 0; i < subs.size(); ++i)
    for (size_t j = 0; j < subs.size(); ++j)
      if ((subs[i] & subs[j]) == 0) a.set(i, j, 1);
  return a;
}

}  // namespace kellymod
