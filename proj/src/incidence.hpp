#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linalg.hpp"

namespace kellymod {

// W[t,k]: rows indexed by t-subsets, columns by k-subsets of a v-set, both in
// colex order; entry 1 iff the row subset is contained in the column subset.
class InclusionMatrix {
 public:
  InclusionMatrix(unsigned v, unsigned t, unsigned k);

  unsigned v() const { return v_; }
  unsigned t() const { return t_; }
  unsigned k() const { return k_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  uint8_t get(size_t i, size_t j) const { return bits_[i * cols_ + j]; }

  ResidueMatrix to_residue(uint32_t p) const;
  IntegerMatrix to_integer() const;

 private:
  unsigned v_, t_, k_;
  size_t rows_, cols_;
  std::vector<uint8_t> bits_;
};

// Matrix entry cap applied when building W[t,k]; KELLYMOD_ENTRY_CAP overrides.
uint64_t matrix_entry_cap();

InclusionMatrix build_inclusion_matrix(unsigned v, unsigned t, unsigned k);

// Rank of W[t,k] mod p by the diagonal-form formula; requires t <= min(k, v-k).
uint64_t wilson_rank(unsigned v, unsigned t, unsigned k, uint32_t p);

// Diagonal form of W[t,k]: entry C(k-i, t-i) with multiplicity C(v,i)-C(v,i-1).
DiagonalSpec wilson_diagonal(unsigned v, unsigned t, unsigned k);

enum class KernelTag { Trivial, AllOnes, Other };

struct KernelClass {
  KernelTag tag = KernelTag::Other;
  // 0 for Trivial, 1 for AllOnes; unknown without v otherwise.
  std::optional<uint64_t> dim;
};

// Predicted left-kernel structure of W[t,k] mod p from the base-p digits of
// t and k alone. t = 0 is defined as Trivial (a 1 x N all-ones row has zero
// left kernel); flagged in reports as an extension of the digit conditions.
KernelClass kernel_class(unsigned t, unsigned k, uint32_t p);

const char* kernel_tag_name(KernelTag tag);

// Kernel dimension C(v,t) - wilson_rank(...); same precondition as wilson_rank.
uint64_t kernel_dim(unsigned v, unsigned t, unsigned k, uint32_t p);

// Adjacency matrix of the Kneser graph KG(t, v): square of side C(v,t),
// entry 1 iff the two t-subsets are disjoint. Requires 2t <= v.
IntegerMatrix kneser_adjacency(unsigned t, unsigned v);

}  // namespace kellymod
