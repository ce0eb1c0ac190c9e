#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "combinatorics.hpp"

namespace kellymod {

// Dense matrix over GF(p). Rows are bit-packed words for p = 2 and one byte
// per entry otherwise (p <= 251 enforced).
class ResidueMatrix {
 public:
  static constexpr uint32_t kMaxModulus = 251;

  ResidueMatrix(size_t rows, size_t cols, uint32_t p);

  uint32_t modulus() const { return p_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool bit_packed() const { return p_ == 2; }

  uint32_t get(size_t i, size_t j) const;
  void set(size_t i, size_t j, uint32_t value);  // value < p

  // raw row access for the p = 2 elimination kernels
  uint64_t* row_words(size_t i) { return words_.data() + i * wpr_; }
  const uint64_t* row_words(size_t i) const { return words_.data() + i * wpr_; }
  size_t words_per_row() const { return wpr_; }
  uint8_t* row_bytes(size_t i) { return bytes_.data() + i * cols_; }
  const uint8_t* row_bytes(size_t i) const { return bytes_.data() + i * cols_; }

 private:
  uint32_t p_;
  size_t rows_, cols_, wpr_ = 0;
  std::vector<uint8_t> bytes_;
  std::vector<uint64_t> words_;
};

class IntegerMatrix {
 public:
  IntegerMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const BigInt& get(size_t i, size_t j) const { return e_[i * cols_ + j]; }
  BigInt& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
  void set(size_t i, size_t j, BigInt v) { e_[i * cols_ + j] = std::move(v); }

  ResidueMatrix reduce_mod(uint32_t p) const;

 private:
  size_t rows_, cols_;
  std::vector<BigInt> e_;
};

// Row rank over GF(p), Gaussian elimination with first-nonzero pivoting.
size_t rank_mod_p(const ResidueMatrix& m);

// Reduced-echelon basis of { x : x . m = 0 (mod p) }, one basis vector per
// row of the result (possibly zero rows -> empty basis means 0 x rows shape).
ResidueMatrix left_kernel_mod_p(const ResidueMatrix& m);

// Exact rank over Q, fraction-free (Bareiss) elimination on big integers.
size_t rank_rational(const IntegerMatrix& m);

// Diagonal entries with multiplicities, plus the shape of the matrix the
// diagonal sits in. Entries are listed in the order produced.
struct DiagonalSpec {
  size_t rows = 0, cols = 0;
  std::vector<std::pair<BigInt, uint64_t>> entries;

  uint64_t diagonal_length() const;
  std::vector<BigInt> expanded() const;  // padded with zeros to min(rows, cols)
};

// Invariant factors d1 | d2 | ... (nonnegative, zeros trailing).
DiagonalSpec smith_normal_form(const IntegerMatrix& m, size_t dim_cap = 160);

// Invariant factors of diag(d) via pairwise gcd/lcm refinement.
std::vector<BigInt> invariant_factors_of_diagonal(std::vector<BigInt> d);

// True iff both diagonals generate the same invariant-factor sequence.
// Throws std::invalid_argument on shape mismatch.
bool diagonal_specs_equivalent(const DiagonalSpec& a, const DiagonalSpec& b);

}  // namespace kellymod
