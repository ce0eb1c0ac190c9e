#include <doctest.h>

#include "incidence.hpp"

using namespace kellymod;

TEST_CASE("inclusion matrix shapes and counting") {
  InclusionMatrix w412 = build_inclusion_matrix(4, 1, 2);
  CHECK(w412.rows() == 4);
  CHECK(w412.cols() == 6);
  for (size_t j = 0; j < w412.cols(); ++j) {
    unsigned ones = 0;
    for (size_t i = 0; i < w412.rows(); ++i) ones += w412.get(i, j);
    CHECK(ones == 2);  // each pair contains two points
  }

  InclusionMatrix row = build_inclusion_matrix(5, 0, 3);
  CHECK(row.rows() == 1);
  for (size_t j = 0; j < row.cols(); ++j) CHECK(row.get(0, j) == 1);

  InclusionMatrix w623 = build_inclusion_matrix(6, 2, 3);
  CHECK(w623.rows() == 15);
  CHECK(w623.cols() == 20);
  for (size_t j = 0; j < w623.cols(); ++j) {
    unsigned ones = 0;
    for (size_t i = 0; i < w623.rows(); ++i) ones += w623.get(i, j);
    CHECK(ones == 3);
  }
  for (size_t i = 0; i < w623.rows(); ++i) {
    unsigned ones = 0;
    for (size_t j = 0; j < w623.cols(); ++j) ones += w623.get(i, j);
    CHECK(ones == 4);
  }

  // degenerate: t > k gives the zero matrix
  InclusionMatrix w320 = build_inclusion_matrix(3, 2, 0);
  CHECK(w320.rows() == 3);
  CHECK(w320.cols() == 1);
  for (size_t i = 0; i < 3; ++i) CHECK(w320.get(i, 0) == 0);
}

TEST_CASE("column and row sums across the small grid") {
  for (unsigned v = 2; v <= 8; ++v)
    for (unsigned k = 0; k <= v; ++k)
      for (unsigned t = 0; t <= k; ++t) {
        InclusionMatrix w = build_inclusion_matrix(v, t, k);
        uint64_t colsum_expect = binomial_u64(k, t);
        uint64_t rowsum_expect = binomial_u64(v - t, k - t);
        for (size_t j = 0; j < w.cols(); ++j) {
          uint64_t s = 0;
          for (size_t i = 0; i < w.rows(); ++i) s += w.get(i, j);
          CHECK(s == colsum_expect);
        }
        for (size_t i = 0; i < w.rows(); ++i) {
          uint64_t s = 0;
          for (size_t j = 0; j < w.cols(); ++j) s += w.get(i, j);
          CHECK(s == rowsum_expect);
        }
      }
}

TEST_CASE("entry cap guards construction") {
  CHECK_THROWS_AS(build_inclusion_matrix(32, 16, 16), std::length_error);
}

TEST_CASE("Wilson rank formula against elimination") {
  CHECK(wilson_rank(6, 2, 3, 2) == 10);
  CHECK(wilson_rank(6, 2, 4, 2) == 14);
  CHECK(kernel_dim(6, 2, 4, 2) == 1);
  CHECK(wilson_rank(8, 2, 6, 2) == 28);
  CHECK_THROWS_AS(wilson_rank(6, 3, 4, 2), std::invalid_argument);  // t > v-k
  CHECK_THROWS_AS(wilson_rank(6, 2, 3, 4), std::invalid_argument);  // p not prime

  for (uint32_t p : {2u, 3u, 5u, 7u})
    for (unsigned v = 0; v <= 8; ++v)
      for (unsigned k = 0; k <= v; ++k)
        for (unsigned t = 0; t <= std::min({k, v - k, 4u}); ++t) {
          InclusionMatrix w = build_inclusion_matrix(v, t, k);
          CHECK(wilson_rank(v, t, k, p) == rank_mod_p(w.to_residue(p)));
        }
}

TEST_CASE("rational rank of W[t,k] is the row count") {
  CHECK(rank_rational(build_inclusion_matrix(6, 2, 3).to_integer()) == 15);
  for (unsigned v = 0; v <= 8; ++v)
    for (unsigned k = 0; k <= v; ++k)
      for (unsigned t = 0; t <= std::min({k, v - k, 3u}); ++t)
        CHECK(rank_rational(build_inclusion_matrix(v, t, k).to_integer()) == binomial_u64(v, t));
}

TEST_CASE("Wilson diagonal form") {
  DiagonalSpec d412 = wilson_diagonal(4, 1, 2);
  REQUIRE(d412.entries.size() == 2);
  CHECK(d412.entries[0].first == 2);
  CHECK(d412.entries[0].second == 1);
  CHECK(d412.entries[1].first == 1);
  CHECK(d412.entries[1].second == 3);

  DiagonalSpec row = wilson_diagonal(7, 0, 3);
  REQUIRE(row.entries.size() == 1);
  CHECK(row.entries[0].first == 1);
  CHECK(row.entries[0].second == 1);

  DiagonalSpec d623 = wilson_diagonal(6, 2, 3);
  REQUIRE(d623.entries.size() == 3);
  CHECK(d623.entries[0] == std::pair<BigInt, uint64_t>{3, 1});
  CHECK(d623.entries[1] == std::pair<BigInt, uint64_t>{2, 5});
  CHECK(d623.entries[2] == std::pair<BigInt, uint64_t>{1, 9});

  // the vertex-edge matrix of the 4-set: invariant factors (1,1,1,2), the
  // Smith form of the diagonal entries 2 (mult 1), 1 (mult 3)
  DiagonalSpec snf = smith_normal_form(build_inclusion_matrix(4, 1, 2).to_integer());
  CHECK(snf.expanded() == std::vector<BigInt>{1, 1, 1, 2});
  CHECK(diagonal_specs_equivalent(snf, wilson_diagonal(4, 1, 2)));

  for (unsigned v = 2; v <= 7; ++v)
    for (unsigned k = 0; k <= v; ++k)
      for (unsigned t = 0; t <= std::min({k, v - k, 3u}); ++t)
        CHECK(diagonal_specs_equivalent(smith_normal_form(build_inclusion_matrix(v, t, k).to_integer()),
                                        wilson_diagonal(v, t, k)));
}

TEST_CASE("kernel class prediction") {
  CHECK(kernel_class(2, 6, 2).tag == KernelTag::Trivial);
  CHECK(kernel_class(2, 4, 2).tag == KernelTag::AllOnes);
  CHECK(kernel_class(3, 9, 3).tag == KernelTag::AllOnes);
  CHECK(kernel_class(2, 3, 2).tag == KernelTag::Other);
  CHECK(kernel_class(0, 4, 3).tag == KernelTag::Trivial);
  CHECK_THROWS_AS(kernel_class(2, 4, 6), std::invalid_argument);
  CHECK_THROWS_AS(kernel_class(4, 2, 3), std::invalid_argument);

  // t = 0: the all-ones row has full row rank, so an empty left kernel
  ResidueMatrix row = build_inclusion_matrix(5, 0, 2).to_residue(3);
  CHECK(left_kernel_mod_p(row).rows() == 0);

  // the (3, 9, 3) prediction against an actual kernel (needs v >= 12)
  ResidueMatrix w39 = build_inclusion_matrix(12, 3, 9).to_residue(3);
  ResidueMatrix basis = left_kernel_mod_p(w39);
  REQUIRE(basis.rows() == 1);
  for (size_t j = 0; j < basis.cols(); ++j) CHECK(basis.get(0, j) == 1);

  // Other regime with kernel dimension v-1
  for (unsigned v : {6u, 7u}) {
    ResidueMatrix w23 = build_inclusion_matrix(v, 2, 3).to_residue(2);
    CHECK(left_kernel_mod_p(w23).rows() == v - 1);
  }

  // prediction matches computation across a grid
  for (uint32_t p : {2u, 3u, 5u})
    for (unsigned v = 1; v <= 8; ++v)
      for (unsigned k = 0; k <= v; ++k)
        for (unsigned t = 0; t <= std::min({k, v - k, 3u}); ++t) {
          ResidueMatrix basis2 = left_kernel_mod_p(build_inclusion_matrix(v, t, k).to_residue(p));
          bool all_ones = basis2.rows() == 1;
          if (all_ones)
            for (size_t j = 0; j < basis2.cols(); ++j)
              if (basis2.get(0, j) != 1) all_ones = false;
          switch (kernel_class(t, k, p).tag) {
            case KernelTag::Trivial: CHECK(basis2.rows() == 0); break;
            case KernelTag::AllOnes: CHECK(all_ones); break;
            case KernelTag::Other:
              CHECK(basis2.rows() >= 1);
              CHECK_FALSE(all_ones);
              break;
          }
        }
}

TEST_CASE("Kneser adjacency") {
  IntegerMatrix a12 = kneser_adjacency(1, 2);
  CHECK(a12.rows() == 2);
  CHECK(a12.get(0, 0) == 0);
  CHECK(a12.get(0, 1) == 1);
  CHECK(a12.get(1, 0) == 1);
  CHECK(a12.get(1, 1) == 0);

  // Petersen graph: 3-regular, full rank
  IntegerMatrix pet = kneser_adjacency(2, 5);
  CHECK(pet.rows() == 10);
  for (size_t i = 0; i < 10; ++i) {
    BigInt deg = 0;
    for (size_t j = 0; j < 10; ++j) deg += pet.get(i, j);
    CHECK(deg == 3);
  }
  CHECK(rank_rational(pet) == 10);

  CHECK_THROWS_AS(kneser_adjacency(3, 5), std::invalid_argument);

  for (unsigned v = 0; v <= 9; ++v)
    for (unsigned t = 0; 2 * t <= v && t <= 3; ++t) {
      IntegerMatrix a = kneser_adjacency(t, v);
      // symmetric, zero diagonal
      for (size_t i = 0; i < a.rows(); ++i) {
        if (t >= 1) CHECK(a.get(i, i) == 0);
        for (size_t j = 0; j < a.cols(); ++j) CHECK(a.get(i, j) == a.get(j, i));
      }
      // equals W[t, v-t] with columns relabelled by complementation
      InclusionMatrix w = build_inclusion_matrix(v, t, v - t);
      const uint32_t full = v >= 32 ? ~0u : (1u << v) - 1;
      for (size_t i = 0; i < a.rows(); ++i)
        for_each_subset(v, v - t, [&](uint32_t kmask, uint64_t j) {
          uint64_t comp_col = subset_rank(full & ~kmask);
          CHECK(w.get(i, j) == a.get(i, comp_col));
        });
    }
}
