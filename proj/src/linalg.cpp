#include "linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace kellymod {

ResidueMatrix::ResidueMatrix(size_t rows, size_t cols, uint32_t p) : p_(p), rows_(rows), cols_(cols) {
  if (!is_prime(p)) throw std::invalid_argument("ResidueMatrix: modulus must be prime");
  if (p > kMaxModulus) throw std::invalid_argument("ResidueMatrix: modulus exceeds 251");
  if (p == 2) {
    wpr_ = (cols + 63) / 64;
    words_.assign(rows * wpr_, 0);
  } else {
    bytes_.assign(rows * cols, 0);
  }
}

uint32_t ResidueMatrix::get(size_t i, size_t j) const {
  if (p_ == 2) return (words_[i * wpr_ + j / 64] >> (j % 64)) & 1u;
  return bytes_[i * cols_ + j];
}

void ResidueMatrix::set(size_t i, size_t j, uint32_t value) {
  if (p_ == 2) {
    uint64_t bit = uint64_t{1} << (j % 64);
    if (value & 1)
      words_[i * wpr_ + j / 64] |= bit;
    else
      words_[i * wpr_ + j / 64] &= ~bit;
  } else {
    bytes_[i * cols_ + j] = static_cast<uint8_t>(value % p_);
  }
}

ResidueMatrix IntegerMatrix::reduce_mod(uint32_t p) const {
  ResidueMatrix out(rows_, cols_, p);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      mpz_class r = e_[i * cols_ + j] % p;
      if (r < 0) r += p;
      out.set(i, j, static_cast<uint32_t>(r.get_ui()));
    }
  return out;
}

namespace {

uint32_t inverse_mod(uint32_t a, uint32_t p) {
  // Fermat; p prime, a != 0 (mod p)
  uint64_t acc = 1, b = a % p;
  uint32_t e = p - 2;
  while (e) {
    if (e & 1) acc = acc * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(acc);
}

// Forward elimination; returns rank. When track != nullptr the same row ops
// (including swaps) are applied to it.
size_t eliminate(ResidueMatrix& a, ResidueMatrix* track) {
  const size_t rows = a.rows(), cols = a.cols();
  const uint32_t p = a.modulus();
  size_t r = 0;
  if (a.bit_packed()) {
    const size_t w = a.words_per_row();
    const size_t tw = track ? track->words_per_row() : 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
      const size_t cw = c / 64;
      const uint64_t cbit = uint64_t{1} << (c % 64);
      size_t piv = r;
      while (piv < rows && !(a.row_words(piv)[cw] & cbit)) ++piv;
      if (piv == rows) continue;
      if (piv != r) {
        std::swap_ranges(a.row_words(piv), a.row_words(piv) + w, a.row_words(r));
        if (track) std::swap_ranges(track->row_words(piv), track->row_words(piv) + tw, track->row_words(r));
      }
      for (size_t i = r + 1; i < rows; ++i) {
        if (a.row_words(i)[cw] & cbit) {
          uint64_t* ri = a.row_words(i);
          const uint64_t* rr = a.row_words(r);
          for (size_t x = cw; x < w; ++x) ri[x] ^= rr[x];
          if (track) {
            uint64_t* ti = track->row_words(i);
            const uint64_t* tr = track->row_words(r);
            for (size_t x = 0; x < tw; ++x) ti[x] ^= tr[x];
          }
        }
      }
      ++r;
    }
    return r;
  }
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a.row_bytes(piv)[c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap_ranges(a.row_bytes(piv), a.row_bytes(piv) + cols, a.row_bytes(r));
      if (track) std::swap_ranges(track->row_bytes(piv), track->row_bytes(piv) + track->cols(), track->row_bytes(r));
    }
    const uint32_t inv = inverse_mod(a.row_bytes(r)[c], p);
    for (size_t i = r + 1; i < rows; ++i) {
      const uint32_t v = a.row_bytes(i)[c];
      if (v == 0) continue;
      const uint32_t f = static_cast<uint32_t>(uint64_t{v} * inv % p);  // row_i -= f * row_r
      const uint32_t nf = p - f;
      uint8_t* ri = a.row_bytes(i);
      const uint8_t* rr = a.row_bytes(r);
      for (size_t x = c; x < cols; ++x) ri[x] = static_cast<uint8_t>((ri[x] + uint64_t{nf} * rr[x]) % p);
      if (track) {
        uint8_t* ti = track->row_bytes(i);
        const uint8_t* tr = track->row_bytes(r);
        for (size_t x = 0; x < track->cols(); ++x) ti[x] = static_cast<uint8_t>((ti[x] + uint64_t{nf} * tr[x]) % p);
      }
    }
    ++r;
  }
  return r;
}

// In-place reduced row echelon form; rows assumed independent not required.
void rref(ResidueMatrix& a) {
  const size_t rows = a.rows(), cols = a.cols();
  const uint32_t p = a.modulus();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a.get(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      if (a.bit_packed())
        std::swap_ranges(a.row_words(piv), a.row_words(piv) + a.words_per_row(), a.row_words(r));
      else
        std::swap_ranges(a.row_bytes(piv), a.row_bytes(piv) + cols, a.row_bytes(r));
    }
    if (!a.bit_packed()) {
      const uint32_t inv = inverse_mod(a.get(r, c), p);
      if (inv != 1)
        for (size_t x = c; x < cols; ++x) a.set(r, x, static_cast<uint32_t>(uint64_t{a.get(r, x)} * inv % p));
    }
    for (size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const uint32_t v = a.get(i, c);
      if (v == 0) continue;
      if (a.bit_packed()) {
        uint64_t* ri = a.row_words(i);
        const uint64_t* rr = a.row_words(r);
        for (size_t x = 0; x < a.words_per_row(); ++x) ri[x] ^= rr[x];
      } else {
        const uint32_t nf = p - v;
        for (size_t x = 0; x < cols; ++x)
          a.set(i, x, static_cast<uint32_t>((a.get(i, x) + uint64_t{nf} * a.get(r, x)) % p));
      }
    }
    ++r;
  }
}

}  // namespace

size_t rank_mod_p(const ResidueMatrix& m) {
  ResidueMatrix a = m;
  return eliminate(a, nullptr);
}

ResidueMatrix left_kernel_mod_p(const ResidueMatrix& m) {
  const size_t rows = m.rows();
  ResidueMatrix a = m;
  ResidueMatrix u(rows, rows, m.modulus());
  for (size_t i = 0; i < rows; ++i) u.set(i, i, 1);
  size_t rank = eliminate(a, &u);
  const size_t dim = rows - rank;
  ResidueMatrix basis(dim, rows, m.modulus());
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < rows; ++j) basis.set(i, j, u.get(rank + i, j));
  rref(basis);
  return basis;
}

size_t rank_rational(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  const size_t rows = a.rows(), cols = a.cols();
  BigInt prev = 1;
  size_t r = 0;
  BigInt tmp;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a.get(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (size_t x = 0; x < cols; ++x) std::swap(a.at(piv, x), a.at(r, x));
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        // Bareiss: a[i][j] = (a[r][c]*a[i][j] - a[i][c]*a[r][j]) / prev, exact
        tmp = a.get(r, c) * a.get(i, j) - a.get(i, c) * a.get(r, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, c) = 0;
    }
    prev = a.get(r, c);
    ++r;
  }
  return r;
}

uint64_t DiagonalSpec::diagonal_length() const {
  uint64_t n = 0;
  for (const auto& [e, mult] : entries) n += mult;
  return n;
}

std::vector<BigInt> DiagonalSpec::expanded() const {
  const size_t n = std::min(rows, cols);
  std::vector<BigInt> d;
  d.reserve(n);
  for (const auto& [e, mult] : entries)
    for (uint64_t i = 0; i < mult; ++i) d.push_back(e);
  if (d.size() > n) throw std::invalid_argument("DiagonalSpec: multiplicities exceed diagonal length");
  d.resize(n, BigInt(0));
  return d;
}

namespace {

void find_min_pivot(const IntegerMatrix& a, size_t s, size_t& pi, size_t& pj, bool& found) {
  found = false;
  BigInt best;
  for (size_t i = s; i < a.rows(); ++i)
    for (size_t j = s; j < a.cols(); ++j) {
      const BigInt& v = a.get(i, j);
      if (v == 0) continue;
      BigInt av = abs(v);
      if (!found || av < best) {
        best = av;
        pi = i;
        pj = j;
        found = true;
      }
    }
}

}  // namespace

DiagonalSpec smith_normal_form(const IntegerMatrix& m, size_t dim_cap) {
  if (m.rows() > dim_cap || m.cols() > dim_cap)
    throw std::length_error("smith_normal_form: dimensions exceed configured cap");
  IntegerMatrix a = m;
  const size_t rows = a.rows(), cols = a.cols();
  const size_t n = std::min(rows, cols);
  std::vector<BigInt> diag;
  diag.reserve(n);
  for (size_t s = 0; s < n; ++s) {
    for (;;) {
      size_t pi = s, pj = s;
      bool found = false;
      find_min_pivot(a, s, pi, pj, found);
      if (!found) break;  // remaining block is zero
      if (pi != s)
        for (size_t x = s; x < cols; ++x) std::swap(a.at(pi, x), a.at(s, x));
      if (pj != s)
        for (size_t x = s; x < rows; ++x) std::swap(a.at(x, pj), a.at(x, s));
      bool clean = true;
      BigInt q;
      for (size_t i = s + 1; i < rows; ++i) {
        if (a.get(i, s) == 0) continue;
        q = a.get(i, s) / a.get(s, s);  // truncated; remainder smaller than pivot
        if (q != 0)
          for (size_t x = s; x < cols; ++x) a.at(i, x) -= q * a.get(s, x);
        if (a.get(i, s) != 0) clean = false;
      }
      for (size_t j = s + 1; j < cols; ++j) {
        if (a.get(s, j) == 0) continue;
        q = a.get(s, j) / a.get(s, s);
        if (q != 0)
          for (size_t x = s; x < rows; ++x) a.at(x, j) -= q * a.get(x, s);
        if (a.get(s, j) != 0) clean = false;
      }
      if (!clean) continue;
      // pivot now lone; pull in any entry it does not divide and go again
      bool divides_all = true;
      for (size_t i = s + 1; i < rows && divides_all; ++i)
        for (size_t j = s + 1; j < cols; ++j)
          if (!mpz_divisible_p(a.get(i, j).get_mpz_t(), a.get(s, s).get_mpz_t())) {
            for (size_t x = s; x < cols; ++x) a.at(s, x) += a.get(i, x);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    diag.push_back(abs(a.get(s, s)));
  }
  DiagonalSpec spec;
  spec.rows = rows;
  spec.cols = cols;
  for (const BigInt& d : diag) {
    if (!spec.entries.empty() && spec.entries.back().first == d)
      ++spec.entries.back().second;
    else
      spec.entries.emplace_back(d, 1);
  }
  return spec;
}

std::vector<BigInt> invariant_factors_of_diagonal(std::vector<BigInt> d) {
  for (BigInt& x : d) x = abs(x);
  bool changed = true;
  BigInt g, l;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < d.size(); ++i)
      for (size_t j = i + 1; j < d.size(); ++j) {
        if (d[j] == 0 && d[i] == 0) continue;
        if (d[i] != 0 && mpz_divisible_p(d[j].get_mpz_t(), d[i].get_mpz_t())) continue;
        mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
        mpz_lcm(l.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
        d[i] = g;
        d[j] = l;
        changed = true;
      }
  }
  return d;
}

bool diagonal_specs_equivalent(const DiagonalSpec& a, const DiagonalSpec& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("diagonal_specs_equivalent: shape mismatch");
  return invariant_factors_of_diagonal(a.expanded()) == invariant_factors_of_diagonal(b.expanded());
}

}  // namespace kellymod
