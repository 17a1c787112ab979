#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace shd {

// Dense matrix over the field with two elements, rows packed into 64-bit
// words. Sized for chain complexes with a few thousand generators.
struct F2Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::uint64_t>> bits;

  F2Matrix() = default;
  F2Matrix(std::size_t r, std::size_t c)
      : rows(r), cols(c), bits(r, std::vector<std::uint64_t>((c + 63) / 64, 0)) {}

  bool get(std::size_t r, std::size_t c) const {
    return (bits[r][c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    const std::uint64_t mask = std::uint64_t(1) << (c % 64);
    if (v) bits[r][c / 64] |= mask;
    else bits[r][c / 64] &= ~mask;
  }
  void flip(std::size_t r, std::size_t c) {
    bits[r][c / 64] ^= std::uint64_t(1) << (c % 64);
  }
  void xor_row(std::size_t dst, std::size_t src) {
    for (std::size_t w = 0; w < bits[dst].size(); ++w) bits[dst][w] ^= bits[src][w];
  }
  bool row_zero(std::size_t r) const {
    for (std::uint64_t w : bits[r])
      if (w) return false;
    return true;
  }
  bool zero() const {
    for (std::size_t r = 0; r < rows; ++r)
      if (!row_zero(r)) return false;
    return true;
  }
};

inline std::size_t rank_f2(F2Matrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && !m.get(pivot, c)) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(m.bits[pivot], m.bits[rank]);
    for (std::size_t r = 0; r < m.rows; ++r)
      if (r != rank && m.get(r, c)) m.xor_row(r, rank);
    ++rank;
  }
  return rank;
}

// (a*b)[i][k] = sum_j a[i][j] * b[j][k]; row i of the product is the xor of
// the rows of b selected by row i of a.
inline F2Matrix multiply_f2(const F2Matrix& a, const F2Matrix& b) {
  F2Matrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j)
      if (a.get(i, j))
        for (std::size_t w = 0; w < out.bits[i].size(); ++w)
          out.bits[i][w] ^= b.bits[j][w];
  return out;
}

}  // namespace shd
