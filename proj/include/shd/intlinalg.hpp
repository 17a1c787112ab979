#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "shd/exact.hpp"

namespace shd {

using IntMat = std::vector<std::vector<Int>>;  // row major

inline Int floor_div(const Int& a, const Int& b) {
  // b > 0 expected
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

namespace detail {

inline void sub_scaled_row(std::vector<Int>& dst, const std::vector<Int>& src,
                           const Int& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < dst.size(); ++j) dst[j] -= q * src[j];
}

}  // namespace detail

// Row Hermite normal form, eliminating only on columns [0, limit_cols).
// Pivots are positive, entries above a pivot lie in [0, pivot).
// Returns the pivot columns in order.
inline std::vector<std::size_t> row_hnf(IntMat& m, std::size_t limit_cols) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit_cols && r < m.size(); ++c) {
    // Euclid over the column until one nonzero entry remains below r.
    for (;;) {
      std::size_t best = m.size();
      for (std::size_t i = r; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        if (best == m.size() ||
            abs(m[i][c]) < abs(m[best][c]))
          best = i;
      }
      if (best == m.size()) break;  // column is zero below r
      std::swap(m[r], m[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        Int q = m[i][c] / m[r][c];
        detail::sub_scaled_row(m[i], m[r], q);
        if (m[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (r < m.size() && m[r][c] != 0) {
      if (m[r][c] < 0)
        for (Int& x : m[r]) x = -x;
      for (std::size_t i = 0; i < r; ++i)
        detail::sub_scaled_row(m[i], m[r], floor_div(m[i][c], m[r][c]));
      pivots.push_back(c);
      ++r;
    }
  }
  return pivots;
}

inline std::vector<std::size_t> row_hnf(IntMat& m) {
  return row_hnf(m, m.empty() ? 0 : m[0].size());
}

// Basis of the integer kernel {x : a x = 0}, one vector per row, in Hermite
// normal form (canonical for a fixed column order). a has rows.size() rows
// and cols columns; rows may be empty.
inline IntMat integer_kernel(const IntMat& a, std::size_t cols) {
  const std::size_t m = a.size();
  IntMat work(cols, std::vector<Int>(m + cols, 0));
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < m; ++j) work[i][j] = a[j][i];
    work[i][m + i] = 1;
  }
  row_hnf(work, m);
  IntMat kernel;
  for (const auto& row : work) {
    bool zero = true;
    for (std::size_t j = 0; j < m && zero; ++j) zero = row[j] == 0;
    if (!zero) continue;
    kernel.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(m), row.end());
  }
  row_hnf(kernel);
  while (!kernel.empty()) {
    bool zero = true;
    for (const Int& x : kernel.back())
      if (x != 0) { zero = false; break; }
    if (!zero) break;
    kernel.pop_back();
  }
  return kernel;
}

// Fraction-free determinant (Bareiss). det of the empty matrix is 1.
inline Int determinant(IntMat m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (m[i][k] != 0) { swap_row = i; break; }
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace shd
