#pragma once

#include <cstddef>
#include <vector>

#include "shd/exact.hpp"

namespace shd {

struct LpResult {
  bool feasible = false;
  bool bounded = true;
  std::vector<Rat> x;  // structural variable values when feasible and bounded
  Rat objective = 0;
};

namespace detail {

inline void lp_pivot(std::vector<std::vector<Rat>>& t,
                     std::vector<std::size_t>& basis, std::size_t row,
                     std::size_t col) {
  const Rat p = t[row][col];
  for (Rat& v : t[row]) v /= p;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i == row) continue;
    const Rat f = t[i][col];
    if (f == 0) continue;
    for (std::size_t j = 0; j < t[i].size(); ++j) t[i][j] -= f * t[row][j];
  }
  basis[row] = col;
}

// Minimizes the objective row in place. Bland's rule on both the entering
// and the leaving choice, so the iteration terminates. Returns false when
// the objective is unbounded below.
inline bool simplex_min(std::vector<std::vector<Rat>>& t,
                        std::vector<std::size_t>& basis) {
  const std::size_t rows = t.size() - 1;
  const std::size_t rhs = t[0].size() - 1;
  for (;;) {
    std::size_t enter = rhs;
    for (std::size_t j = 0; j < rhs; ++j)
      if (t[rows][j] < 0) {
        enter = j;
        break;
      }
    if (enter == rhs) return true;
    std::size_t leave = rows;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      if (leave == rows) {
        leave = i;
        continue;
      }
      const Rat a = t[i][rhs] * t[leave][enter];
      const Rat b = t[leave][rhs] * t[i][enter];
      if (a < b || (a == b && basis[i] < basis[leave])) leave = i;
    }
    if (leave == rows) return false;
    lp_pivot(t, basis, leave, enter);
  }
}

}  // namespace detail

// min c.x subject to a x = b, x >= 0, in exact rational arithmetic.
inline LpResult solve_lp(std::vector<std::vector<Rat>> a, std::vector<Rat> b,
                         const std::vector<Rat>& c) {
  const std::size_t m = b.size();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < m; ++i)
    if (b[i] < 0) {
      for (Rat& v : a[i]) v = -v;
      b[i] = -b[i];
    }

  // phase I: minimize the sum of one artificial variable per row
  std::vector<std::vector<Rat>> t(m + 1, std::vector<Rat>(n + m + 1, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][n + m] = b[i];
    basis[i] = n + i;
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rat s = 0;
    for (std::size_t i = 0; i < m; ++i) s += a[i][j];
    t[m][j] = -s;
  }
  {
    Rat s = 0;
    for (std::size_t i = 0; i < m; ++i) s += b[i];
    t[m][n + m] = -s;
  }
  detail::simplex_min(t, basis);
  LpResult res;
  if (t[m][n + m] != 0) return res;  // artificials cannot all reach zero
  res.feasible = true;

  // remove artificials from the basis; rows that cannot pivot are redundant
  for (std::size_t i = 0; i < basis.size();) {
    if (basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t j = 0;
    while (j < n && t[i][j] == 0) ++j;
    if (j == n) {
      t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
      basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      detail::lp_pivot(t, basis, i, j);
      ++i;
    }
  }

  // phase II over the structural columns only
  const std::size_t m2 = basis.size();
  std::vector<std::vector<Rat>> t2(m2 + 1, std::vector<Rat>(n + 1, 0));
  for (std::size_t i = 0; i < m2; ++i) {
    for (std::size_t j = 0; j < n; ++j) t2[i][j] = t[i][j];
    t2[i][n] = t[i][n + m];
  }
  for (std::size_t j = 0; j < n; ++j) t2[m2][j] = c[j];
  t2[m2][n] = 0;
  for (std::size_t i = 0; i < m2; ++i) {
    const Rat f = c[basis[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j <= n; ++j) t2[m2][j] -= f * t2[i][j];
  }
  if (!detail::simplex_min(t2, basis)) {
    res.bounded = false;
    return res;
  }
  res.x.assign(n, 0);
  for (std::size_t i = 0; i < m2; ++i) res.x[basis[i]] = t2[i][n];
  for (std::size_t j = 0; j < n; ++j) res.objective += c[j] * res.x[j];
  return res;
}

}  // namespace shd
