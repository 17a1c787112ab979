#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "shd/diagram.hpp"
#include "shd/errors.hpp"
#include "shd/exact.hpp"
#include "shd/validate.hpp"

namespace shd {

struct Generator {
  std::vector<int> points;       // points[i] lies on alpha curve i
  std::vector<int> permutation;  // beta curve of points[i]

  bool contains(int point) const {
    return std::find(points.begin(), points.end(), point) != points.end();
  }
  std::vector<std::string> names(const Diagram& d) const {
    std::vector<std::string> out;
    for (int p : points) out.push_back(d.points[static_cast<std::size_t>(p)].name);
    return out;
  }
};

// One point per alpha curve, beta curves used exactly once. Backtracking in
// name order per curve, so the output is lexicographic by point-id tuples.
// k = 0 yields the single empty generator.
inline std::vector<Generator> enumerate_generators(const Diagram& d) {
  expect_valid(d);
  const int k = d.k();
  if (k > 62) throw ResourceLimit("more than 62 alpha curves");
  std::vector<std::vector<int>> candidates(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int p : d.alpha[static_cast<std::size_t>(i)].points)
      candidates[static_cast<std::size_t>(i)].push_back(p);
    std::sort(candidates[static_cast<std::size_t>(i)].begin(),
              candidates[static_cast<std::size_t>(i)].end(), [&](int a, int b) {
                return d.points[static_cast<std::size_t>(a)].name <
                       d.points[static_cast<std::size_t>(b)].name;
              });
  }
  std::vector<Generator> out;
  std::vector<int> chosen, sigma;
  std::uint64_t used_beta = 0;
  auto rec = [&](auto&& self, int slot) -> void {
    if (slot == k) {
      out.push_back(Generator{chosen, sigma});
      return;
    }
    for (int p : candidates[static_cast<std::size_t>(slot)]) {
      const int bc = d.points[static_cast<std::size_t>(p)].beta_curve;
      if (used_beta & (std::uint64_t{1} << bc)) continue;
      used_beta |= std::uint64_t{1} << bc;
      chosen.push_back(p);
      sigma.push_back(bc);
      self(self, slot + 1);
      chosen.pop_back();
      sigma.pop_back();
      used_beta &= ~(std::uint64_t{1} << bc);
    }
  };
  rec(rec, 0);
  return out;
}

// Permanent of the unsigned intersection matrix by Ryser's inclusion
// exclusion; equals the generator count. k = 0 gives 1.
inline Int permanent(const std::vector<std::vector<long>>& m) {
  const std::size_t k = m.size();
  if (k == 0) return 1;
  if (k > 62) throw ResourceLimit("more than 62 curves");
  Int total = 0;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << k); ++s) {
    Int prod = 1;
    for (std::size_t i = 0; i < k && prod != 0; ++i) {
      Int row_sum = 0;
      for (std::size_t j = 0; j < k; ++j)
        if (s & (std::uint64_t{1} << j)) row_sum += m[i][j];
      prod *= row_sum;
    }
    const unsigned bits = static_cast<unsigned>(__builtin_popcountll(s));
    if ((k - bits) % 2 == 0)
      total += prod;
    else
      total -= prod;
  }
  return total;
}

inline Int count_generators_permanent(const Diagram& d) {
  expect_valid(d);
  return permanent(intersection_counts(d));
}

}  // namespace shd
