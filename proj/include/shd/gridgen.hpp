#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shd/parse.hpp"

namespace shd {

// n x n toroidal grid: alpha curves are horizontal circles, beta curves
// vertical ones, and every cell is a square. Cells listed in `punctured`
// become outer regions carrying sutures 0, 1, ... in list order. Cutting
// along either curve family yields one annulus per row or column, so a
// legal diagram needs a puncture in every row and in every column.
inline std::string make_grid(int n, const std::vector<std::pair<int, int>>& punctured) {
  if (n < 1) throw std::invalid_argument("grid size must be at least 1");
  std::set<std::pair<int, int>> seen;
  for (auto [i, j] : punctured) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw std::invalid_argument("punctured cell out of range");
    if (!seen.insert({i, j}).second)
      throw std::invalid_argument("punctured cell listed twice");
  }

  const auto q = [](int i, int j) {
    return "q" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
  };
  ojson doc;
  doc["name"] = "grid" + std::to_string(n);
  ojson alpha = ojson::array(), beta = ojson::array();
  for (int i = 0; i < n; ++i) {
    ojson row = ojson::array();
    for (int j = 0; j < n; ++j) row.push_back(q(i, j));
    alpha.push_back(std::move(row));
  }
  for (int j = 0; j < n; ++j) {
    ojson col = ojson::array();
    for (int i = 0; i < n; ++i) col.push_back(q(i, j));
    beta.push_back(std::move(col));
  }
  doc["alpha"] = std::move(alpha);
  doc["beta"] = std::move(beta);

  const auto arc = [&](const std::string& curve, const std::string& from,
                       const std::string& to, int orient) {
    ojson s;
    s["curve"] = curve;
    s["from"] = from;
    s["to"] = to;
    s["orient"] = orient;
    return s;
  };
  ojson regions = ojson::array();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int i1 = (i + 1) % n, j1 = (j + 1) % n;
      ojson region;
      region["id"] = "C" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
      int suture = -1;
      for (std::size_t s = 0; s < punctured.size(); ++s)
        if (punctured[s] == std::make_pair(i, j)) suture = static_cast<int>(s);
      region["outer"] = suture >= 0;
      ojson boundary = ojson::array();
      boundary.push_back(arc("a" + std::to_string(i + 1), q(i, j), q(i, j1), 1));
      boundary.push_back(arc("b" + std::to_string(j1 + 1), q(i, j1), q(i1, j1), 1));
      boundary.push_back(arc("a" + std::to_string(i1 + 1), q(i1, j), q(i1, j1), -1));
      boundary.push_back(arc("b" + std::to_string(j + 1), q(i, j), q(i1, j), -1));
      if (suture >= 0) boundary.push_back(ojson{{"suture", suture}});
      region["boundary"] = std::move(boundary);
      regions.push_back(std::move(region));
    }
  doc["regions"] = std::move(regions);
  return doc.dump(2) + "\n";
}

}  // namespace shd
