#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "shd/diagram.hpp"

namespace shd {

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

namespace detail {

struct DSU {
  std::vector<int> parent;
  explicit DSU(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(a)] = b;
  }
};

}  // namespace detail

inline ValidationReport validate(const Diagram& d) {
  ValidationReport rep;
  rep.violations = d.structural_violations;
  auto note = [&](std::string m) { rep.violations.push_back(std::move(m)); };

  if (d.alpha.size() != d.beta.size())
    note("unbalanced diagram: " + std::to_string(d.alpha.size()) +
         " alpha curves, " + std::to_string(d.beta.size()) + " beta curves");

  long total_corners = 0;
  int total_sutures = 0;
  std::map<int, int> suture_uses;
  for (const Region& r : d.regions) {
    total_corners += r.corner_count;
    total_sutures += static_cast<int>(r.sutures.size());
    for (int s : r.sutures) ++suture_uses[s];
    const bool has_suture = !r.sutures.empty();
    if (r.outer && !has_suture)
      note("region " + r.id + " is marked outer but has no suture side");
    if (!r.outer && has_suture)
      note("region " + r.id + " has a suture side but is not marked outer");
    if (!r.outer && r.corner_count % 2 != 0)
      note("interior region " + r.id + " has odd corner count " +
           std::to_string(r.corner_count));
  }
  for (const auto& [idx, uses] : suture_uses)
    if (uses > 1)
      note("suture index " + std::to_string(idx) + " used " +
           std::to_string(uses) + " times");
  for (int i = 0; i < total_sutures; ++i)
    if (suture_uses.find(i) == suture_uses.end())
      note("suture index " + std::to_string(i) +
           " missing (indices must be 0..B-1)");

  if (total_corners != 4l * static_cast<long>(d.points.size()))
    note("total corner count " + std::to_string(total_corners) + " != 4 * " +
         std::to_string(d.points.size()) + " points");

  // Global surface checks only make sense once the cell structure is clean.
  if (!d.structural_violations.empty() || d.regions.empty()) return rep;

  const std::size_t nr = d.regions.size();
  detail::DSU surface(nr);
  detail::DSU cut_alpha(nr);  // components of the surface minus alpha
  detail::DSU cut_beta(nr);
  for (const Arc& a : d.arcs) {
    surface.unite(a.pos_region, a.neg_region);
    (a.family == Family::Alpha ? cut_beta : cut_alpha)
        .unite(a.pos_region, a.neg_region);
  }
  for (const std::vector<Curve>* fam : {&d.alpha, &d.beta}) {
    for (const Curve& c : *fam) {
      if (!c.closed()) continue;
      surface.unite(c.pos_region, c.neg_region);
      (c.family == Family::Alpha ? cut_beta : cut_alpha)
          .unite(c.pos_region, c.neg_region);
    }
  }

  struct Tally {
    long chi_regions = 0;
    long verts = 0, edges = 0, sutures = 0;
    std::string label;  // smallest region id, for messages
  };
  std::map<int, Tally> comps;
  for (std::size_t ri = 0; ri < nr; ++ri) {
    const Region& r = d.regions[ri];
    Tally& t = comps[surface.find(static_cast<int>(ri))];
    t.chi_regions += 2 - r.cycle_count;
    t.sutures += static_cast<long>(r.sutures.size());
    if (t.label.empty() || r.id < t.label) t.label = r.id;
  }
  for (const Arc& a : d.arcs) ++comps[surface.find(a.pos_region)].edges;
  for (const Point& p : d.points)
    ++comps[surface.find(p.quadrants[0])].verts;

  for (const auto& [root, t] : comps) {
    const long chi = t.chi_regions + t.verts - t.edges;
    if (t.sutures == 0) {
      note("surface component containing region " + t.label +
           " is closed (every component needs a suture)");
      continue;
    }
    const long twice_genus = 2 - t.sutures - chi;
    if (twice_genus < 0 || twice_genus % 2 != 0)
      note("surface component containing region " + t.label +
           ": Euler characteristic " + std::to_string(chi) + " with " +
           std::to_string(t.sutures) +
           " boundary circles does not fit an oriented surface");
  }

  auto check_cut = [&](detail::DSU& cut, const char* which) {
    std::map<int, std::pair<bool, std::string>> classes;  // has outer, label
    for (std::size_t ri = 0; ri < nr; ++ri) {
      auto& entry = classes[cut.find(static_cast<int>(ri))];
      if (d.regions[ri].outer) entry.first = true;
      if (entry.second.empty() || d.regions[ri].id < entry.second)
        entry.second = d.regions[ri].id;
    }
    for (const auto& [root, entry] : classes)
      if (!entry.first)
        note(std::string("cutting along ") + which +
             " leaves a component with no outer region (contains region " +
             entry.second + ")");
  };
  check_cut(cut_alpha, "alpha");
  check_cut(cut_beta, "beta");
  return rep;
}

// Downstream operations assume a validated diagram.
inline void expect_valid(const Diagram& d) {
  const ValidationReport rep = validate(d);
  if (!rep.ok())
    throw std::invalid_argument("invalid diagram '" + d.name +
                                "': " + rep.violations.front());
}

}  // namespace shd
