#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "shd/errors.hpp"
#include "shd/intlinalg.hpp"

namespace shd {

enum class Family : int { Alpha = 0, Beta = 1 };

inline char family_prefix(Family f) { return f == Family::Alpha ? 'a' : 'b'; }

// Raw file-shaped form. Kept verbatim inside Diagram so serialization can
// reproduce the input byte for byte.
struct RawSide {
  enum class Kind { Arc, Closed, Suture };
  Kind kind{};
  std::string curve;  // Arc, Closed
  std::string from, to;
  int orient = 0;
  int suture = -1;
};

struct RawRegion {
  std::string id;
  bool outer = false;
  std::vector<RawSide> sides;
};

struct RawDiagram {
  std::string name;
  std::vector<std::vector<std::string>> alpha, beta;
  std::vector<RawRegion> regions;
};

struct Arc {
  Family family{};
  int curve = -1;  // index within its family
  int slot = -1;   // arc runs points[slot] -> points[(slot+1) % size]
  int from = -1, to = -1;
  int pos_region = -1;  // region traversing the arc with orient +1
  int neg_region = -1;
  int pos_uses = 0, neg_uses = 0;
};

struct Curve {
  std::string name;
  Family family{};
  int index = -1;
  std::vector<int> points;  // cyclic order; empty means a pointless closed curve
  std::vector<int> arcs;
  int pos_region = -1, neg_region = -1;  // used only when points is empty
  int pos_uses = 0, neg_uses = 0;
  bool closed() const { return points.empty(); }
};

struct Point {
  std::string name;
  int alpha_curve = -1, alpha_pos = -1;
  int beta_curve = -1, beta_pos = -1;
  int sign = 0;  // +1 or -1 once corner data checks out, else 0
  // Regions of the four quadrants, counterclockwise; quadrant 0 lies between
  // the outgoing alpha ray and the outgoing beta ray.
  std::array<int, 4> quadrants{{-1, -1, -1, -1}};
};

struct Side {
  enum class Kind { Arc, Closed, Suture };
  Kind kind{};
  Family family{};
  int curve = -1;
  int arc = -1;  // stays -1 when the reference could not be bound
  int orient = 0;
  int suture = -1;
};

struct Region {
  std::string id;
  bool outer = false;
  std::vector<Side> sides;
  std::vector<std::vector<int>> arc_cycles;  // indices into sides
  std::vector<int> sutures;
  std::vector<std::pair<int, int>> corners;  // (point, quadrant label)
  int cycle_count = 0;  // boundary circles: arc cycles + closed + suture sides
  int corner_count = 0;
};

namespace detail {

// Rays at a point: 0 alpha-out, 1 alpha-in, 2 beta-out, 3 beta-in.
inline int ray(Family f, bool inward) {
  return (f == Family::Beta ? 2 : 0) + (inward ? 1 : 0);
}

}  // namespace detail

class Diagram {
 public:
  RawDiagram raw;
  std::string name;
  std::vector<Curve> alpha, beta;
  std::vector<Point> points;
  std::vector<Arc> arcs;
  std::vector<Region> regions;
  std::vector<std::string> structural_violations;

  std::map<std::string, int> point_index;
  std::map<std::string, int> region_index;
  std::vector<int> interior;  // interior region indices, sorted by id
  std::map<std::string, int> interior_pos;

  int k() const { return static_cast<int>(alpha.size()); }

  const Curve& curve(Family f, int i) const {
    return f == Family::Alpha ? alpha[static_cast<std::size_t>(i)]
                              : beta[static_cast<std::size_t>(i)];
  }
  Curve& curve(Family f, int i) {
    return f == Family::Alpha ? alpha[static_cast<std::size_t>(i)]
                              : beta[static_cast<std::size_t>(i)];
  }

  // Departure and arrival points of a bound arc side.
  int side_departs(const Side& s) const {
    const Arc& a = arcs[static_cast<std::size_t>(s.arc)];
    return s.orient > 0 ? a.from : a.to;
  }
  int side_arrives(const Side& s) const {
    const Arc& a = arcs[static_cast<std::size_t>(s.arc)];
    return s.orient > 0 ? a.to : a.from;
  }

  static Diagram link(RawDiagram in);

 private:
  void note(std::string msg) { structural_violations.push_back(std::move(msg)); }
  void build_curves();
  void build_regions();
  void check_usage();
  void decompose_region(int ri);
  void analyze_points();
};

inline Diagram Diagram::link(RawDiagram in) {
  Diagram d;
  d.raw = std::move(in);
  d.name = d.raw.name;
  d.build_curves();
  d.build_regions();
  d.check_usage();
  d.analyze_points();
  for (int ri = 0; ri < static_cast<int>(d.regions.size()); ++ri)
    if (!d.regions[static_cast<std::size_t>(ri)].outer)
      d.interior.push_back(ri);
  std::sort(d.interior.begin(), d.interior.end(), [&](int a, int b) {
    return d.regions[static_cast<std::size_t>(a)].id <
           d.regions[static_cast<std::size_t>(b)].id;
  });
  for (std::size_t i = 0; i < d.interior.size(); ++i)
    d.interior_pos[d.regions[static_cast<std::size_t>(d.interior[i])].id] =
        static_cast<int>(i);
  return d;
}

inline void Diagram::build_curves() {
  auto add_family = [&](Family fam,
                        const std::vector<std::vector<std::string>>& lists,
                        std::vector<Curve>& out) {
    for (std::size_t i = 0; i < lists.size(); ++i) {
      Curve c;
      c.family = fam;
      c.index = static_cast<int>(i);
      c.name = family_prefix(fam) + std::to_string(i + 1);
      for (const std::string& pname : lists[i]) {
        auto it = point_index.find(pname);
        int pi;
        if (it == point_index.end()) {
          pi = static_cast<int>(points.size());
          point_index.emplace(pname, pi);
          Point p;
          p.name = pname;
          points.push_back(std::move(p));
        } else {
          pi = it->second;
        }
        Point& p = points[static_cast<std::size_t>(pi)];
        int& curve_field = fam == Family::Alpha ? p.alpha_curve : p.beta_curve;
        int& pos_field = fam == Family::Alpha ? p.alpha_pos : p.beta_pos;
        if (curve_field != -1) {
          note("point " + pname + " listed more than once on " +
               (fam == Family::Alpha ? std::string("alpha") : std::string("beta")) +
               " curves");
        } else {
          curve_field = c.index;
          pos_field = static_cast<int>(c.points.size());
        }
        c.points.push_back(pi);
      }
      out.push_back(std::move(c));
    }
  };
  add_family(Family::Alpha, raw.alpha, alpha);
  add_family(Family::Beta, raw.beta, beta);
  for (const Point& p : points) {
    if (p.alpha_curve == -1) note("point " + p.name + " is not on any alpha curve");
    if (p.beta_curve == -1) note("point " + p.name + " is not on any beta curve");
  }
  auto add_arcs = [&](std::vector<Curve>& curves) {
    for (Curve& c : curves) {
      const std::size_t n = c.points.size();
      for (std::size_t s = 0; s < n; ++s) {
        Arc a;
        a.family = c.family;
        a.curve = c.index;
        a.slot = static_cast<int>(s);
        a.from = c.points[s];
        a.to = c.points[(s + 1) % n];
        c.arcs.push_back(static_cast<int>(arcs.size()));
        arcs.push_back(a);
      }
    }
  };
  add_arcs(alpha);
  add_arcs(beta);
}

inline void Diagram::build_regions() {
  for (const RawRegion& rr : raw.regions) {
    const int ri = static_cast<int>(regions.size());
    if (!region_index.emplace(rr.id, ri).second)
      note("region " + rr.id + " listed twice");
    Region r;
    r.id = rr.id;
    r.outer = rr.outer;
    for (const RawSide& rs : rr.sides) {
      Side s;
      if (rs.kind == RawSide::Kind::Suture) {
        s.kind = Side::Kind::Suture;
        s.suture = rs.suture;
        r.sutures.push_back(rs.suture);
        r.sides.push_back(s);
        continue;
      }
      // curve ids are positional: a1..ak, b1..bk
      Family fam;
      if (!rs.curve.empty() && rs.curve[0] == 'a')
        fam = Family::Alpha;
      else if (!rs.curve.empty() && rs.curve[0] == 'b')
        fam = Family::Beta;
      else
        throw ReferenceError("unknown curve id '" + rs.curve + "'");
      int ci = -1;
      try {
        std::size_t used = 0;
        ci = std::stoi(rs.curve.substr(1), &used) - 1;
        if (used + 1 != rs.curve.size()) ci = -1;
      } catch (...) {
        ci = -1;
      }
      const auto& fam_curves = fam == Family::Alpha ? alpha : beta;
      if (ci < 0 || ci >= static_cast<int>(fam_curves.size()))
        throw ReferenceError("unknown curve id '" + rs.curve + "'");
      s.family = fam;
      s.curve = ci;
      s.orient = rs.orient;
      if (rs.kind == RawSide::Kind::Closed) {
        s.kind = Side::Kind::Closed;
        Curve& c = curve(fam, ci);
        if (!c.closed()) {
          note("curve " + c.name + " referenced as closed but has intersection points");
        } else {
          auto& uses = rs.orient > 0 ? c.pos_uses : c.neg_uses;
          auto& reg = rs.orient > 0 ? c.pos_region : c.neg_region;
          if (uses++ == 0) reg = ri;
        }
        r.sides.push_back(s);
        continue;
      }
      s.kind = Side::Kind::Arc;
      auto from_it = point_index.find(rs.from);
      if (from_it == point_index.end())
        throw ReferenceError("unknown point id '" + rs.from + "'");
      auto to_it = point_index.find(rs.to);
      if (to_it == point_index.end())
        throw ReferenceError("unknown point id '" + rs.to + "'");
      const Curve& c = curve(fam, ci);
      for (int ai : c.arcs) {
        const Arc& a = arcs[static_cast<std::size_t>(ai)];
        if (a.from == from_it->second && a.to == to_it->second) {
          s.arc = ai;
          break;
        }
      }
      if (s.arc == -1) {
        note("no arc " + rs.curve + ":" + rs.from + "->" + rs.to +
             " (points are not consecutive on the curve)");
      } else {
        Arc& a = arcs[static_cast<std::size_t>(s.arc)];
        auto& uses = rs.orient > 0 ? a.pos_uses : a.neg_uses;
        auto& reg = rs.orient > 0 ? a.pos_region : a.neg_region;
        if (uses++ == 0) reg = ri;
      }
      r.sides.push_back(s);
    }
    regions.push_back(std::move(r));
    decompose_region(ri);
  }
}

inline void Diagram::decompose_region(int ri) {
  Region& r = regions[static_cast<std::size_t>(ri)];
  const int n = static_cast<int>(r.sides.size());
  if (n == 0) note("region " + r.id + " has an empty boundary");
  auto is_chainable = [&](int i) {
    const Side& s = r.sides[static_cast<std::size_t>(i)];
    return s.kind == Side::Kind::Arc && s.arc != -1;
  };
  // Sides form a cyclic list; maximal runs of arc sides whose arrival point
  // matches the next departure point are boundary cycles. Suture and closed
  // sides are whole boundary circles of their own.
  std::vector<int> breaks;  // i such that side i does not chain into side i+1
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    if (!is_chainable(i) || !is_chainable(j) ||
        side_arrives(r.sides[static_cast<std::size_t>(i)]) !=
            side_departs(r.sides[static_cast<std::size_t>(j)]))
      breaks.push_back(i);
  }
  for (const Side& s : r.sides)
    if (s.kind != Side::Kind::Arc || s.arc == -1) ++r.cycle_count;
  if (breaks.empty()) {
    if (n > 0) {
      std::vector<int> cycle(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = i;
      r.arc_cycles.push_back(std::move(cycle));
      ++r.cycle_count;
      r.corner_count = n;
    }
    return;
  }
  for (std::size_t b = 0; b < breaks.size(); ++b) {
    const int start = (breaks[b] + 1) % n;
    const int stop = breaks[(b + 1) % breaks.size()];  // inclusive
    std::vector<int> run;
    for (int i = start; ; i = (i + 1) % n) {
      if (is_chainable(i)) run.push_back(i);
      if (i == stop) break;
    }
    if (run.empty()) continue;
    const Side& first = r.sides[static_cast<std::size_t>(run.front())];
    const Side& last = r.sides[static_cast<std::size_t>(run.back())];
    if (run.size() == static_cast<std::size_t>(n) ||
        side_arrives(last) != side_departs(first)) {
      note("region " + r.id + ": boundary chain starting at side " +
           std::to_string(run.front()) + " does not close");
      ++r.cycle_count;
      continue;
    }
    r.arc_cycles.push_back(std::move(run));
    ++r.cycle_count;
  }
  for (const auto& cyc : r.arc_cycles)
    r.corner_count += static_cast<int>(cyc.size());
}

inline void Diagram::check_usage() {
  for (const Arc& a : arcs) {
    const Curve& c = curve(a.family, a.curve);
    const std::string label =
        c.name + ":" + points[static_cast<std::size_t>(a.from)].name + "->" +
        points[static_cast<std::size_t>(a.to)].name;
    if (a.pos_uses != 1)
      note("arc " + label + " used " + std::to_string(a.pos_uses) +
           " times with orientation +1 (expected exactly 1)");
    if (a.neg_uses != 1)
      note("arc " + label + " used " + std::to_string(a.neg_uses) +
           " times with orientation -1 (expected exactly 1)");
  }
  for (const std::vector<Curve>* fam : {&alpha, &beta}) {
    for (const Curve& c : *fam) {
      if (!c.closed()) continue;
      if (c.pos_uses != 1)
        note("closed curve " + c.name + " used " + std::to_string(c.pos_uses) +
             " times with orientation +1 (expected exactly 1)");
      if (c.neg_uses != 1)
        note("closed curve " + c.name + " used " + std::to_string(c.neg_uses) +
             " times with orientation -1 (expected exactly 1)");
    }
  }
}

inline void Diagram::analyze_points() {
  struct Corner {
    int leave_ray, arrive_ray, region;
  };
  std::vector<std::vector<Corner>> at(points.size());
  for (int ri = 0; ri < static_cast<int>(regions.size()); ++ri) {
    const Region& r = regions[static_cast<std::size_t>(ri)];
    for (const auto& cyc : r.arc_cycles) {
      const std::size_t m = cyc.size();
      for (std::size_t i = 0; i < m; ++i) {
        const Side& in = r.sides[static_cast<std::size_t>(cyc[i])];
        const Side& out = r.sides[static_cast<std::size_t>(cyc[(i + 1) % m])];
        const int p = side_arrives(in);
        // arrival along orient +1 comes in at the arc head, departure leaves
        // at the tail; orient -1 swaps the two
        const int arrive = detail::ray(in.family, in.orient > 0);
        const int leave = detail::ray(out.family, out.orient < 0);
        at[static_cast<std::size_t>(p)].push_back(Corner{leave, arrive, ri});
      }
    }
  }
  for (std::size_t pi = 0; pi < points.size(); ++pi) {
    Point& p = points[pi];
    if (p.alpha_curve == -1 || p.beta_curve == -1) continue;
    const auto& corners = at[pi];
    if (corners.size() != 4) {
      note("point " + p.name + ": " + std::to_string(corners.size()) +
           " corners (expected 4)");
      continue;
    }
    std::array<int, 4> succ{{-1, -1, -1, -1}};
    std::array<int, 4> corner_region{{-1, -1, -1, -1}};  // by leave ray
    bool ok = true;
    for (const Corner& c : corners) {
      if (succ[static_cast<std::size_t>(c.leave_ray)] != -1) ok = false;
      succ[static_cast<std::size_t>(c.leave_ray)] = c.arrive_ray;
      corner_region[static_cast<std::size_t>(c.leave_ray)] = c.region;
    }
    if (!ok || succ[0] == -1 || succ[1] == -1 || succ[2] == -1 || succ[3] == -1) {
      note("point " + p.name + ": corner rays are inconsistent");
      continue;
    }
    std::array<int, 4> seq{};  // counterclockwise ray order from alpha-out
    seq[0] = 0;
    for (int i = 1; i < 4; ++i)
      seq[static_cast<std::size_t>(i)] =
          succ[static_cast<std::size_t>(seq[static_cast<std::size_t>(i - 1)])];
    int sign = 0;
    if (seq == std::array<int, 4>{{0, 2, 1, 3}})
      sign = 1;
    else if (seq == std::array<int, 4>{{0, 3, 1, 2}})
      sign = -1;
    if (sign == 0) {
      note("point " + p.name + ": corner cyclic order is not alternating");
      continue;
    }
    p.sign = sign;
    for (int j = 0; j < 4; ++j) {
      // wedge j is bounded by rays seq[j], seq[j+1]; quadrant 0 sits between
      // alpha-out and beta-out
      const int label = sign > 0 ? j : (j + 1) % 4;
      const int reg = corner_region[static_cast<std::size_t>(
          seq[static_cast<std::size_t>(j)])];
      p.quadrants[static_cast<std::size_t>(label)] = reg;
      regions[static_cast<std::size_t>(reg)].corners.emplace_back(
          static_cast<int>(pi), label);
    }
  }
  for (Region& r : regions)
    std::sort(r.corners.begin(), r.corners.end());
}

// Unsigned and signed intersection pairings between alpha and beta curves.
inline std::vector<std::vector<long>> intersection_counts(const Diagram& d) {
  std::vector<std::vector<long>> m(
      d.alpha.size(), std::vector<long>(d.beta.size(), 0));
  for (const Point& p : d.points)
    if (p.alpha_curve != -1 && p.beta_curve != -1)
      ++m[static_cast<std::size_t>(p.alpha_curve)]
         [static_cast<std::size_t>(p.beta_curve)];
  return m;
}

inline IntMat intersection_signs(const Diagram& d) {
  IntMat m(d.alpha.size(), std::vector<Int>(d.beta.size(), 0));
  for (const Point& p : d.points)
    if (p.alpha_curve != -1 && p.beta_curve != -1)
      m[static_cast<std::size_t>(p.alpha_curve)]
       [static_cast<std::size_t>(p.beta_curve)] += p.sign;
  return m;
}

}  // namespace shd
