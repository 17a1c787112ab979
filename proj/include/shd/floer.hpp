#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "shd/admissibility.hpp"
#include "shd/diagram.hpp"
#include "shd/errors.hpp"
#include "shd/exact.hpp"
#include "shd/f2.hpp"
#include "shd/generators.hpp"
#include "shd/lattice.hpp"
#include "shd/validate.hpp"

namespace shd {

// Nice: every interior region is a disk with two or four corners, i.e. an
// embedded bigon or rectangle. A region with several boundary circles is
// rejected even when its corner total lands on 2 or 4.
inline bool is_nice(const Diagram& d) {
  expect_valid(d);
  for (const Region& r : d.regions) {
    if (r.outer) continue;
    if (r.cycle_count != 1) return false;
    if (r.corner_count != 2 && r.corner_count != 4) return false;
  }
  return true;
}

inline std::string generator_label(const Diagram& d, const Generator& g) {
  std::string out = "{";
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    if (i) out += ",";
    out += d.points[static_cast<std::size_t>(g.points[i])].name;
  }
  return out + "}";
}

namespace detail {

inline Int domain_mult(const Diagram& d, const DomainVector& dom, int region) {
  const auto it = dom.find(d.regions[static_cast<std::size_t>(region)].id);
  return it == dom.end() ? Int(0) : it->second;
}

inline Int domain_coeff(const Diagram& d, const DomainVector& dom, const Arc& a) {
  return domain_mult(d, dom, a.pos_region) - domain_mult(d, dom, a.neg_region);
}

inline void check_generator(const Diagram& d, const Generator& g, const char* which) {
  if (g.points.size() != d.alpha.size())
    throw std::invalid_argument(std::string(which) + " generator has wrong arity");
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    const int p = g.points[i];
    if (p < 0 || p >= static_cast<int>(d.points.size()) ||
        d.points[static_cast<std::size_t>(p)].alpha_curve != static_cast<int>(i))
      throw std::invalid_argument(std::string(which) +
                                  " generator point is not on its alpha curve");
  }
}

inline void check_domain_support(const Diagram& d, const DomainVector& dom) {
  for (const auto& [id, mult] : dom) {
    const auto it = d.region_index.find(id);
    if (it == d.region_index.end())
      throw ReferenceError("domain references unknown region '" + id + "'");
    if (d.regions[static_cast<std::size_t>(it->second)].outer && mult != 0)
      throw std::invalid_argument("domain has support on outer region '" + id + "'");
  }
}

struct Measures {
  bool connects = true;
  std::string mismatch_point;
  Rat e, n_x, n_y, mu;
};

// Single implementation of the jump rule stated at maslov_index.
inline Measures measures(const Diagram& d, const DomainVector& dom,
                         const Generator& x, const Generator& y) {
  Measures out;
  for (std::size_t pi = 0; pi < d.points.size(); ++pi) {
    const Point& p = d.points[pi];
    const Curve& c = d.alpha[static_cast<std::size_t>(p.alpha_curve)];
    const std::size_t m = c.arcs.size();
    const std::size_t pos = static_cast<std::size_t>(p.alpha_pos);
    const Arc& arc_in = d.arcs[static_cast<std::size_t>(c.arcs[(pos + m - 1) % m])];
    const Arc& arc_out = d.arcs[static_cast<std::size_t>(c.arcs[pos])];
    const Int jump = domain_coeff(d, dom, arc_in) - domain_coeff(d, dom, arc_out);
    const Int want = Int(y.contains(static_cast<int>(pi)) ? 1 : 0) -
                     Int(x.contains(static_cast<int>(pi)) ? 1 : 0);
    if (jump != want) {
      out.connects = false;
      out.mismatch_point = p.name;
      return out;
    }
  }
  for (int ri : d.interior) {
    const Region& r = d.regions[static_cast<std::size_t>(ri)];
    const Int mult = domain_mult(d, dom, ri);
    if (mult == 0) continue;
    out.e += Rat(mult) * (Rat(2 - r.cycle_count) - Rat(r.corner_count, 4));
  }
  for (int p : x.points) {
    Int s = 0;
    for (int q : d.points[static_cast<std::size_t>(p)].quadrants) s += domain_mult(d, dom, q);
    out.n_x += Rat(s, 4);
  }
  for (int p : y.points) {
    Int s = 0;
    for (int q : d.points[static_cast<std::size_t>(p)].quadrants) s += domain_mult(d, dom, q);
    out.n_y += Rat(s, 4);
  }
  out.mu = out.e + out.n_x + out.n_y;
  return out;
}

}  // namespace detail

// Maslov index mu(D) = e(D) + n_x(D) + n_y(D): Euler measure plus the average
// quadrant multiplicities at the two generators. For a region with b boundary
// circles and c corners the Euler measure weight is (2 - b) - c/4, so a bigon
// counts 1/2 and a rectangle 0.
//
// A domain D connects x to y exactly when at every intersection point p, with
// a_in / a_out the arcs of p's alpha curve ending / starting at p and
// coeff(A) = D[positive side of A] - D[negative side of A],
//
//   coeff(a_in) - coeff(a_out) = [p in y] - [p in x].
//
// In quadrant multiplicities m0..m3 this reads (m1 + m3) - (m0 + m2) =
// [p in y] - [p in x] at a positive point and the negation at a negative
// point. The matching relation on beta curves, with x and y exchanged,
// follows because the boundary of the boundary of D vanishes. This is the
// normative statement of boundary compatibility; everything else defers
// to it.
inline Rat maslov_index(const Diagram& d, const DomainVector& dom,
                        const Generator& x, const Generator& y) {
  expect_valid(d);
  detail::check_generator(d, x, "source");
  detail::check_generator(d, y, "target");
  detail::check_domain_support(d, dom);
  const detail::Measures m = detail::measures(d, dom, x, y);
  if (!m.connects)
    throw NotConnecting("domain does not connect " + generator_label(d, x) + " to " +
                        generator_label(d, y) + ": multiplicity jump mismatch at point '" +
                        m.mismatch_point + "'");
  return m.mu;
}

// All interior-supported domains with multiplicities in {0,1} that connect x
// to y and have Maslov index 1. Along each curve the jump rule fixes the arc
// coefficients up to one additive constant, and a 0/1 domain keeps every
// coefficient in [-1,1], so the constant ranges over a window of at most
// three values; each choice is checked by propagating multiplicities from
// the outer regions (which carry 0) across the arcs.
inline std::vector<DomainVector> positive_domains(const Diagram& d, const Generator& x,
                                                  const Generator& y) {
  if (!is_nice(d)) throw NotNice("diagram '" + d.name + "' is not nice");
  detail::check_generator(d, x, "source");
  detail::check_generator(d, y, "target");

  struct Plan {
    const Curve* curve = nullptr;
    bool closed = false;
    std::vector<Int> offsets;  // coeff(arcs[j]) = base + offsets[j]
    Int lo, hi;                // inclusive window for the base constant
  };
  std::vector<Plan> plans;
  for (Family fam : {Family::Alpha, Family::Beta}) {
    for (const Curve& c : fam == Family::Alpha ? d.alpha : d.beta) {
      Plan pl;
      pl.curve = &c;
      pl.closed = c.closed();
      if (pl.closed) {
        pl.lo = -1;
        pl.hi = 1;
        plans.push_back(std::move(pl));
        continue;
      }
      const std::size_t m = c.points.size();
      const auto delta = [&](int point) -> Int {
        const Int dy = y.contains(point) ? 1 : 0;
        const Int dx = x.contains(point) ? 1 : 0;
        return fam == Family::Alpha ? dy - dx : dx - dy;
      };
      pl.offsets.assign(m, Int(0));
      for (std::size_t j = 1; j < m; ++j)
        pl.offsets[j] = pl.offsets[j - 1] - delta(c.points[j]);
      if (pl.offsets[m - 1] - delta(c.points[0]) != 0) return {};
      const auto [mn, mx] = std::minmax_element(pl.offsets.begin(), pl.offsets.end());
      pl.lo = -1 - *mn;
      pl.hi = 1 - *mx;
      if (pl.lo > pl.hi) return {};
      plans.push_back(std::move(pl));
    }
  }

  Int combos = 1;
  for (const Plan& pl : plans) combos *= pl.hi - pl.lo + 1;
  if (combos > 4000000)
    throw ResourceLimit("domain search space exceeds 4e6 coefficient patterns");

  struct Edge {
    int to;
    int id;  // arc index, or plan index for a closed curve
    int dir;
    bool closed;
  };
  std::vector<std::vector<Edge>> adj(d.regions.size());
  for (std::size_t ai = 0; ai < d.arcs.size(); ++ai) {
    const Arc& a = d.arcs[ai];
    adj[static_cast<std::size_t>(a.neg_region)].push_back(
        {a.pos_region, static_cast<int>(ai), +1, false});
    adj[static_cast<std::size_t>(a.pos_region)].push_back(
        {a.neg_region, static_cast<int>(ai), -1, false});
  }
  for (std::size_t pi = 0; pi < plans.size(); ++pi) {
    if (!plans[pi].closed) continue;
    const Curve& c = *plans[pi].curve;
    adj[static_cast<std::size_t>(c.neg_region)].push_back(
        {c.pos_region, static_cast<int>(pi), +1, true});
    adj[static_cast<std::size_t>(c.pos_region)].push_back(
        {c.neg_region, static_cast<int>(pi), -1, true});
  }

  std::vector<Int> base(plans.size());
  for (std::size_t i = 0; i < plans.size(); ++i) base[i] = plans[i].lo;
  std::vector<Int> arc_coeff(d.arcs.size(), Int(0));
  std::vector<DomainVector> found;
  while (true) {
    for (std::size_t i = 0; i < plans.size(); ++i) {
      if (plans[i].closed) continue;
      const Curve& c = *plans[i].curve;
      for (std::size_t j = 0; j < c.arcs.size(); ++j)
        arc_coeff[static_cast<std::size_t>(c.arcs[j])] = base[i] + plans[i].offsets[j];
    }
    std::vector<std::optional<Int>> val(d.regions.size());
    std::queue<int> queue;
    std::size_t seen = 0;
    for (std::size_t r = 0; r < d.regions.size(); ++r)
      if (d.regions[r].outer) {
        val[r] = 0;
        queue.push(static_cast<int>(r));
        ++seen;
      }
    bool ok = true;
    while (ok && !queue.empty()) {
      const int r = queue.front();
      queue.pop();
      for (const Edge& e : adj[static_cast<std::size_t>(r)]) {
        const Int coeff = e.closed ? base[static_cast<std::size_t>(e.id)]
                                   : arc_coeff[static_cast<std::size_t>(e.id)];
        const Int want = *val[static_cast<std::size_t>(r)] + coeff * e.dir;
        auto& slot = val[static_cast<std::size_t>(e.to)];
        if (!slot) {
          if (want < 0 || want > 1) {
            ok = false;
            break;
          }
          slot = want;
          queue.push(e.to);
          ++seen;
        } else if (*slot != want) {
          ok = false;
          break;
        }
      }
    }
    if (ok && seen == d.regions.size()) {
      DomainVector dom;
      for (int ri : d.interior)
        if (*val[static_cast<std::size_t>(ri)] == 1)
          dom[d.regions[static_cast<std::size_t>(ri)].id] = 1;
      const detail::Measures mm = detail::measures(d, dom, x, y);
      if (!mm.connects)
        throw std::logic_error("constructed domain fails its own jump rule");
      if (mm.mu == 1) found.push_back(std::move(dom));
    }
    std::size_t i = 0;
    while (i < plans.size() && base[i] == plans[i].hi) {
      base[i] = plans[i].lo;
      ++i;
    }
    if (i == plans.size()) break;
    base[i] += 1;
  }
  std::sort(found.begin(), found.end());
  return found;
}

struct DomainAudit {
  int from = -1, to = -1;  // generator indices
  DomainVector domain;
  Rat e, n_x, n_y, mu;
};

struct FloerComplex {
  std::vector<Generator> generators;
  F2Matrix differential;  // entry (row target, column source): domain count mod 2
  std::vector<DomainAudit> domains;
};

inline FloerComplex differential(const Diagram& d) {
  expect_valid(d);
  if (!is_nice(d)) throw NotNice("diagram '" + d.name + "' is not nice");
  const AdmissibilityVerdict verdict = is_admissible(d);
  if (!verdict.admissible)
    throw NotAdmissible("diagram '" + d.name + "' is not admissible", verdict.witness);

  FloerComplex cx;
  cx.generators = enumerate_generators(d);
  const std::size_t n = cx.generators.size();
  cx.differential = F2Matrix(n, n);
  for (std::size_t xi = 0; xi < n; ++xi)
    for (std::size_t yi = 0; yi < n; ++yi) {
      const auto doms = positive_domains(d, cx.generators[xi], cx.generators[yi]);
      if (doms.size() % 2 != 0) cx.differential.set(yi, xi, true);
      for (const DomainVector& dom : doms) {
        const detail::Measures mm =
            detail::measures(d, dom, cx.generators[xi], cx.generators[yi]);
        cx.domains.push_back({static_cast<int>(xi), static_cast<int>(yi), dom, mm.e,
                              mm.n_x, mm.n_y, mm.mu});
      }
    }
  if (!multiply_f2(cx.differential, cx.differential).zero())
    throw std::logic_error("differential does not square to zero on '" + d.name + "'");
  return cx;
}

// Nonzero differential entries as "target <- source" lines.
inline std::vector<std::string> differential_entries(const Diagram& d, const FloerComplex& cx) {
  std::vector<std::string> out;
  for (std::size_t y = 0; y < cx.differential.rows; ++y)
    for (std::size_t x = 0; x < cx.differential.cols; ++x)
      if (cx.differential.get(y, x))
        out.push_back(generator_label(d, cx.generators[y]) + " <- " +
                      generator_label(d, cx.generators[x]));
  return out;
}

inline Int sfh_rank(const Diagram& d) {
  const FloerComplex cx = differential(d);
  return Int(cx.generators.size()) - 2 * Int(rank_f2(cx.differential));
}

}  // namespace shd
