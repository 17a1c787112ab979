#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shd/admissibility.hpp"
#include "shd/diagram.hpp"
#include "shd/floer.hpp"
#include "shd/generators.hpp"
#include "shd/lattice.hpp"
#include "shd/validate.hpp"

namespace shd {

namespace detail {

// The h1 order reads as the order of H_1 of a closed manifold exactly when
// the diagram presents one with a single puncture: connected surface, one
// suture circle, and chi + 2k = 1 so that capping the boundary gives a
// closed surface whose genus equals the number of attaching curves.
inline bool once_punctured_closed(const Diagram& d) {
  std::size_t sutures = 0;
  for (const Region& r : d.regions) sutures += r.sutures.size();
  if (sutures != 1) return false;
  DSU dsu(d.regions.size());
  for (const Arc& a : d.arcs) dsu.unite(a.pos_region, a.neg_region);
  for (const auto* fam : {&d.alpha, &d.beta})
    for (const Curve& c : *fam)
      if (c.closed()) dsu.unite(c.pos_region, c.neg_region);
  std::set<int> roots;
  for (std::size_t r = 0; r < d.regions.size(); ++r)
    roots.insert(dsu.find(static_cast<int>(r)));
  if (roots.size() != 1) return false;
  long chi = static_cast<long>(d.points.size()) - static_cast<long>(d.arcs.size());
  for (const Region& r : d.regions) chi += 2 - r.cycle_count;
  return chi + 2 * d.k() == 1;
}

}  // namespace detail

struct Classification {
  bool admissible = false;
  bool nice = false;
  // unset = unknown: without niceness the differential is not computed here
  std::optional<bool> strong_diagram;
  std::optional<Int> h1;  // unset = infinite
  bool h1_applicable = false;  // see once_punctured_closed
  std::optional<Int> generator_count;
  std::optional<Int> sfh;
  bool strong_lspace_witness = false;
  std::optional<Int> implied_instanton_bound;
  DomainVector witness;  // inadmissibility witness when not admissible
  std::vector<std::string> statements;
};

inline Classification classify(const Diagram& d) {
  expect_valid(d);
  Classification c;
  c.nice = is_nice(d);
  const AdmissibilityVerdict verdict = is_admissible(d);
  c.admissible = verdict.admissible;
  c.h1 = h1_order(d);
  c.h1_applicable = detail::once_punctured_closed(d);

  if (c.admissible) {
    c.generator_count = Int(enumerate_generators(d).size());
    c.implied_instanton_bound = c.generator_count;
  } else {
    c.witness = verdict.witness;
  }

  if (c.nice) {
    if (c.admissible) {
      const FloerComplex cx = differential(d);
      const bool zero = cx.differential.zero();
      c.strong_diagram = zero;
      c.sfh = Int(cx.generators.size()) - 2 * Int(rank_f2(cx.differential));
      c.strong_lspace_witness = zero && c.h1 && *c.h1 == *c.generator_count;
    } else {
      c.strong_diagram = false;  // strong diagrams are admissible by definition
    }
  }

  if (!c.admissible) {
    c.statements.push_back(
        "not admissible: the generator count implies no bound on the instanton "
        "dimension");
  } else {
    c.statements.push_back("admissible: dim SHI(M,gamma) <= " +
                           c.implied_instanton_bound->str() +
                           ", the generator count of the diagram");
    if (c.strong_diagram && *c.strong_diagram) {
      c.statements.push_back("strong diagram: the differential vanishes, so rk SFH(M,gamma) = " +
                             c.sfh->str() + " and dim SHI(M,gamma) <= rk SFH(M,gamma)");
      if (c.strong_lspace_witness) {
        std::string stmt = "strong L-space diagram: the generator count equals |H_1| = " +
                           c.h1->str();
        if (c.h1_applicable)
          stmt += "; strong L-spaces are instanton L-spaces, so the presented manifold "
                  "is an instanton L-space";
        c.statements.push_back(std::move(stmt));
      }
    }
  }
  return c;
}

}  // namespace shd
