#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shd/diagram.hpp"
#include "shd/intlinalg.hpp"
#include "shd/validate.hpp"

namespace shd {

// Multiplicities by region id; absent means 0. Only interior regions appear.
using DomainVector = std::map<std::string, Int>;

struct PeriodicLattice {
  std::vector<std::string> region_ids;  // sorted interior ids = column order
  IntMat mat;                           // one lattice generator per row
  std::vector<DomainVector> basis;      // the same generators keyed by id

  std::size_t rank() const { return mat.size(); }
};

namespace detail {

// Coefficient pattern of one arc: +1 on the region traversing it positively,
// -1 on the other; outer regions count as 0.
inline std::vector<Int> arc_coeff_row(const Diagram& d, int pos_region,
                                      int neg_region) {
  std::vector<Int> row(d.interior.size(), 0);
  auto add = [&](int region, int delta) {
    const Region& r = d.regions[static_cast<std::size_t>(region)];
    if (r.outer) return;
    auto it = d.interior_pos.find(r.id);
    row[static_cast<std::size_t>(it->second)] += delta;
  };
  add(pos_region, 1);
  add(neg_region, -1);
  return row;
}

}  // namespace detail

// Lattice of interior-supported domains whose 1-chain boundary is an integer
// combination of whole curves: the coefficient must agree across all arcs of
// each curve. Basis rows are in Hermite normal form over the sorted interior
// region columns, so the result is canonical.
inline PeriodicLattice periodic_domain_basis(const Diagram& d) {
  expect_valid(d);
  PeriodicLattice lat;
  for (int ri : d.interior)
    lat.region_ids.push_back(d.regions[static_cast<std::size_t>(ri)].id);
  IntMat constraints;
  for (const std::vector<Curve>* fam : {&d.alpha, &d.beta}) {
    for (const Curve& c : *fam) {
      for (std::size_t j = 0; j + 1 < c.arcs.size(); ++j) {
        const Arc& a = d.arcs[static_cast<std::size_t>(c.arcs[j])];
        const Arc& b = d.arcs[static_cast<std::size_t>(c.arcs[j + 1])];
        std::vector<Int> row =
            detail::arc_coeff_row(d, a.pos_region, a.neg_region);
        std::vector<Int> next =
            detail::arc_coeff_row(d, b.pos_region, b.neg_region);
        for (std::size_t i = 0; i < row.size(); ++i) row[i] -= next[i];
        constraints.push_back(std::move(row));
      }
    }
  }
  lat.mat = integer_kernel(constraints, lat.region_ids.size());
  for (const auto& row : lat.mat) {
    DomainVector dv;
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0) dv[lat.region_ids[i]] = row[i];
    lat.basis.push_back(std::move(dv));
  }
  return lat;
}

inline bool h1_rel_trivial(const Diagram& d) {
  return periodic_domain_basis(d).rank() == 0;
}

// |det| of the signed intersection pairing; nullopt when the determinant
// vanishes (infinite order). Meaningful for diagrams of a once-punctured
// closed manifold; the caller decides applicability.
inline std::optional<Int> h1_order(const Diagram& d) {
  expect_valid(d);
  Int det = determinant(intersection_signs(d));
  if (det == 0) return std::nullopt;
  return det < 0 ? -det : det;
}

}  // namespace shd
