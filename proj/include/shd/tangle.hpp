#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shd/admissibility.hpp"
#include "shd/diagram.hpp"
#include "shd/errors.hpp"
#include "shd/generators.hpp"
#include "shd/lattice.hpp"

namespace shd {

// One strand bundle per interior region, sized by the region's area. The
// areas make the union of strands nullhomologous rel boundary, which is what
// verify_null_homology checks against the lattice.
struct FullTangle {
  std::map<std::string, Int> points_per_region;
  Int total_strands = 0;
  AreaCertificate source_certificate;
};

inline FullTangle build_full_tangle(const Diagram& d,
                                    const AreaCertificate& cert) {
  FullTangle t;
  for (int ri : d.interior) {
    const std::string& id = d.regions[static_cast<std::size_t>(ri)].id;
    auto it = cert.areas.find(id);
    if (it == cert.areas.end())
      throw EmptyCertificateOnInteriorRegions(
          "certificate assigns no area to interior region " + id);
    if (it->second < 1)
      throw EmptyCertificateOnInteriorRegions(
          "certificate area for interior region " + id + " is not positive");
  }
  t.points_per_region = cert.areas;
  t.source_certificate = cert;
  for (const auto& [id, a] : t.points_per_region) t.total_strands += a;
  return t;
}

// Signed area of every lattice generator against the strand counts; all zero
// means the tangle is nullhomologous rel boundary over the rationals.
inline bool verify_null_homology(const FullTangle& t,
                                 const PeriodicLattice& lat) {
  for (const DomainVector& p : lat.basis) {
    Int dot = 0;
    for (const auto& [id, mult] : p) {
      auto it = t.points_per_region.find(id);
      if (it != t.points_per_region.end()) dot += it->second * mult;
    }
    if (dot != 0) return false;
  }
  return true;
}

struct SignAssignment {
  std::map<std::string, int> signs;  // point id -> +1 / -1
  std::vector<std::string> q_of_i;   // ids carrying -, in name order
};

// All tuples in {+,-}^t with exactly one - on each alpha curve and exactly
// one on each beta curve: pick the - point per alpha curve and prune on beta
// reuse. Output order matches the generator enumeration.
inline std::vector<SignAssignment> enumerate_sign_assignments(
    const Diagram& d) {
  expect_valid(d);
  if (d.points.size() > 62)
    throw ResourceLimit("more than 62 intersection points");
  const int k = d.k();
  std::vector<std::vector<int>> candidates(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    candidates[static_cast<std::size_t>(i)] =
        d.alpha[static_cast<std::size_t>(i)].points;
    std::sort(candidates[static_cast<std::size_t>(i)].begin(),
              candidates[static_cast<std::size_t>(i)].end(), [&](int a, int b) {
                return d.points[static_cast<std::size_t>(a)].name <
                       d.points[static_cast<std::size_t>(b)].name;
              });
  }
  std::vector<SignAssignment> out;
  std::vector<int> minus;
  std::uint64_t used_beta = 0;
  auto emit = [&]() {
    SignAssignment sa;
    for (const Point& p : d.points) sa.signs[p.name] = 1;
    for (int p : minus) sa.signs[d.points[static_cast<std::size_t>(p)].name] = -1;
    for (const auto& [name, s] : sa.signs)
      if (s < 0) sa.q_of_i.push_back(name);
    out.push_back(std::move(sa));
  };
  auto rec = [&](auto&& self, int slot) -> void {
    if (slot == k) {
      emit();
      return;
    }
    for (int p : candidates[static_cast<std::size_t>(slot)]) {
      const int bc = d.points[static_cast<std::size_t>(p)].beta_curve;
      if (used_beta & (std::uint64_t{1} << bc)) continue;
      used_beta |= std::uint64_t{1} << bc;
      minus.push_back(p);
      self(self, slot + 1);
      minus.pop_back();
      used_beta &= ~(std::uint64_t{1} << bc);
    }
  };
  rec(rec, 0);
  return out;
}

struct BoundReport {
  bool admissible = false;
  std::optional<Int> bound;  // |generators| when admissible
  AreaCertificate certificate;
  std::optional<FullTangle> tangle;
  Int sign_assignments = 0;
  DomainVector witness;  // inadmissibility witness otherwise
};

// Upper bound for the instanton dimension: the generator count, asserted
// only on admissible diagrams. Inadmissible input yields a witness and no
// bound.
inline BoundReport shi_upper_bound(const Diagram& d) {
  BoundReport rep;
  AdmissibilityVerdict v = is_admissible(d);
  rep.admissible = v.admissible;
  if (!v.admissible) {
    rep.witness = v.witness;
    return rep;
  }
  rep.certificate = v.certificate;
  rep.bound = Int(enumerate_generators(d).size());
  rep.tangle = build_full_tangle(d, v.certificate);
  rep.sign_assignments = Int(enumerate_sign_assignments(d).size());
  if (*rep.bound != rep.sign_assignments)
    throw std::logic_error(
        "sign assignments and generators fell out of bijection");
  return rep;
}

struct TrajectoryReport {
  struct Entry {
    std::string name;
    bool admissible = false;
    std::optional<Int> count;  // |generators|; absent for skipped diagrams
  };
  std::optional<Int> minimum;  // over admissible entries; none when all skip
  std::string attained_by;     // first diagram reaching the minimum
  std::vector<Entry> per_diagram;
};

// Minimum generator count over the admissible members of the set. Callers
// are responsible for the diagrams presenting the same manifold.
inline TrajectoryReport trajectory_min(const std::vector<Diagram>& corpus) {
  TrajectoryReport rep;
  for (const Diagram& d : corpus) {
    TrajectoryReport::Entry e;
    e.name = d.name;
    e.admissible = is_admissible(d).admissible;
    if (e.admissible) {
      e.count = Int(enumerate_generators(d).size());
      if (!rep.minimum || *e.count < *rep.minimum) {
        rep.minimum = e.count;
        rep.attained_by = d.name;
      }
    }
    rep.per_diagram.push_back(std::move(e));
  }
  return rep;
}

}  // namespace shd
