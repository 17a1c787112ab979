#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shd/diagram.hpp"
#include "shd/errors.hpp"
#include "shd/exact.hpp"
#include "shd/lattice.hpp"
#include "shd/simplex.hpp"

namespace shd {

struct AreaCertificate {
  std::map<std::string, Int> areas;  // interior region id -> area >= 1
};

struct AdmissibilityVerdict {
  bool admissible = false;
  AreaCertificate certificate;  // populated when admissible
  DomainVector witness;         // nontrivial, >= 0 everywhere, when not
};

// A rational solution scales to an integer one by clearing denominators, so
// both questions below are decided over the rationals.

// Nonzero combination of the rows that is >= 0 in every coordinate, as a
// primitive integer vector. Encodes lambda = u - v with slack s = rows^T
// lambda and the normalization sum(s) = 1.
inline std::optional<std::vector<Int>> nonnegative_combination(
    const IntMat& rows, std::size_t cols) {
  const std::size_t r = rows.size();
  const std::size_t nvars = 2 * r + cols;
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<Rat> row(nvars, 0);
    for (std::size_t i = 0; i < r; ++i) {
      row[i] = rows[i][j];
      row[r + i] = -rows[i][j];
    }
    row[2 * r + j] = -1;
    a.push_back(std::move(row));
    b.emplace_back(0);
  }
  {
    std::vector<Rat> row(nvars, 0);
    for (std::size_t i = 0; i < r; ++i) {
      Rat w = 0;
      for (std::size_t j = 0; j < cols; ++j) w += Rat(rows[i][j]);
      row[i] = w;
      row[r + i] = -w;
    }
    a.push_back(std::move(row));
    b.emplace_back(1);
  }
  const LpResult res = solve_lp(std::move(a), std::move(b),
                                std::vector<Rat>(nvars, 0));
  if (!res.feasible) return std::nullopt;
  std::vector<Rat> combo(cols);
  for (std::size_t j = 0; j < cols; ++j) combo[j] = res.x[2 * r + j];
  return primitive_integer_vector(combo);
}

// Lexicographically minimal vector a with a_j >= 1 and rows . a = 0, scaled
// to a primitive integer vector (entries stay >= 1). Encodes a = 1 + s and
// minimizes the coordinates one at a time, pinning each optimum before the
// next solve.
inline std::optional<std::vector<Int>> positive_orthogonal_vector(
    const IntMat& rows, std::size_t cols) {
  const std::size_t r = rows.size();
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Rat> row(cols);
    Rat total = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      row[j] = rows[i][j];
      total += Rat(rows[i][j]);
    }
    a.push_back(std::move(row));
    b.push_back(-total);
  }
  std::vector<Rat> best(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<Rat> c(cols, 0);
    c[j] = 1;
    const LpResult res = solve_lp(a, b, c);
    if (!res.feasible) return std::nullopt;  // only possible on the first solve
    best[j] = res.objective;
    std::vector<Rat> fix(cols, 0);
    fix[j] = 1;
    a.push_back(std::move(fix));
    b.push_back(res.objective);
  }
  std::vector<Rat> areas(cols);
  for (std::size_t j = 0; j < cols; ++j) areas[j] = best[j] + 1;
  return primitive_integer_vector(areas);
}

inline AdmissibilityVerdict is_admissible(const Diagram& d) {
  const PeriodicLattice lat = periodic_domain_basis(d);
  AdmissibilityVerdict v;
  if (lat.rank() == 0) {
    // no nontrivial periodic domains: any positive areas certify
    v.admissible = true;
    for (const std::string& id : lat.region_ids) v.certificate.areas[id] = 1;
    return v;
  }
  const std::size_t n = lat.region_ids.size();
  if (auto w = nonnegative_combination(lat.mat, n)) {
    v.admissible = false;
    for (std::size_t j = 0; j < n; ++j)
      if ((*w)[j] != 0) v.witness[lat.region_ids[j]] = (*w)[j];
    return v;
  }
  const auto cert = positive_orthogonal_vector(lat.mat, n);
  if (!cert)
    throw std::logic_error(
        "no nonnegative periodic domain and no positive orthogonal vector; "
        "one of the two must exist");
  v.admissible = true;
  for (std::size_t j = 0; j < n; ++j)
    v.certificate.areas[lat.region_ids[j]] = (*cert)[j];
  return v;
}

inline AreaCertificate area_certificate(const Diagram& d) {
  AdmissibilityVerdict v = is_admissible(d);
  if (!v.admissible)
    throw NotAdmissible("diagram '" + d.name + "' is not admissible",
                        v.witness);
  return v.certificate;
}

inline Int signed_area(const AreaCertificate& cert, const DomainVector& dv) {
  Int total = 0;
  for (const auto& [id, mult] : dv) {
    auto it = cert.areas.find(id);
    if (it != cert.areas.end()) total += it->second * mult;
  }
  return total;
}

}  // namespace shd
