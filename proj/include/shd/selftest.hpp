#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "shd/admissibility.hpp"
#include "shd/classify.hpp"
#include "shd/corpus.hpp"
#include "shd/floer.hpp"
#include "shd/generators.hpp"
#include "shd/gridgen.hpp"
#include "shd/intlinalg.hpp"
#include "shd/lattice.hpp"
#include "shd/parse.hpp"
#include "shd/tangle.hpp"
#include "shd/validate.hpp"

namespace shd {

struct SuiteResult {
  std::string name;
  bool ok = true;
  std::string detail;
};

namespace selftest_detail {

// Oracle permanent: plain sum over permutations. Exponential, fine for the
// small matrices exercised here.
inline Int permanent_by_permutations(const std::vector<std::vector<long>>& m) {
  const std::size_t k = m.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Int total = 0;
  do {
    Int prod = 1;
    for (std::size_t i = 0; i < k; ++i) prod *= Int(m[i][perm[i]]);
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Chain-level connectivity test: along every curve the boundary of the
// domain's edge chain must hit exactly the generator difference. mult is
// indexed by region, zero on outer regions.
inline bool subset_connects(const Diagram& d, const std::vector<Int>& mult,
                            const Generator& x, const Generator& y) {
  auto coeff = [&](const Arc& a) -> Int {
    return mult[static_cast<std::size_t>(a.pos_region)] -
           mult[static_cast<std::size_t>(a.neg_region)];
  };
  for (int fam = 0; fam < 2; ++fam) {
    const auto& curves = fam == 0 ? d.alpha : d.beta;
    for (const Curve& c : curves) {
      for (int p : c.points) {
        Int jump = 0;
        for (int ai : c.arcs) {
          const Arc& a = d.arcs[static_cast<std::size_t>(ai)];
          if (a.to == p) jump += coeff(a);
          if (a.from == p) jump -= coeff(a);
        }
        Int want = Int(y.contains(p) ? 1 : 0) - Int(x.contains(p) ? 1 : 0);
        if (fam == 1) want = -want;
        if (jump != want) return false;
      }
    }
  }
  return true;
}

inline Rat subset_mu(const Diagram& d, const std::vector<Int>& mult,
                     const Generator& x, const Generator& y) {
  Rat e = 0;
  for (std::size_t ri = 0; ri < d.regions.size(); ++ri) {
    const Region& r = d.regions[ri];
    if (mult[ri] == 0) continue;
    const Rat weight = Rat(2 - r.cycle_count) - Rat(r.corner_count, 4);
    e += Rat(mult[ri]) * weight;
  }
  auto point_avg = [&](const Generator& g) {
    Rat total = 0;
    for (int p : g.points)
      for (int q : d.points[static_cast<std::size_t>(p)].quadrants)
        total += Rat(mult[static_cast<std::size_t>(q)]);
    return total / 4;
  };
  return e + point_avg(x) + point_avg(y);
}

// Every 0/1 vector over the interior regions, kept when it connects x to y
// with index one. Independent of the window-based enumeration.
inline std::vector<DomainVector> domains_bruteforce(const Diagram& d,
                                                    const Generator& x,
                                                    const Generator& y) {
  const std::size_t n = d.interior.size();
  if (n > 20) throw ResourceLimit("bruteforce domain oracle limited to 20 interior regions");
  std::vector<DomainVector> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Int> mult(d.regions.size(), 0);
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (std::uint64_t{1} << j))
        mult[static_cast<std::size_t>(d.interior[j])] = 1;
    if (!subset_connects(d, mult, x, y)) continue;
    if (subset_mu(d, mult, x, y) != 1) continue;
    DomainVector dom;
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (std::uint64_t{1} << j))
        dom[d.regions[static_cast<std::size_t>(d.interior[j])].id] = 1;
    found.push_back(std::move(dom));
  }
  std::sort(found.begin(), found.end());
  return found;
}

inline std::vector<std::pair<std::string, Diagram>> parsed_corpus() {
  std::vector<std::pair<std::string, Diagram>> out;
  for (const auto& [name, text] : corpus()) out.emplace_back(name, parse_diagram(text));
  return out;
}

inline std::vector<std::pair<std::string, Diagram>> grid_fleet() {
  std::vector<std::pair<std::string, std::string>> texts = {
      {"grid1", make_grid(1, {{0, 0}})},
      {"grid2", make_grid(2, {{0, 0}, {1, 1}})},
      {"grid3", make_grid(3, {{0, 1}, {1, 2}, {2, 0}})},
  };
  std::mt19937 rng(20240817);
  std::vector<int> sigma = {0, 1, 2, 3};
  std::shuffle(sigma.begin(), sigma.end(), rng);
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < 4; ++i) cells.emplace_back(i, sigma[static_cast<std::size_t>(i)]);
  texts.emplace_back("grid4", make_grid(4, cells));
  std::vector<std::pair<std::string, Diagram>> out;
  for (auto& [name, text] : texts) out.emplace_back(name, parse_diagram(text));
  return out;
}

inline bool in_row_span(const IntMat& rows, const std::vector<Int>& v) {
  IntMat base = rows;
  const std::size_t before = [&] {
    IntMat tmp = base;
    return row_hnf(tmp).size();
  }();
  base.push_back(v);
  return row_hnf(base).size() == before;
}

}  // namespace selftest_detail

// Deterministic end-to-end checks of the library's own invariants, runnable
// from the command line. Returns one result per suite.
inline std::vector<SuiteResult> run_selftest() {
  using namespace selftest_detail;
  std::vector<SuiteResult> results;

  auto suite = [&](const std::string& name, auto&& body) {
    SuiteResult r;
    r.name = name;
    try {
      body(r);
    } catch (const std::exception& e) {
      r.ok = false;
      if (r.detail.empty()) r.detail = e.what();
    }
    results.push_back(std::move(r));
  };
  auto expect = [](SuiteResult& r, bool cond, const std::string& msg) {
    if (!cond && r.ok) {
      r.ok = false;
      r.detail = msg;
    }
  };

  const auto diags = parsed_corpus();
  const auto grids = grid_fleet();

  suite("round trip", [&](SuiteResult& r) {
    for (const auto& [name, text] : corpus()) {
      const RawDiagram raw = parse_raw(text);
      expect(r, to_json(raw).dump(2) + "\n" == text, name + ": raw round trip differs");
      expect(r, serialize(parse_diagram(text)) == text, name + ": diagram round trip differs");
    }
  });

  suite("validation", [&](SuiteResult& r) {
    for (const auto& [name, d] : diags)
      expect(r, validate(d).ok(), name + " fails validation");
    for (const auto& [name, d] : grids)
      expect(r, validate(d).ok(), name + " fails validation");
  });

  suite("farkas alternative", [&](SuiteResult& r) {
    auto check = [&](const std::string& label, const IntMat& rows, std::size_t cols) {
      const auto witness = nonnegative_combination(rows, cols);
      const auto cert = positive_orthogonal_vector(rows, cols);
      expect(r, witness.has_value() != cert.has_value(),
             label + ": expected exactly one of witness and certificate");
      if (cert) {
        for (const Int& a : *cert) expect(r, a >= 1, label + ": certificate entry below 1");
        for (const auto& row : rows) {
          Int dot = 0;
          for (std::size_t j = 0; j < cols; ++j) dot += row[j] * (*cert)[j];
          expect(r, dot == 0, label + ": certificate not orthogonal to lattice");
        }
      }
      if (witness) {
        bool nonzero = false;
        for (const Int& a : *witness) {
          expect(r, a >= 0, label + ": witness has a negative entry");
          if (a != 0) nonzero = true;
        }
        expect(r, nonzero, label + ": witness is zero");
        expect(r, in_row_span(rows, *witness), label + ": witness outside the lattice");
      }
    };
    for (const auto& [name, d] : diags) {
      const PeriodicLattice lat = periodic_domain_basis(d);
      if (lat.rank() > 0) check(name, lat.mat, lat.region_ids.size());
    }
    std::mt19937 rng(271828);
    std::uniform_int_distribution<int> dim(1, 6), entry(-3, 3);
    for (int t = 0; t < 120; ++t) {
      const std::size_t rows_n = static_cast<std::size_t>(dim(rng));
      const std::size_t cols_n = static_cast<std::size_t>(dim(rng));
      IntMat rows(rows_n, std::vector<Int>(cols_n));
      for (auto& row : rows)
        for (Int& v : row) v = entry(rng);
      check("random " + std::to_string(t), rows, cols_n);
    }
  });

  suite("permanent", [&](SuiteResult& r) {
    for (const auto& [name, d] : diags) {
      const Int direct = Int(enumerate_generators(d).size());
      expect(r, direct == count_generators_permanent(d),
             name + ": enumeration disagrees with the permanent");
    }
    std::mt19937 rng(314159);
    std::uniform_int_distribution<int> dim(0, 5), entry(0, 3);
    for (int t = 0; t < 200; ++t) {
      const std::size_t k = static_cast<std::size_t>(dim(rng));
      std::vector<std::vector<long>> m(k, std::vector<long>(k));
      for (auto& row : m)
        for (long& v : row) v = entry(rng);
      expect(r, permanent(m) == permanent_by_permutations(m),
             "random permanent " + std::to_string(t) + " disagrees");
    }
  });

  suite("tangle", [&](SuiteResult& r) {
    for (const auto& [name, d] : diags) {
      const AdmissibilityVerdict v = is_admissible(d);
      if (!v.admissible) continue;
      const PeriodicLattice lat = periodic_domain_basis(d);
      const FullTangle t = build_full_tangle(d, v.certificate);
      expect(r, verify_null_homology(t, lat), name + ": tangle class is not null homologous");
      const Int gens = Int(enumerate_generators(d).size());
      expect(r, Int(enumerate_sign_assignments(d).size()) == gens,
             name + ": sign assignments do not match generators");
      const BoundReport b = shi_upper_bound(d);
      expect(r, b.admissible && b.bound && *b.bound == gens, name + ": bound mismatch");
    }
  });

  suite("differential squares to zero", [&](SuiteResult& r) {
    int ran = 0;
    auto run = [&](const std::string& name, const Diagram& d) {
      if (!is_nice(d) || !is_admissible(d).admissible) return;
      const FloerComplex cx = differential(d);  // asserts d^2 = 0 internally
      expect(r, multiply_f2(cx.differential, cx.differential).zero(),
             name + ": differential does not square to zero");
      ++ran;
    };
    for (const auto& [name, d] : diags) run(name, d);
    for (const auto& [name, d] : grids) run(name, d);
    expect(r, ran >= 10, "too few complexes exercised");
  });

  suite("domain enumeration oracle", [&](SuiteResult& r) {
    int pairs = 0;
    for (const auto& [name, d] : diags) {
      if (!is_nice(d) || d.interior.size() > 12) continue;
      const auto gens = enumerate_generators(d);
      for (const Generator& x : gens)
        for (const Generator& y : gens) {
          expect(r, positive_domains(d, x, y) == domains_bruteforce(d, x, y),
                 name + ": enumerated domains disagree with the oracle");
          ++pairs;
        }
    }
    expect(r, pairs >= 30, "too few generator pairs exercised");
  });

  suite("index additivity", [&](SuiteResult& r) {
    int composed = 0;
    auto run = [&](const std::string& name, const Diagram& d) {
      if (!is_nice(d) || !is_admissible(d).admissible) return;
      const FloerComplex cx = differential(d);
      for (const DomainAudit& a : cx.domains)
        for (const DomainAudit& b : cx.domains) {
          if (a.to != b.from) continue;
          DomainVector sum = a.domain;
          for (const auto& [id, mult] : b.domain) sum[id] += mult;
          const Rat mu = maslov_index(
              d, sum, cx.generators[static_cast<std::size_t>(a.from)],
              cx.generators[static_cast<std::size_t>(b.to)]);
          expect(r, mu == a.mu + b.mu, name + ": index not additive on a composite");
          ++composed;
        }
    };
    for (const auto& [name, d] : diags) run(name, d);
    for (const auto& [name, d] : grids) run(name, d);
    expect(r, composed >= 5, "too few composable pairs exercised");
  });

  suite("rank bounds", [&](SuiteResult& r) {
    auto run = [&](const std::string& name, const Diagram& d) {
      const Classification c = classify(d);
      if (!c.nice || !c.admissible) return;
      expect(r, c.sfh && c.generator_count && *c.sfh <= *c.generator_count,
             name + ": rank exceeds the generator count");
      expect(r, (*c.sfh == *c.generator_count) == (c.strong_diagram && *c.strong_diagram),
             name + ": rank equality must match the strong flag");
      if (c.strong_diagram && *c.strong_diagram && c.h1)
        expect(r, *c.h1 <= *c.sfh, name + ": homology order exceeds the rank");
    };
    for (const auto& [name, d] : diags) run(name, d);
    for (const auto& [name, d] : grids) run(name, d);
  });

  suite("trajectory", [&](SuiteResult& r) {
    const Diagram good = parse_diagram(*corpus_text("s1s2-admissible"));
    const Diagram bad = parse_diagram(*corpus_text("s1s2-inadmissible"));
    const TrajectoryReport rep = trajectory_min({bad, good});
    expect(r, rep.minimum && *rep.minimum == 2, "pair minimum should be 2");
    expect(r, rep.attained_by == good.name, "minimum attained by the wrong diagram");
    expect(r, rep.per_diagram.size() == 2 && !rep.per_diagram[0].admissible &&
                  !rep.per_diagram[0].count,
           "inadmissible entry should be skipped");
    const TrajectoryReport none = trajectory_min({bad});
    expect(r, !none.minimum, "no admissible diagram should yield no minimum");
  });

  return results;
}

inline bool selftest_ok(const std::vector<SuiteResult>& results) {
  for (const SuiteResult& r : results)
    if (!r.ok) return false;
  return true;
}

}  // namespace shd
