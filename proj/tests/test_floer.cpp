#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "shd/admissibility.hpp"
#include "shd/corpus.hpp"
#include "shd/floer.hpp"
#include "shd/generators.hpp"
#include "shd/gridgen.hpp"
#include "shd/parse.hpp"

using namespace shd;

namespace {

Diagram load(const std::string& name) { return parse_diagram(*corpus_text(name)); }

// Independent oracle: try every 0/1 assignment on the interior regions and
// keep those whose edge-chain boundary realizes the generator difference on
// every curve with index one. Written against the raw cell structure, not
// the per-curve window enumeration.
struct SubsetOracle {
  const Diagram& d;

  Int coeff(const std::vector<Int>& mult, const Arc& a) const {
    return mult[static_cast<std::size_t>(a.pos_region)] -
           mult[static_cast<std::size_t>(a.neg_region)];
  }

  bool connects(const std::vector<Int>& mult, const Generator& x,
                const Generator& y) const {
    for (int fam = 0; fam < 2; ++fam)
      for (const Curve& c : fam == 0 ? d.alpha : d.beta)
        for (int p : c.points) {
          Int jump = 0;
          for (int ai : c.arcs) {
            const Arc& a = d.arcs[static_cast<std::size_t>(ai)];
            if (a.to == p) jump += coeff(mult, a);
            if (a.from == p) jump -= coeff(mult, a);
          }
          Int want = Int(y.contains(p)) - Int(x.contains(p));
          if (fam == 1) want = -want;
          if (jump != want) return false;
        }
    return true;
  }

  Rat index(const std::vector<Int>& mult, const Generator& x,
            const Generator& y) const {
    Rat e = 0;
    for (std::size_t ri = 0; ri < d.regions.size(); ++ri) {
      if (mult[ri] == 0) continue;
      const Region& r = d.regions[ri];
      e += Rat(mult[ri]) * (Rat(2 - r.cycle_count) - Rat(r.corner_count, 4));
    }
    Rat pts = 0;
    for (const Generator* g : {&x, &y})
      for (int p : g->points)
        for (int q : d.points[static_cast<std::size_t>(p)].quadrants)
          pts += Rat(mult[static_cast<std::size_t>(q)], 4);
    return e + pts;
  }

  std::vector<DomainVector> all(const Generator& x, const Generator& y) const {
    const std::size_t n = d.interior.size();
    REQUIRE(n <= 16);
    std::vector<DomainVector> found;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<Int> mult(d.regions.size(), 0);
      for (std::size_t j = 0; j < n; ++j)
        if (mask & (std::uint64_t{1} << j))
          mult[static_cast<std::size_t>(d.interior[j])] = 1;
      if (!connects(mult, x, y)) continue;
      if (index(mult, x, y) != 1) continue;
      DomainVector dom;
      for (std::size_t j = 0; j < n; ++j)
        if (mask & (std::uint64_t{1} << j))
          dom[d.regions[static_cast<std::size_t>(d.interior[j])].id] = 1;
      found.push_back(std::move(dom));
    }
    std::sort(found.begin(), found.end());
    return found;
  }
};

const char* kFingerText = R"({
  "name": "s3-finger",
  "alpha": [["q1", "q2", "q3"]],
  "beta": [["q1", "q3", "q2"]],
  "regions": [
    {"id": "T", "outer": true, "boundary": [
      {"curve": "a1", "from": "q2", "to": "q3", "orient": 1},
      {"curve": "b1", "from": "q3", "to": "q2", "orient": 1},
      {"suture": 0}]},
    {"id": "P", "outer": false, "boundary": [
      {"curve": "a1", "from": "q1", "to": "q2", "orient": -1},
      {"curve": "b1", "from": "q2", "to": "q1", "orient": -1}]},
    {"id": "O", "outer": false, "boundary": [
      {"curve": "a1", "from": "q1", "to": "q2", "orient": 1},
      {"curve": "b1", "from": "q3", "to": "q2", "orient": -1},
      {"curve": "a1", "from": "q3", "to": "q1", "orient": 1},
      {"curve": "b1", "from": "q1", "to": "q3", "orient": 1},
      {"curve": "a1", "from": "q2", "to": "q3", "orient": -1},
      {"curve": "b1", "from": "q2", "to": "q1", "orient": 1},
      {"curve": "a1", "from": "q3", "to": "q1", "orient": -1},
      {"curve": "b1", "from": "q1", "to": "q3", "orient": -1}]}
  ]
})";

}  // namespace

TEST_CASE("positive domains match the subset oracle on the corpus") {
  for (const auto& [name, text] : corpus()) {
    const Diagram d = parse_diagram(text);
    if (!is_nice(d) || d.interior.size() > 12) continue;
    const auto gens = enumerate_generators(d);
    const SubsetOracle oracle{d};
    for (const Generator& x : gens)
      for (const Generator& y : gens) {
        INFO(name << ": " << generator_label(d, x) << " -> " << generator_label(d, y));
        CHECK(positive_domains(d, x, y) == oracle.all(x, y));
      }
  }
}

TEST_CASE("positive domains match the subset oracle on grids") {
  for (const auto& text : {make_grid(2, {{0, 0}, {1, 1}}),
                           make_grid(3, {{0, 1}, {1, 2}, {2, 0}})}) {
    const Diagram d = parse_diagram(text);
    const auto gens = enumerate_generators(d);
    const SubsetOracle oracle{d};
    for (const Generator& x : gens)
      for (const Generator& y : gens) {
        INFO(d.name << ": " << generator_label(d, x) << " -> " << generator_label(d, y));
        CHECK(positive_domains(d, x, y) == oracle.all(x, y));
      }
  }
}

TEST_CASE("the two-bigon annulus has exactly two connecting domains") {
  const Diagram d = load("s1s2-admissible");
  const auto gens = enumerate_generators(d);
  REQUIRE(gens.size() == 2);
  const auto forward = positive_domains(d, gens[0], gens[1]);
  REQUIRE(forward.size() == 2);
  CHECK(forward[0] == DomainVector{{"B1", 1}});
  CHECK(forward[1] == DomainVector{{"B2", 1}});
  CHECK(positive_domains(d, gens[1], gens[0]).empty());

  for (const DomainVector& dom : forward) {
    CHECK(maslov_index(d, dom, gens[0], gens[1]) == 1);
    const auto m = detail::measures(d, dom, gens[0], gens[1]);
    CHECK(m.e == Rat(1, 2));
    CHECK(m.n_x == Rat(1, 4));
    CHECK(m.n_y == Rat(1, 4));
  }
}

TEST_CASE("maslov index of a periodic domain at a fixed generator") {
  const Diagram d = load("s1s2-admissible");
  const auto gens = enumerate_generators(d);
  const DomainVector periodic = {{"B1", 1}, {"B2", -1}};
  CHECK(maslov_index(d, periodic, gens[0], gens[0]) == 0);
  CHECK(maslov_index(d, DomainVector{}, gens[0], gens[0]) == 0);
}

TEST_CASE("domains that do not connect are rejected") {
  const Diagram d = load("s1s2-admissible");
  const auto gens = enumerate_generators(d);
  CHECK_THROWS_AS(maslov_index(d, DomainVector{{"B1", 1}}, gens[0], gens[0]),
                  NotConnecting);
  CHECK_THROWS_AS(maslov_index(d, DomainVector{{"nope", 1}}, gens[0], gens[1]),
                  ReferenceError);
}

TEST_CASE("differential squares to zero and ranks are as expected") {
  const std::map<std::string, Int> expected = {
      {"ball", 1},  {"s3", 1},    {"rp3", 2},   {"lens2", 2},  {"lens3", 3},
      {"lens4", 4}, {"lens5", 5}, {"s1s2-admissible", 2}, {"knot-l51", 5},
  };
  for (const auto& [name, rank] : expected) {
    INFO(name);
    const Diagram d = load(name);
    const FloerComplex cx = differential(d);
    CHECK(multiply_f2(cx.differential, cx.differential).zero());
    CHECK(sfh_rank(d) == rank);
  }
}

TEST_CASE("the annulus differential cancels mod two") {
  const FloerComplex cx = differential(load("s1s2-admissible"));
  CHECK(cx.domains.size() == 2);       // two bigons from x to y
  CHECK(cx.differential.zero());       // they cancel over F2
  CHECK(differential_entries(load("s1s2-admissible"), cx).empty());
}

TEST_CASE("grid ranks") {
  const Diagram g2 = parse_diagram(make_grid(2, {{0, 0}, {1, 1}}));
  CHECK(sfh_rank(g2) == 2);
  const Diagram g3 = parse_diagram(make_grid(3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK(enumerate_generators(g3).size() == 6);
  CHECK(sfh_rank(g3) == 4);

  const FloerComplex cx = differential(g3);
  CHECK(rank_f2(cx.differential) == 1);
  for (const std::string& line : differential_entries(g3, cx)) {
    INFO(line);
    CHECK(line.find(" <- ") != std::string::npos);
  }
}

TEST_CASE("maslov index is additive on composites") {
  int composites = 0;
  const Diagram d = parse_diagram(make_grid(3, {{0, 1}, {1, 2}, {2, 0}}));
  const FloerComplex cx = differential(d);
  for (const DomainAudit& a : cx.domains)
    for (const DomainAudit& b : cx.domains) {
      if (a.to != b.from) continue;
      DomainVector sum = a.domain;
      for (const auto& [id, m] : b.domain) {
        sum[id] += m;
        if (sum[id] == 0) sum.erase(id);
      }
      const Rat mu = maslov_index(d, sum,
                                  cx.generators[static_cast<std::size_t>(a.from)],
                                  cx.generators[static_cast<std::size_t>(b.to)]);
      CHECK(mu == a.mu + b.mu);
      ++composites;
    }
  CHECK(composites > 0);
}

TEST_CASE("non-nice diagrams are refused by the differential") {
  CHECK_THROWS_AS(differential(load("s1s2-inadmissible")), NotNice);
  const Diagram finger = parse_diagram(kFingerText);
  CHECK(is_admissible(finger).admissible);
  CHECK_THROWS_AS(sfh_rank(finger), NotNice);
  const auto gens = enumerate_generators(finger);
  REQUIRE(gens.size() == 3);
  CHECK_THROWS_AS(positive_domains(finger, gens[0], gens[1]), NotNice);
}

TEST_CASE("f2 matrix basics") {
  F2Matrix m(3, 3);
  m.set(0, 1, true);
  m.set(1, 2, true);
  CHECK(rank_f2(m) == 2);
  const F2Matrix sq = multiply_f2(m, m);
  CHECK(sq.get(0, 2));
  CHECK(rank_f2(sq) == 1);
  F2Matrix z(4, 2);
  CHECK(z.zero());
  CHECK(rank_f2(z) == 0);
}
