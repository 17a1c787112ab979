#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "shd/admissibility.hpp"
#include "shd/corpus.hpp"
#include "shd/generators.hpp"
#include "shd/lattice.hpp"
#include "shd/parse.hpp"
#include "shd/tangle.hpp"

using namespace shd;

namespace {

Diagram load(const std::string& name) { return parse_diagram(*corpus_text(name)); }

}  // namespace

TEST_CASE("full tangle carries one strand bundle per interior region") {
  for (const auto& [name, text] : corpus()) {
    const Diagram d = parse_diagram(text);
    const AdmissibilityVerdict v = is_admissible(d);
    if (!v.admissible) continue;
    INFO(name);
    const FullTangle t = build_full_tangle(d, v.certificate);
    CHECK(t.points_per_region == v.certificate.areas);
    Int total = 0;
    for (const auto& [id, a] : t.points_per_region) {
      CHECK(a >= 1);
      total += a;
    }
    CHECK(t.total_strands == total);
    CHECK(verify_null_homology(t, periodic_domain_basis(d)));
  }
}

TEST_CASE("null homology check rejects unbalanced strand counts") {
  const Diagram d = load("s1s2-admissible");
  // pairing with the basis element B1 - B2 must vanish; 2,1 breaks it
  FullTangle t;
  t.points_per_region = {{"B1", 2}, {"B2", 1}};
  t.total_strands = 3;
  CHECK_FALSE(verify_null_homology(t, periodic_domain_basis(d)));
}

TEST_CASE("a certificate missing an interior region is rejected") {
  const Diagram d = load("s1s2-admissible");
  AreaCertificate partial;
  partial.areas = {{"B1", 1}};
  CHECK_THROWS_AS(build_full_tangle(d, partial), EmptyCertificateOnInteriorRegions);
}

TEST_CASE("sign assignments biject with generators") {
  for (const auto& [name, text] : corpus()) {
    const Diagram d = parse_diagram(text);
    INFO(name);
    const auto assignments = enumerate_sign_assignments(d);
    const auto gens = enumerate_generators(d);
    REQUIRE(assignments.size() == gens.size());
    // the minus tuples are exactly the generator tuples
    std::set<std::vector<std::string>> minus_tuples, gen_tuples;
    for (const SignAssignment& a : assignments) minus_tuples.insert(a.q_of_i);
    for (const Generator& g : gens) {
      auto names = g.names(d);
      std::sort(names.begin(), names.end());
      gen_tuples.insert(names);
    }
    CHECK(minus_tuples == gen_tuples);
  }
}

TEST_CASE("bound pipeline on admissible diagrams") {
  const std::map<std::string, Int> expected = {
      {"s3", 1}, {"rp3", 2}, {"lens2", 2}, {"lens3", 3},
      {"lens4", 4}, {"lens5", 5}, {"s1s2-admissible", 2},
  };
  for (const auto& [name, bound] : expected) {
    INFO(name);
    const BoundReport rep = shi_upper_bound(load(name));
    REQUIRE(rep.admissible);
    REQUIRE(rep.bound.has_value());
    CHECK(*rep.bound == bound);
    CHECK(rep.sign_assignments == bound);
    REQUIRE(rep.tangle.has_value());
    CHECK(verify_null_homology(*rep.tangle, periodic_domain_basis(load(name))));
  }
}

TEST_CASE("bound refuses inadmissible input") {
  const BoundReport rep = shi_upper_bound(load("s1s2-inadmissible"));
  CHECK_FALSE(rep.admissible);
  CHECK_FALSE(rep.bound.has_value());
  const DomainVector expected = {{"Rint", 1}};
  CHECK(rep.witness == expected);
}

TEST_CASE("trajectory minimum skips inadmissible diagrams") {
  const Diagram good = load("s1s2-admissible");
  const Diagram bad = load("s1s2-inadmissible");
  const TrajectoryReport rep = trajectory_min({bad, good});
  REQUIRE(rep.minimum.has_value());
  CHECK(*rep.minimum == 2);
  CHECK(rep.attained_by == "s1s2-admissible");
  REQUIRE(rep.per_diagram.size() == 2);
  CHECK_FALSE(rep.per_diagram[0].admissible);
  CHECK_FALSE(rep.per_diagram[0].count.has_value());
  CHECK(rep.per_diagram[1].admissible);

  const TrajectoryReport none = trajectory_min({bad});
  CHECK_FALSE(none.minimum.has_value());
  CHECK(none.attained_by.empty());

  // several admissible entries: minimum over all of them
  const TrajectoryReport multi = trajectory_min({load("lens5"), load("rp3"), load("lens3")});
  REQUIRE(multi.minimum.has_value());
  CHECK(*multi.minimum == 2);
  CHECK(multi.attained_by == "rp3");
}
