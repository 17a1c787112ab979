#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

#include "shd/admissibility.hpp"
#include "shd/corpus.hpp"
#include "shd/intlinalg.hpp"
#include "shd/parse.hpp"

using namespace shd;

namespace {

Diagram load(const std::string& name) { return parse_diagram(*corpus_text(name)); }

bool spans(const IntMat& rows, const std::vector<Int>& v) {
  IntMat without = rows;
  const std::size_t r0 = row_hnf(without).size();
  IntMat with = rows;
  with.push_back(v);
  return row_hnf(with).size() == r0;
}

}  // namespace

TEST_CASE("corpus verdicts") {
  for (const auto& [name, text] : corpus()) {
    INFO(name);
    const AdmissibilityVerdict v = is_admissible(parse_diagram(text));
    CHECK(v.admissible == (name != "s1s2-inadmissible"));
  }
}

TEST_CASE("certificates are positive and kill every periodic domain") {
  for (const auto& [name, text] : corpus()) {
    const Diagram d = parse_diagram(text);
    const AdmissibilityVerdict v = is_admissible(d);
    if (!v.admissible) continue;
    INFO(name);
    for (int ri : d.interior) {
      const std::string& id = d.regions[static_cast<std::size_t>(ri)].id;
      REQUIRE(v.certificate.areas.count(id) == 1);
      CHECK(v.certificate.areas.at(id) >= 1);
    }
    for (const DomainVector& dom : periodic_domain_basis(d).basis)
      CHECK(signed_area(v.certificate, dom) == 0);
  }
}

TEST_CASE("expected certificates") {
  CHECK(is_admissible(load("rp3")).certificate.areas ==
        std::map<std::string, Int>{{"R1", 1}});
  CHECK(is_admissible(load("s1s2-admissible")).certificate.areas ==
        std::map<std::string, Int>{{"B1", 1}, {"B2", 1}});
  CHECK(is_admissible(load("knot-l51")).certificate.areas ==
        std::map<std::string, Int>{{"P1", 1}, {"P3", 1}, {"P4", 1}});
}

TEST_CASE("the inadmissible annulus yields its witness") {
  const AdmissibilityVerdict v = is_admissible(load("s1s2-inadmissible"));
  REQUIRE_FALSE(v.admissible);
  const DomainVector expected = {{"Rint", 1}};
  CHECK(v.witness == expected);
  CHECK_THROWS_AS(area_certificate(load("s1s2-inadmissible")), NotAdmissible);
}

TEST_CASE("exactly one farkas branch on random lattices") {
  std::mt19937 rng(90210);
  std::uniform_int_distribution<int> dim(1, 6), entry(-3, 3);
  for (int t = 0; t < 150; ++t) {
    const std::size_t r = static_cast<std::size_t>(dim(rng));
    const std::size_t c = static_cast<std::size_t>(dim(rng));
    IntMat rows(r, std::vector<Int>(c));
    for (auto& row : rows)
      for (Int& x : row) x = entry(rng);

    const auto witness = nonnegative_combination(rows, c);
    const auto cert = positive_orthogonal_vector(rows, c);
    INFO("instance " << t);
    REQUIRE(witness.has_value() != cert.has_value());
    if (cert) {
      for (const Int& a : *cert) CHECK(a >= 1);
      for (const auto& row : rows) {
        Int dot = 0;
        for (std::size_t j = 0; j < c; ++j) dot += row[j] * (*cert)[j];
        CHECK(dot == 0);
      }
    } else {
      bool nonzero = false;
      for (const Int& x : *witness) {
        CHECK(x >= 0);
        if (x != 0) nonzero = true;
      }
      CHECK(nonzero);
      CHECK(spans(rows, *witness));
    }
  }
}

TEST_CASE("farkas on handmade edge lattices") {
  // zero lattice: certificate of all ones
  {
    IntMat rows = {{0, 0, 0}};
    CHECK_FALSE(nonnegative_combination(rows, 3).has_value());
    const auto cert = positive_orthogonal_vector(rows, 3);
    REQUIRE(cert.has_value());
    CHECK(*cert == std::vector<Int>{1, 1, 1});
  }
  // a row that is itself nonnegative and nonzero
  {
    IntMat rows = {{1, 0, 2}};
    const auto witness = nonnegative_combination(rows, 3);
    REQUIRE(witness.has_value());
    CHECK_FALSE(positive_orthogonal_vector(rows, 3).has_value());
  }
  // mixed-sign single row: admissible, lexicographically minimal certificate
  {
    IntMat rows = {{1, -1}};
    const auto cert = positive_orthogonal_vector(rows, 2);
    REQUIRE(cert.has_value());
    CHECK(*cert == std::vector<Int>{1, 1});
  }
  // witness needs a combination of two rows
  {
    IntMat rows = {{1, -1, 0}, {0, 1, 1}};
    const auto witness = nonnegative_combination(rows, 3);
    REQUIRE(witness.has_value());
    CHECK(spans(rows, *witness));
  }
}
