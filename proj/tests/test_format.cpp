#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>

#include "shd/corpus.hpp"
#include "shd/floer.hpp"
#include "shd/generators.hpp"
#include "shd/gridgen.hpp"
#include "shd/parse.hpp"
#include "shd/validate.hpp"

using namespace shd;

namespace {

// Octagon-bearing one-pointed diagram: valid and admissible, but the big
// interior region has eight corners. Useful wherever a non-nice but
// otherwise healthy diagram is needed.
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

TEST_CASE("corpus files round trip byte exactly") {
  for (const auto& [name, text] : corpus()) {
    INFO(name);
    CHECK(to_json(parse_raw(text)).dump(2) + "\n" == text);
    CHECK(serialize(parse_diagram(text)) == text);
  }
}

TEST_CASE("every corpus diagram validates") {
  for (const auto& [name, text] : corpus()) {
    INFO(name);
    CHECK(validate(parse_diagram(text)).ok());
  }
}

TEST_CASE("unknown keys are rejected") {
  ojson j = ojson::parse(*corpus_text("rp3"));
  SECTION("top level") {
    j["extra"] = 1;
    CHECK_THROWS_AS(parse_raw(j.dump()), SyntaxError);
  }
  SECTION("region object") {
    j["regions"][0]["color"] = "red";
    CHECK_THROWS_AS(parse_raw(j.dump()), SyntaxError);
  }
  SECTION("side object") {
    j["regions"][0]["boundary"][0]["width"] = 2;
    CHECK_THROWS_AS(parse_raw(j.dump()), SyntaxError);
  }
}

TEST_CASE("missing keys are rejected") {
  ojson j = ojson::parse(*corpus_text("rp3"));
  j.erase("name");
  CHECK_THROWS_AS(parse_raw(j.dump()), SyntaxError);
}

TEST_CASE("malformed values are rejected") {
  ojson j = ojson::parse(*corpus_text("rp3"));
  SECTION("orient out of range") {
    j["regions"][0]["boundary"][0]["orient"] = 2;
    CHECK_THROWS_AS(parse_raw(j.dump()), SyntaxError);
  }
  SECTION("negative suture index") {
    ojson k = ojson::parse(*corpus_text("s3"));
    bool patched = false;
    for (auto& reg : k["regions"])
      for (auto& side : reg["boundary"])
        if (side.contains("suture") && !patched) {
          side["suture"] = -1;
          patched = true;
        }
    REQUIRE(patched);
    CHECK_THROWS_AS(parse_raw(k.dump()), SyntaxError);
  }
  SECTION("not json at all") { CHECK_THROWS_AS(parse_raw("not json"), SyntaxError); }
}

TEST_CASE("dangling references are rejected") {
  ojson j = ojson::parse(*corpus_text("rp3"));
  SECTION("unknown curve") {
    j["regions"][0]["boundary"][0]["curve"] = "a9";
    CHECK_THROWS_AS(parse_diagram(j.dump()), ReferenceError);
  }
  SECTION("unknown point") {
    j["regions"][0]["boundary"][0]["from"] = "q9";
    CHECK_THROWS_AS(parse_diagram(j.dump()), ReferenceError);
  }
}

TEST_CASE("structural corruption fails validation") {
  ojson j = ojson::parse(*corpus_text("rp3"));
  j["regions"][0]["boundary"][0]["orient"] = -j["regions"][0]["boundary"][0]["orient"].get<int>();
  const Diagram d = parse_diagram(j.dump());
  CHECK_FALSE(validate(d).ok());
}

TEST_CASE("point relabeling does not change the invariants") {
  std::string text = *corpus_text("rp3");
  // swap the two point names everywhere
  std::string swapped;
  for (std::size_t i = 0; i < text.size();) {
    if (text.compare(i, 2, "q1") == 0) {
      swapped += "q2";
      i += 2;
    } else if (text.compare(i, 2, "q2") == 0) {
      swapped += "q1";
      i += 2;
    } else {
      swapped += text[i];
      ++i;
    }
  }
  const Diagram a = parse_diagram(text);
  const Diagram b = parse_diagram(swapped);
  CHECK(validate(b).ok());
  CHECK(enumerate_generators(a).size() == enumerate_generators(b).size());
  CHECK(is_admissible(a).admissible == is_admissible(b).admissible);
  CHECK(sfh_rank(a) == sfh_rank(b));
}

TEST_CASE("region order does not change the invariants") {
  ojson j = ojson::parse(*corpus_text("lens3"));
  ojson regions = j["regions"];
  std::reverse(regions.begin(), regions.end());
  j["regions"] = regions;
  const Diagram d = parse_diagram(j.dump());
  CHECK(validate(d).ok());
  CHECK(enumerate_generators(d).size() == 3);
  CHECK(sfh_rank(d) == 3);
}

TEST_CASE("toroidal grids with a puncture in every row and column validate") {
  for (const auto& text : {make_grid(1, {{0, 0}}), make_grid(2, {{0, 0}, {1, 1}}),
                           make_grid(3, {{0, 1}, {1, 2}, {2, 0}})}) {
    const Diagram d = parse_diagram(text);
    CHECK(validate(d).ok());
    CHECK(is_nice(d));
  }
}

TEST_CASE("a grid with an unpunctured row is invalid") {
  // row 1 of the 2x2 grid has no suture, so one complement component misses
  // the boundary entirely
  const Diagram d = parse_diagram(make_grid(2, {{0, 0}}));
  CHECK_FALSE(validate(d).ok());
}

TEST_CASE("octagon fixture is valid but not nice") {
  const Diagram d = parse_diagram(kFingerText);
  CHECK(validate(d).ok());
  CHECK_FALSE(is_nice(d));
  CHECK(enumerate_generators(d).size() == 3);
}
