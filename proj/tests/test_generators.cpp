#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "shd/corpus.hpp"
#include "shd/generators.hpp"
#include "shd/gridgen.hpp"
#include "shd/parse.hpp"

using namespace shd;

namespace {

Diagram load(const std::string& name) { return parse_diagram(*corpus_text(name)); }

// Oracle: sum over all permutations, no inclusion-exclusion anywhere.
Int perm_sum(const std::vector<std::vector<long>>& m) {
  const std::size_t k = m.size();
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), std::size_t{0});
  Int total = 0;
  do {
    Int prod = 1;
    for (std::size_t i = 0; i < k; ++i) prod *= Int(m[i][p[i]]);
    total += prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace

TEST_CASE("generator counts across the corpus") {
  const std::map<std::string, std::size_t> expected = {
      {"ball", 1},  {"s3", 1},    {"rp3", 2},   {"lens2", 2},
      {"lens3", 3}, {"lens4", 4}, {"lens5", 5}, {"s1s2-admissible", 2},
      {"s1s2-inadmissible", 0},   {"knot-l51", 5},
  };
  for (const auto& [name, count] : expected) {
    INFO(name);
    const Diagram d = load(name);
    CHECK(enumerate_generators(d).size() == count);
    CHECK(count_generators_permanent(d) == Int(count));
  }
}

TEST_CASE("generator tuples are lexicographic point tuples") {
  const Diagram d = load("lens3");
  const auto gens = enumerate_generators(d);
  REQUIRE(gens.size() == 3);
  CHECK(gens[0].names(d) == std::vector<std::string>{"q1"});
  CHECK(gens[1].names(d) == std::vector<std::string>{"q2"});
  CHECK(gens[2].names(d) == std::vector<std::string>{"q3"});

  // the ball has no curves: one empty generator
  const auto empty = enumerate_generators(load("ball"));
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].points.empty());
}

TEST_CASE("generators use each beta curve once") {
  const Diagram d = parse_diagram(make_grid(3, {{0, 1}, {1, 2}, {2, 0}}));
  const auto gens = enumerate_generators(d);
  CHECK(gens.size() == 6);  // 3 x 3 grid of single intersections: 3! matchings
  for (const Generator& g : gens) {
    std::vector<int> betas = g.permutation;
    std::sort(betas.begin(), betas.end());
    CHECK(betas == std::vector<int>{0, 1, 2});
  }
}

TEST_CASE("ryser permanent equals the permutation sum") {
  std::mt19937 rng(1729);
  std::uniform_int_distribution<int> dim(0, 5), entry(0, 3);
  for (int t = 0; t < 220; ++t) {
    const std::size_t k = static_cast<std::size_t>(dim(rng));
    std::vector<std::vector<long>> m(k, std::vector<long>(k));
    for (auto& row : m)
      for (long& v : row) v = entry(rng);
    INFO("matrix " << t << " of size " << k);
    CHECK(permanent(m) == perm_sum(m));
  }
}

TEST_CASE("permanent rejects oversized matrices") {
  std::vector<std::vector<long>> m(63, std::vector<long>(63, 0));
  CHECK_THROWS_AS(permanent(m), ResourceLimit);
}
