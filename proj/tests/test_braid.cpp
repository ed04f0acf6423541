#include "doctest.h"

#include "corpus.hpp"
#include "khtight/braid.hpp"
#include "oracle.hpp"

using namespace khtight;

TEST_CASE("parse infers the strand count") {
  auto w = parse_braid("-1,-1,-1,-1,-1,2,1,1,1,2");
  CHECK(w.strands == 3);
  CHECK(w.length() == 10);
  CHECK(parse_braid("1 -2  3").strands == 4);
  CHECK(parse_braid("", 1).length() == 0);
}

TEST_CASE("parse rejects malformed words") {
  CHECK_THROWS_AS(parse_braid("0,1"), MathError);
  CHECK_THROWS_AS(parse_braid(""), MathError);
  CHECK_THROWS_AS(parse_braid("1,3", 3), MathError);
  CHECK_THROWS_AS(parse_braid("1,x"), MathError);
}

TEST_CASE("to_string round trips") {
  auto w = parse_braid("-1,2,1,1,-3");
  CHECK(parse_braid(to_string(w), w.strands) == w);
}

TEST_CASE("family templates expand") {
  CHECK(expand_template("-1*{r},2,1,1,1,2", 3) == "-1,-1,-1,2,1,1,1,2");
  CHECK(expand_template("-1*{r},2,1,1,1,2", 0) == "2,1,1,1,2");
  CHECK(expand_template("1*2, {r}", 4) == "1,1,4");
}

TEST_CASE("writhe and self-linking") {
  CHECK(writhe(testing::member(testing::family_e125(), 5)) == 0);
  CHECK(writhe(parse_braid("", 1)) == 0);
  CHECK(writhe(parse_braid("1,1,1")) == 3);
  for (auto f : {testing::family_e125(), testing::family_e141(), testing::family_e130()})
    for (int r = f.r_min; r <= f.r_max; ++r) {
      auto w = testing::member(f, r);
      CHECK(self_linking(w) == writhe(w) - w.strands);
    }
}

TEST_CASE("mirror") {
  CHECK(mirror(parse_braid("1,1,1")) == parse_braid("-1,-1,-1"));
  auto k5 = testing::member(testing::family_e125(), 5);
  CHECK(mirror(mirror(k5)) == k5);
  auto k4 = testing::member(testing::family_e141(), 4);
  CHECK(writhe(mirror(k4)) == -writhe(k4));
}

TEST_CASE("closure diagrams") {
  auto trefoil = closure_diagram(parse_braid("1,1,1"));
  CHECK(trefoil.crossing_count() == 3);
  CHECK(trefoil.components == 1);
  CHECK(closure_diagram(testing::member(testing::family_e130(), 3)).crossing_count() == 11);
  auto split = closure_diagram(parse_braid("", 2));
  CHECK(split.components == 2);
  CHECK(split.crossing_count() == 0);
}

TEST_CASE("every edge meets two crossing slots and Euler's formula holds") {
  for (const auto& w : testing::corpus()) {
    auto d = closure_diagram(w);
    std::vector<int> ends(d.edge_count, 0);
    for (const auto& c : d.crossings)
      for (int e : c.edges) ++ends[e];
    bool loops_ok = true;
    for (int e = 0; e < d.edge_count; ++e) loops_ok &= ends[e] == 2 || ends[e] == 0;
    CHECK_MESSAGE(loops_ok, to_string(w));
    CHECK_MESSAGE(d.euler_characteristic() == 1 + d.pieces(), to_string(w));
  }
}

TEST_CASE("oriented resolutions are the braid strands") {
  auto r = oriented_resolution(parse_braid("1,1,1"));
  CHECK(r.resolution.circle_count == 2);
  auto k5 = oriented_resolution(testing::member(testing::family_e125(), 5));
  CHECK(k5.resolution.circle_count == 3);
  CHECK(oriented_resolution(parse_braid("", 3)).resolution.circle_count == 3);
  for (const auto& w : testing::corpus()) {
    auto o = oriented_resolution(w);
    CHECK(o.resolution.circle_count == w.strands);
    for (int c = 0; c < o.resolution.circle_count; ++c) CHECK(o.resolution.links_axis(c));
  }
}

TEST_CASE("resolution circle counts agree with the segment oracle") {
  for (const auto& w : testing::corpus()) {
    if (w.length() > 9) continue;
    auto d = closure_diagram(w);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << w.length()); ++s)
      REQUIRE_MESSAGE(resolve(d, s).circle_count == oracle::circles(w, s), to_string(w), " state ", s);
  }
}

TEST_CASE("trefoil cube circle counts") {
  auto w = parse_braid("1,1,1");
  std::vector<int> expected{2, 1, 1, 1, 2, 2, 2, 3};
  auto d = closure_diagram(w);
  std::vector<int> by_weight;
  for (int weight = 0; weight <= 3; ++weight)
    for (std::uint64_t s = 0; s < 8; ++s)
      if (__builtin_popcountll(s) == weight) by_weight.push_back(resolve(d, s).circle_count);
  CHECK(by_weight == expected);
}
