#include "doctest.h"

#include <fstream>
#include <random>
#include <sstream>

#include "corpus.hpp"
#include "khtight/filtered.hpp"
#include "khtight/homology.hpp"
#include "khtight/khovanov.hpp"

using namespace khtight;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

BiFilteredComplex toy() { return parse_bifiltered(read_file(std::string(KHTIGHT_TEST_DATA) + "/toy.bfc")); }

void check_same_from_one(const PageReport& a, const PageReport& b) {
  REQUIRE(a.pages.size() == b.pages.size());
  for (std::size_t r = 1; r < a.pages.size(); ++r) {
    INFO("r=", r);
    CHECK(a.pages[r].dims == b.pages[r].dims);
    CHECK(a.pages[r].differential_rank == b.pages[r].differential_rank);
    CHECK(a.pages[r].other_levels == b.pages[r].other_levels);
  }
  CHECK(a.homology_rank == b.homology_rank);
  CHECK(a.homology_A_levels == b.homology_A_levels);
  CHECK(a.homology_I_levels == b.homology_I_levels);
}

}  // namespace

TEST_CASE("toy complex pages") {
  auto c = toy();
  REQUIRE(c.size() == 3);
  auto rep = pages(c, Filtration::I, 3);
  CHECK(rep.pages[1].total() == 3);
  CHECK(rep.pages[1].differential_rank.at(0) == 1);
  CHECK(rep.pages[2].total() == 1);
  CHECK(rep.pages[2].other_levels.at(2) == std::vector<int>{-1});
  CHECK(rep.homology_rank == 1);
  CHECK(rep.homology_A_levels == std::vector<int>{-2});
}

TEST_CASE("parser validation") {
  CHECK_THROWS_AS(parse_bifiltered("g x A=0 I=0\nd x -> y\n"), MathError);
  CHECK_THROWS_AS(parse_bifiltered("g x A=0 I=0\ng y A=1 I=1\nd x -> y\n"), MathError);
  CHECK_THROWS_AS(parse_bifiltered("g x A=0 I=1\ng y A=0 I=0\nd x -> y\n"), MathError);
  CHECK_THROWS_AS(parse_bifiltered("g x A=0 I=0\ng y A=0 I=1\ng z A=0 I=2\nd x -> y\nd y -> z\n"), MathError);
  auto c = parse_bifiltered("# comment\ng x a=0 i=0 q=5\ng y A=0 I=1\nd x -> y,y\n");
  CHECK(c.differential[0].empty());
}

TEST_CASE("format round trips") {
  auto c = toy();
  CHECK(parse_bifiltered(format_bifiltered(c)).generators == c.generators);
  CHECK(parse_bifiltered(format_bifiltered(c)).differential == c.differential);
}

TEST_CASE("cancellation removes equal-bidegree pairs only") {
  CHECK(cancel_reduce(toy()).size() == 3);
  auto c = parse_bifiltered("g x A=0 I=0\ng y A=0 I=0\ng z A=-1 I=1\nd x -> y,z\n");
  auto r = cancel_reduce(c);
  CHECK(r.size() == 1);
  CHECK(r.generators[0].name == "z");
}

TEST_CASE("cancellation preserves pages from E1 on") {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 200; ++trial) {
    auto c = random_bifiltered(rng, 14);
    REQUIRE_NOTHROW(c.validate());
    auto reduced = cancel_reduce(c);
    REQUIRE_NOTHROW(reduced.validate());
    INFO("trial ", trial);
    for (auto f : {Filtration::I, Filtration::A}) check_same_from_one(pages(c, f, 5), pages(reduced, f, 5));
  }
}

TEST_CASE("pages shrink and converge to homology") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    auto c = random_bifiltered(rng, 12);
    for (auto f : {Filtration::I, Filtration::A}) {
      auto rep = pages(c, f, 12);
      for (std::size_t r = 1; r < rep.pages.size(); ++r) CHECK(rep.pages[r].total() <= rep.pages[r - 1].total());
      CHECK(rep.pages.back().total() == rep.homology_rank);
    }
  }
}

TEST_CASE("imported Khovanov complexes") {
  for (const auto& w : testing::corpus()) {
    if (w.length() > 7) continue;
    auto cube = build_complex(closure_diagram(w), Flavor::khovanov, Reduction::unreduced);
    auto c = from_graded(cube.complex);
    REQUIRE_NOTHROW(c.validate());
    auto rep = pages(c, Filtration::I, 3);
    auto h = homology(cube.complex);
    std::map<int, int> by_i;
    for (const auto& [key, dim] : h.dims) by_i[key.first] += dim;
    std::map<int, int> e2;
    for (const auto& [deg, dim] : rep.pages[2].dims)
      if (dim) e2[deg] = dim;
    CHECK_MESSAGE(e2 == by_i, to_string(w));
    check_same_from_one(rep, pages(cancel_reduce(c), Filtration::I, 3));
  }
}
