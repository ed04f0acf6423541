#include "doctest.h"

#include "corpus.hpp"
#include "khtight/homology.hpp"
#include "khtight/khovanov.hpp"
#include "khtight/verdict.hpp"
#include "oracle.hpp"

using namespace khtight;

TEST_CASE("scan reduction preserves homology") {
  for (const auto& w : testing::corpus()) {
    auto d = closure_diagram(w);
    for (auto red : {Reduction::reduced, Reduction::unreduced}) {
      auto c = build_complex(d, Flavor::khovanov, red);
      auto full = homology(c.complex);
      auto scan = scan_reduce(c.complex);
      INFO(to_string(w), " ", to_string(red));
      CHECK(scan.reduced.squares_to_zero());
      CHECK(homology(scan.reduced) == full);
      CHECK(scan.original_size == c.size());
      CHECK(scan.reduced.size() + 2 * scan.cancellations == c.size());
    }
  }
}

TEST_CASE("a full scan of a Khovanov complex leaves no arrows") {
  auto w = testing::member(testing::family_e125(), 5);
  auto c = build_complex(closure_diagram(w), Flavor::khovanov, Reduction::reduced);
  auto scan = scan_reduce(c.complex);
  CHECK(generator_table(scan.reduced) == homology(c.complex));
  CHECK(scan.reduced.size() == 11);
}

TEST_CASE("twelve-crossing reduction is small") {
  auto w = testing::member(testing::family_e141(), 6);
  REQUIRE(w.length() == 12);
  auto c = build_complex(closure_diagram(w), Flavor::khovanov, Reduction::unreduced);
  auto scan = scan_reduce(c.complex);
  CHECK(scan.reduced.size() * 20 < c.size());
  CHECK(homology(scan.reduced) == homology(c.complex));
}

TEST_CASE("tracked cycles keep their class") {
  for (const auto& w : testing::corpus()) {
    auto c = build_complex(closure_diagram(w), Flavor::khovanov, Reduction::reduced);
    auto psi = locate(c, psi_chain(w, Reduction::reduced));
    ScanOptions opts;
    opts.tracked = {psi};
    auto scan = scan_reduce(c.complex, opts);
    bool zero_after = scan.tracked[0].empty();
    bool boundary = is_boundary(c.complex, psi).boundary;
    CHECK_MESSAGE(zero_after == boundary, to_string(w));
  }
}

TEST_CASE("boundary witnesses solve d y = v") {
  auto w = testing::member(testing::family_nonexample(), 3);
  auto c = build_complex(closure_diagram(w), Flavor::khovanov, Reduction::reduced);
  auto psi = locate(c, psi_chain(w, Reduction::reduced));
  auto r = is_boundary(c.complex, psi);
  REQUIRE(r.boundary);
  CHECK(c.complex.apply(r.witness) == psi);
  CHECK_THROWS_AS(is_boundary(c.complex, gf2::SparseVec{0}), MathError);
}

TEST_CASE("Bar-Natan filtration levels match the dense oracle") {
  for (const auto& w : testing::knot_corpus()) {
    if (w.length() > 8) continue;
    auto c = build_complex(closure_diagram(w), Flavor::bar_natan, Reduction::unreduced);
    std::vector<int> degree_zero;
    for (const auto& cls : filtered_levels(c.complex))
      if (cls.i == 0) degree_zero.push_back(cls.level);
    auto expected = oracle::bar_natan_levels(w);
    CHECK_MESSAGE(degree_zero == expected, to_string(w));
    REQUIRE(expected.size() == 2);
    CHECK(expected[1] - expected[0] == 2);
  }
}

TEST_CASE("unreduced canonical classes are two apart") {
  for (const auto& w : testing::knot_corpus()) {
    auto levels = unreduced_canonical_levels(w);
    REQUIRE(levels.size() == 2);
    CHECK_MESSAGE(levels[1] - levels[0] == 2, to_string(w));
    CHECK(levels[0] + 1 == s_invariant(w));
  }
}

TEST_CASE("filtered scan keeps the filtration levels") {
  for (const auto& w : testing::knot_corpus()) {
    if (w.length() > 10) continue;
    auto c = build_complex(closure_diagram(w), Flavor::bar_natan, Reduction::reduced);
    ScanOptions opts;
    opts.rule = CancelRule::same_quantum;
    auto scan = scan_reduce(c.complex, opts);
    CHECK(scan.reduced.respects_quantum_grading());
    CHECK_MESSAGE(filtered_levels(scan.reduced) == filtered_levels(c.complex), to_string(w));
  }
}
