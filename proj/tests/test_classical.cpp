#include "doctest.h"

#include "corpus.hpp"
#include "khtight/classical.hpp"
#include "khtight/homology.hpp"
#include "khtight/khovanov.hpp"
#include "oracle.hpp"

using namespace khtight;

namespace {

long long det_of(const BraidWord& w, Coloring c = Coloring::even_levels) {
  auto g = goeritz(closure_diagram(w), c);
  return mpz_class(abs(determinant_of(g.matrix))).get_si();
}

}  // namespace

TEST_CASE("small matrices") {
  CHECK(determinant_of({{2, 1}, {1, 2}}) == 3);
  CHECK(determinant_of({{0, 1}, {1, 0}}) == -1);
  CHECK(determinant_of({}) == 1);
  CHECK(matrix_signature({{2, 1}, {1, 2}}) == 2);
  CHECK(matrix_signature({{0, 1}, {1, 0}}) == 0);
  CHECK(matrix_signature({{-3}}) == -1);
  CHECK(matrix_signature({{1, 0, 0}, {0, 0, 0}, {0, 0, -2}}) == 0);
}

TEST_CASE("determinant families") {
  for (auto [f, base, step] : {std::tuple{testing::family_e125(), 6, 1}, std::tuple{testing::family_e141(), 9, 3},
                               std::tuple{testing::family_e130(), 14, 1}})
    for (int r = f.r_min; r <= f.r_max; ++r) {
      auto w = testing::member(f, r);
      CHECK_MESSAGE(determinant(closure_diagram(w)) == base + step * r, f.name, " r=", r);
    }
}

TEST_CASE("determinant agrees with the bracket oracle and both colorings") {
  for (const auto& w : testing::corpus()) {
    auto d = closure_diagram(w);
    if (!d.connected()) continue;
    auto even = det_of(w, Coloring::even_levels);
    CHECK_MESSAGE(even == det_of(w, Coloring::odd_levels), to_string(w));
    CHECK_MESSAGE(even == oracle::determinant(w), to_string(w));
  }
}

TEST_CASE("disconnected diagrams are rejected") {
  CHECK_THROWS_AS(goeritz(closure_diagram(parse_braid("1,3"))), MathError);
}

TEST_CASE("signatures") {
  CHECK(signature(closure_diagram(parse_braid("1,1,1"))) == 2);
  CHECK(signature(closure_diagram(parse_braid("-1,-1,-1"))) == -2);
  CHECK(signature(closure_diagram(parse_braid("1,-2,1,-2"))) == 0);
  for (int r = 1; r <= 7; r += 2) CHECK(signature(closure_diagram(testing::member(testing::family_e125(), r))) == 3 - r);
  for (int r = 0; r <= 6; ++r) CHECK(signature(closure_diagram(testing::member(testing::family_e141(), r))) == 4 - r);
}

TEST_CASE("signature is odd under mirroring and independent of coloring") {
  for (const auto& w : testing::corpus()) {
    auto d = closure_diagram(w);
    if (!d.connected()) continue;
    auto s = signature(d);
    CHECK_MESSAGE(signature(closure_diagram(mirror(w))) == -s, to_string(w));
    auto odd = goeritz(d, Coloring::odd_levels);
    CHECK_MESSAGE(matrix_signature(odd.matrix) - odd.correction == s, to_string(w));
  }
}

TEST_CASE("thinness and rank-determinant") {
  auto w = testing::member(testing::family_e125(), 5);
  auto d = closure_diagram(w);
  auto h = homology(build_complex(d, Flavor::khovanov, Reduction::reduced).complex);
  CHECK(h.total_rank() == 11);
  CHECK(thinness(h, -2) == Thinness::thin);
  CHECK(thinness(h, 0) == Thinness::not_thin);
  CHECK(rank_det_check(h, 11) == Collapse::collapse_certified);
  CHECK(rank_det_check(h, 13) == Collapse::unknown);
  CHECK_THROWS_AS(rank_det_check(h, 0), MathError);
}

TEST_CASE("thin corpus knots have rank equal to determinant") {
  for (const auto& w : testing::knot_corpus()) {
    auto d = closure_diagram(w);
    if (!d.connected()) continue;
    auto h = homology(build_complex(d, Flavor::khovanov, Reduction::reduced).complex);
    if (thinness(h, signature(d)) == Thinness::thin) CHECK_MESSAGE(h.total_rank() == determinant(d), to_string(w));
  }
}

TEST_CASE("quasi-alternating certificates") {
  auto k5 = qa_verify(testing::member(testing::family_e125(), 5));
  CHECK(k5.root.det == 11);
  CHECK(k5.root.depth() == 5);
  CHECK(k5.root.first_leaf().det == 6);
  CHECK(certificate_consistent(k5.root));

  auto k4 = qa_verify(testing::member(testing::family_e141(), 4));
  CHECK(k4.root.first_leaf().det == 9);
  CHECK(certificate_consistent(k4.root));

  auto e130 = qa_verify(testing::member(testing::family_e130(), 3));
  CHECK(e130.root.first_leaf().det == 14);
  CHECK(certificate_consistent(e130.root));

  CHECK_THROWS_AS(qa_verify(testing::member(testing::family_nonexample(), 3)), MathError);
}

TEST_CASE("certificates along the families") {
  for (auto f : {testing::family_e125(), testing::family_e141(), testing::family_e130()})
    for (int r = f.r_min; r <= f.r_max; ++r) {
      auto cert = qa_verify(testing::member(f, r));
      CHECK_MESSAGE(certificate_consistent(cert.root), f.name, " r=", r);
      CHECK(cert.root.det == determinant(closure_diagram(testing::member(f, r))));
    }
}
