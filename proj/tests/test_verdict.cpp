#include "doctest.h"

#include "corpus.hpp"
#include "khtight/classical.hpp"
#include "khtight/verdict.hpp"

using namespace khtight;

TEST_CASE("psi nonvanishing on the tight examples") {
  for (auto w : {testing::member(testing::family_e125(), 5), testing::member(testing::family_e141(), 4),
                 testing::member(testing::family_e130(), 3)}) {
    auto r = psi_nonvanishing(w);
    CHECK_MESSAGE(r.nonzero, to_string(w));
    CHECK(r.grading.q == self_linking(w) + 1);
  }
}

TEST_CASE("psi vanishes on the non-quasi-alternating family") {
  for (int r = 3; r <= 5; ++r) {
    auto w = testing::member(testing::family_nonexample(), r);
    CHECK_FALSE(psi_nonvanishing(w).nonzero);
    CHECK_FALSE(psi_nonvanishing(w, PsiMethod::direct_solve).nonzero);
  }
}

TEST_CASE("both psi methods agree on the corpus") {
  for (const auto& w : testing::corpus()) {
    auto a = psi_nonvanishing(w, PsiMethod::cancellation);
    auto b = psi_nonvanishing(w, PsiMethod::direct_solve);
    CHECK_MESSAGE(a.nonzero == b.nonzero, to_string(w));
    CHECK(a.grading == b.grading);
  }
}

TEST_CASE("s invariants") {
  CHECK(s_invariant(parse_braid("1,1,1")) == 2);
  CHECK(s_invariant(parse_braid("-1,-1,-1")) == -2);
  CHECK(s_invariant(parse_braid("1,-2,1,-2")) == 0);
  CHECK(s_invariant(parse_braid("1,1,1,1,1")) == 4);
  for (int r : {5, 7}) CHECK(s_invariant(testing::member(testing::family_e125(), r)) == 3 - r);
  for (int r : {4, 6}) CHECK(s_invariant(testing::member(testing::family_e141(), r)) == 4 - r);
  CHECK_THROWS_AS(s_invariant(testing::member(testing::family_e125(), 4)), MathError);
}

TEST_CASE("self-linking bound holds on the corpus") {
  for (const auto& w : testing::knot_corpus()) CHECK_MESSAGE(self_linking(w) <= s_invariant(w) - 1, to_string(w));
}

TEST_CASE("sharp bound forces psi nonzero") {
  for (const auto& w : testing::knot_corpus())
    if (self_linking(w) == s_invariant(w) - 1) CHECK_MESSAGE(psi_nonvanishing(w).nonzero, to_string(w));
}

TEST_CASE("thin knots: psi nonzero iff the bound is sharp") {
  for (const auto& w : testing::knot_corpus()) {
    auto r = tightness_verdict(w);
    if (!r.thin || !r.s) continue;
    CHECK_MESSAGE(r.psi_nonzero == (r.sl == *r.s - 1), to_string(w));
  }
}

TEST_CASE("verdicts") {
  auto k5 = tightness_verdict(testing::member(testing::family_e125(), 5));
  CHECK(k5.verdict == Verdict::tight_certified);
  CHECK(k5.sl == -3);
  CHECK(k5.sigma == -2);
  CHECK(k5.det == 11);
  CHECK(k5.kh_rank == 11);
  CHECK(k5.thin);
  CHECK(k5.collapse);
  CHECK(k5.s == -2);

  auto non = tightness_verdict(testing::member(testing::family_nonexample(), 4));
  CHECK(non.verdict == Verdict::psi_zero);

  auto link = tightness_verdict(testing::member(testing::family_e125(), 4));
  CHECK_FALSE(link.s.has_value());
  CHECK(link.notes.count("s") == 1);
}

TEST_CASE("resource failures become notes") {
  VerdictOptions opts;
  opts.limits.max_generators = 16;
  auto r = tightness_verdict(testing::member(testing::family_e125(), 5), opts);
  CHECK(r.verdict == Verdict::inconclusive);
  CHECK(r.det == 11);
  CHECK(r.notes.count("psi_nonzero") == 1);
}

TEST_CASE("verdict strings") {
  CHECK(to_string(Verdict::tight_certified) == "TIGHT_CERTIFIED");
  CHECK(to_string(Verdict::psi_zero) == "PSI_ZERO");
  CHECK(to_string(Verdict::inconclusive) == "INCONCLUSIVE");
}
