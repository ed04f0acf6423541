#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "corpus.hpp"
#include "khtight/classical.hpp"
#include "khtight/surgery.hpp"

using namespace khtight;

namespace {

SurgeryDiagram permuted(const SurgeryDiagram& s, const std::vector<int>& p) {
  SurgeryDiagram out;
  std::size_t n = s.size();
  out.linking.assign(n, std::vector<long long>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    out.components.push_back(s.components[p[a]]);
    for (std::size_t b = 0; b < n; ++b) out.linking[a][b] = s.linking[p[a]][p[b]];
  }
  return out;
}

SurgeryDiagram reversed(SurgeryDiagram s, std::size_t k) {
  s.components[k].rot = -s.components[k].rot;
  for (std::size_t j = 0; j < s.size(); ++j)
    if (j != k) {
      s.linking[k][j] = -s.linking[k][j];
      s.linking[j][k] = -s.linking[j][k];
    }
  return s;
}

}  // namespace

TEST_CASE("single unknot") {
  SurgeryDiagram s{{{-1, 0, -1}}, {{-2}}};
  auto r = d3(s);
  CHECK(r.d3 == mpq_class(1, 4));
  CHECK(r.c1_sq == 0);
  CHECK(r.chi == 2);
  CHECK(r.sign == -1);
  CHECK(r.h1_order == 2);
}

TEST_CASE("rotation enters through c1 squared") {
  SurgeryDiagram s{{{-2, 1, -1}}, {{-3}}};
  auto r = d3(s);
  CHECK(r.c1_sq == mpq_class(-1, 3));
  CHECK(r.d3 == (mpq_class(-1, 3) - 4 + 3 + 2) / 4);
}

TEST_CASE("validation and singular forms") {
  SurgeryDiagram bad_diag{{{-1, 0, -1}}, {{-1}}};
  CHECK_THROWS_AS(bad_diag.validate(), MathError);
  SurgeryDiagram asym{{{-1, 0, -1}, {-1, 0, -1}}, {{-2, 1}, {0, -2}}};
  CHECK_THROWS_AS(asym.validate(), MathError);
  SurgeryDiagram singular{{{1, 0, -1}}, {{0}}};
  CHECK_THROWS_AS(d3(singular), MathError);
}

TEST_CASE("trefoil surgery diagram") {
  auto s = braid_to_surgery(parse_braid("1,1,1"));
  CHECK(s.size() == 2);
  for (const auto& c : s.components) CHECK(c.coeff == -1);
  auto r = d3(s);
  CHECK(r.m == 0);
  CHECK(r.h1_order == 3);
}

TEST_CASE("d3 of family members") {
  auto k5 = d3(braid_to_surgery(testing::member(testing::family_e125(), 5)));
  CHECK(k5.d3 == mpq_class(-1, 2));
  CHECK(k5.c1_sq == 0);
  CHECK(d3(braid_to_surgery(testing::member(testing::family_e141(), 4))).d3 == 0);
  auto k6 = d3(braid_to_surgery(testing::member(testing::family_e141(), 6)));
  CHECK(k6.d3 == mpq_class(-1, 2));
  CHECK(k6.h1_order == 27);
}

TEST_CASE("first homology order equals the determinant") {
  for (auto f : {testing::family_e125(), testing::family_e141(), testing::family_e130()})
    for (int r = f.r_min; r <= f.r_max; ++r) {
      auto w = testing::member(f, r);
      CHECK_MESSAGE(h1_order(braid_to_surgery(w)) == determinant(closure_diagram(w)), f.name, " r=", r);
    }
}

TEST_CASE("factoring the base monodromy does not change d3") {
  SurgeryOptions plain;
  plain.factor_base = false;
  for (auto f : {testing::family_e125(), testing::family_e141(), testing::family_e130()})
    for (int r = f.r_min; r <= f.r_max; ++r) {
      auto w = testing::member(f, r);
      auto a = d3(braid_to_surgery(w));
      auto b = d3(braid_to_surgery(w, plain));
      CHECK_MESSAGE(a.d3 == b.d3, f.name, " r=", r);
      CHECK(a.h1_order == b.h1_order);
    }
}

TEST_CASE("d3 is invariant under relabelling and reorientation") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + rng() % 4;
    SurgeryDiagram s;
    s.linking.assign(n, std::vector<long long>(n, 0));
    for (std::size_t a = 0; a < n; ++a) {
      int tb = -1 - static_cast<int>(rng() % 3);
      int rot = (static_cast<int>(rng() % 3) - 1) * ((tb + 1) % 2 == 0 ? 1 : 0);
      int coeff = rng() % 4 == 0 ? 1 : -1;
      s.components.push_back({tb, rot, coeff});
      s.linking[a][a] = tb + coeff;
      for (std::size_t b = 0; b < a; ++b) s.linking[a][b] = s.linking[b][a] = static_cast<int>(rng() % 3) - 1;
    }
    D3Result base;
    try {
      base = d3(s);
    } catch (const MathError&) {
      continue;
    }
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    CHECK(d3(permuted(s, p)).d3 == base.d3);
    CHECK(d3(reversed(s, rng() % n)).d3 == base.d3);
  }
}
