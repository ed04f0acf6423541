#include "doctest.h"

#include <algorithm>
#include <random>

#include "khtight/lattice.hpp"

using namespace khtight;

namespace {

Embedding scramble(const Embedding& e, std::mt19937_64& rng) {
  std::vector<int> perm(e.n);
  for (int k = 0; k < e.n; ++k) perm[k] = k;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> sign(e.n);
  for (auto& s : sign) s = rng() % 2 ? 1 : -1;
  Embedding out{e.n, {}};
  for (const auto& v : e.vectors) {
    std::vector<int> w(e.n);
    for (int k = 0; k < e.n; ++k) w[perm[k]] = sign[k] * v[k];
    out.vectors.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("plumbing lattices are negative definite") {
  CHECK(plumbing_e125().rank() == 7);
  CHECK(plumbing_e141().rank() == 8);
  CHECK(plumbing_e125().negative_definite());
  CHECK(plumbing_e141().negative_definite());
  GramLattice bad{{{1}}, {"v1"}};
  CHECK_THROWS_AS(bad.validate(), MathError);
}

TEST_CASE("unique embedding classes") {
  auto a = enumerate_embeddings(plumbing_e125(), 8);
  REQUIRE(a.size() == 1);
  CHECK(a[0].gram() == plumbing_e125().gram);
  auto b = enumerate_embeddings(plumbing_e141(), 10);
  REQUIRE(b.size() == 1);
  CHECK(b[0].gram() == plumbing_e141().gram);
}

TEST_CASE("complements") {
  auto a = orthogonal_complement(enumerate_embeddings(plumbing_e125(), 8)[0]);
  CHECK(a.diagonal);
  CHECK(a.diagonal_entries == std::vector<long long>{-11});
  auto b = orthogonal_complement(enumerate_embeddings(plumbing_e141(), 10)[0]);
  CHECK(b.diagonal);
  CHECK(b.diagonal_entries == std::vector<long long>{-9, -3});
}

TEST_CASE("larger diagonal lattices only add unit summands") {
  for (int n = 9; n <= 10; ++n) {
    auto e = enumerate_embeddings(plumbing_e125(), n);
    REQUIRE(e.size() == 1);
    auto c = orthogonal_complement(e[0]);
    std::vector<long long> expected{-11};
    expected.resize(1 + (n - 8), -1);
    CHECK(c.diagonal_entries == expected);
  }
}

TEST_CASE("complement basis is orthogonal to the image") {
  for (const auto& g : {plumbing_e125(), plumbing_e141()}) {
    int n = static_cast<int>(g.rank()) + 2;
    for (const auto& e : enumerate_embeddings(g, n)) {
      auto c = orthogonal_complement(e);
      CHECK(c.basis.size() + g.rank() == static_cast<std::size_t>(n));
      for (const auto& u : c.basis)
        for (const auto& v : e.vectors) {
          long long dot = 0;
          for (int k = 0; k < n; ++k) dot += static_cast<long long>(u[k]) * v[k];
          CHECK(dot == 0);
        }
    }
  }
}

TEST_CASE("canonical form is invariant under signed permutations") {
  std::mt19937_64 rng(17);
  for (const auto& g : {plumbing_e125(), plumbing_e141()}) {
    int n = g.rank() == 7 ? 8 : 10;
    auto all = enumerate_embeddings(g, n);
    REQUIRE(all.size() == 1);
    auto e = all[0];
    for (int trial = 0; trial < 50; ++trial) {
      auto s = scramble(e, rng);
      CHECK(s.gram() == e.gram());
      CHECK(s.canonical() == e);
    }
  }
}

TEST_CASE("partial assignments") {
  auto g = plumbing_e125();
  using V = std::vector<int>;
  std::vector<std::optional<V>> chosen(g.rank());
  chosen[2] = V{1, 1, 0, 0, 0, 0, 0, 0};
  chosen[1] = V{-1, 0, 1, 0, 0, 0, 0, 0};
  chosen[0] = V{-1, 0, -1, 0, 1, 0, 0, 0};
  CHECK(complete_embedding(g, 8, chosen).size() == 1);
  std::vector<std::optional<V>> other(g.rank());
  other[2] = V{1, 1, 0, 0, 0, 0, 0, 0};
  other[1] = V{-1, 0, 1, 0, 0, 0, 0, 0};
  other[0] = V{0, -1, 0, 1, 1, 0, 0, 0};
  other[3] = V{-1, 0, -1, 0, 0, 0, 0, 0};
  CHECK(complete_embedding(g, 8, other).empty());
}

TEST_CASE("parity obstruction") {
  auto a = orthogonal_complement(enumerate_embeddings(plumbing_e125(), 8)[0]);
  auto pa = parity_obstruction(a.lattice, 11);
  CHECK(pa.obstructed);
  CHECK(pa.forced_b2 == 0);
  auto b = orthogonal_complement(enumerate_embeddings(plumbing_e141(), 10)[0]);
  CHECK(parity_obstruction(b.lattice, 27).obstructed);
  CHECK_FALSE(parity_obstruction(b.lattice, 2).obstructed);
  GramLattice off{{{-2, 1}, {1, -2}}, {"a", "b"}};
  CHECK_THROWS_AS(parity_obstruction(off, 3), MathError);
}
