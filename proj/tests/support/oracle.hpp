#pragma once

// Brute-force reference computations straight from a braid word. Circles of a
// resolution are found by union-find on the strand segments between letters,
// with no planar diagram, so these share no code with the library.

#include <cstdint>
#include <vector>

#include "khtight/braid.hpp"
#include "khtight/homology.hpp"

namespace khtight::oracle {

/// Circle count of the resolution selecting the 1-smoothing where bits are set.
int circles(const BraidWord& w, std::uint64_t state);

/// Khovanov homology over F2 by dense ranks of the full cube complex.
HomologyTable khovanov(const BraidWord& w, bool reduced);

/// Filtration levels of unreduced Bar-Natan-Turner homology in degree 0,
/// sorted; for a knot this is {s - 1, s + 1}.
std::vector<int> bar_natan_levels(const BraidWord& w);

/// |Kauffman bracket| at a primitive eighth root of unity.
long long determinant(const BraidWord& w);

/// Rank over F2 of the rows given as index sets over `width` columns.
int dense_rank(const std::vector<std::vector<int>>& rows, int width);

}  // namespace khtight::oracle
