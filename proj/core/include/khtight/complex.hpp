#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "khtight/gf2.hpp"

namespace khtight {

/// khovanov: the q-graded Khovanov differential over F2.
/// bar_natan: Turner's F2 deformation, filtered (never decreases q).
enum class Flavor { khovanov, bar_natan };
enum class Reduction { unreduced, reduced };

std::string to_string(Flavor f);
std::string to_string(Reduction r);

/// Homological, quantum and skein degrees of a generator.
struct Grading {
  int i = 0;
  int q = 0;
  int a = 0;
  bool operator==(const Grading&) const = default;
};

/// A finite F2 chain complex on graded generators. differential[g] is the
/// sorted list of generators appearing in d(g).
struct GradedComplex {
  Flavor flavor = Flavor::khovanov;
  std::vector<Grading> gradings;
  /// Resolution state each generator lives over; zero outside cube complexes.
  std::vector<std::uint64_t> states;
  std::vector<gf2::SparseVec> differential;

  std::size_t size() const { return gradings.size(); }
  gf2::SparseVec apply(const gf2::SparseVec& chain) const;
  bool is_cycle(const gf2::SparseVec& chain) const { return apply(chain).empty(); }
  bool squares_to_zero() const;
  /// Every arrow raises i by exactly one.
  bool raises_homological_degree() const;
  /// khovanov: every arrow preserves q. bar_natan: no arrow lowers q.
  bool respects_quantum_grading() const;
};

/// Complex dump, one record per line:
///   g <id> i=<int> q=<int> a=<int>
///   d <from-id> -> <id>[,<id>...]
std::string dump(const GradedComplex& c);

}  // namespace khtight
