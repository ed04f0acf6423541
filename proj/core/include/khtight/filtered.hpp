#pragma once

// Finite F2 complexes with two filtrations: A (the differential never raises
// A) and I (the differential never lowers I). Cancellation reduction and the
// pages of the spectral sequence of either filtration.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "khtight/complex.hpp"
#include "khtight/gf2.hpp"

namespace khtight {

struct BiGenerator {
  std::string name;
  int A = 0;
  int I = 0;
  bool operator==(const BiGenerator&) const = default;
};

struct BiFilteredComplex {
  std::vector<BiGenerator> generators;
  std::vector<gf2::SparseVec> differential;

  std::size_t size() const { return generators.size(); }
  /// Throws MathError when d^2 != 0, an arrow lowers I or raises A, or a
  /// target is out of range.
  void validate() const;
};

/// Records, one per line ('#' starts a comment):
///   g <name> A=<int> I=<int>
///   d <name> -> <name>[,<name>...]
/// Field keys are case-insensitive and other key=value fields are ignored, so
/// complex dumps (with i= and a=) load with A = a and I = i. Repeated targets
/// of one source add mod 2.
BiFilteredComplex parse_bifiltered(std::string_view text);
std::string format_bifiltered(const BiFilteredComplex& c);

/// A = skein degree, I = homological degree.
BiFilteredComplex from_graded(const GradedComplex& c);

/// Cancels every arrow between generators of equal (A, I) until none is left.
BiFilteredComplex cancel_reduce(const BiFilteredComplex& c);

enum class Filtration { I, A };
std::string to_string(Filtration f);

struct Page {
  int r = 0;
  /// Filtration degree (in I or A units) -> dim E_r at that degree.
  std::map<int, int> dims;
  /// Filtration degree -> rank of d_r leaving that degree.
  std::map<int, int> differential_rank;
  /// Filtration degree -> induced levels of the other filtration, one per
  /// dimension: for I pages the least A over representatives of the largest
  /// A among their terms; for A pages the greatest I over representatives of
  /// the least I among their terms.
  std::map<int, std::vector<int>> other_levels;

  int total() const;
};

struct PageReport {
  Filtration which = Filtration::I;
  std::vector<Page> pages;  // E_0 .. E_{r_max}
  int homology_rank = 0;
  /// Induced A- and I-levels of H(C), one per dimension, sorted.
  std::vector<int> homology_A_levels;
  std::vector<int> homology_I_levels;
};

PageReport pages(const BiFilteredComplex& c, Filtration which, int r_max);

/// Random valid complex: elementary pieces (x -> y pairs and lone cycles)
/// respecting both filtrations, followed by random filtered changes of basis.
BiFilteredComplex random_bifiltered(std::mt19937_64& rng, int max_generators,
                                    int level_range = 3);

}  // namespace khtight
