#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "khtight/complex.hpp"
#include "khtight/gf2.hpp"

namespace khtight {

/// Homology dimensions by (i, q).
struct HomologyTable {
  std::map<std::pair<int, int>, int> dims;

  int total_rank() const;
  int at(int i, int q) const;
  bool operator==(const HomologyTable&) const = default;
};

/// Homology of the q-graded complex. For bar_natan complexes this is the
/// homology of the associated graded (only q-preserving arrows are kept).
HomologyTable homology(const GradedComplex& c);

/// Generator counts by (i, q); equal to homology once d vanishes.
HomologyTable generator_table(const GradedComplex& c);

struct BoundaryResult {
  bool boundary = false;
  gf2::SparseVec witness;  // d(witness) == v when boundary
};

/// Decides whether the cycle v (a khovanov-flavor chain) is a boundary by
/// solving d y = v inside the (i-1, q) blocks. Throws MathError when v is
/// not a cycle or the complex is not q-graded.
BoundaryResult is_boundary(const GradedComplex& c, const gf2::SparseVec& v);

/// Which arrows the reduction may cancel.
enum class CancelRule {
  /// Any arrow (khovanov flavor: all arrows preserve q).
  any,
  /// Only arrows between generators of equal q: a filtered homotopy
  /// equivalence for bar_natan complexes.
  same_quantum,
  /// Only arrows between generators of equal (i, q); used for complexes
  /// whose i and q are two filtration levels rather than gradings.
  same_bidegree,
};

struct ScanOptions {
  CancelRule rule = CancelRule::any;
  /// Chains carried along through every cancellation (images under the
  /// homotopy equivalence onto the reduced complex).
  std::vector<gf2::SparseVec> tracked;
};

struct ScanResult {
  GradedComplex reduced;
  std::vector<gf2::SparseVec> tracked;
  /// Original id of each generator of `reduced`.
  std::vector<std::uint32_t> survivors;
  std::size_t original_size = 0;
  std::size_t cancellations = 0;
};

/// Gaussian elimination of invertible arrows, sweeping the cube one crossing
/// direction at a time (lowest homological degree first, ties by generator
/// id), then clearing any arrows created along the way. The result is chain
/// homotopy equivalent to the input (filtered-equivalent under same_quantum).
ScanResult scan_reduce(const GradedComplex& c, ScanOptions options = {});

/// A homology class of a bar_natan complex with its filtration level: the
/// largest n such that the class has a representative all of whose terms have
/// q >= n.
struct FilteredClass {
  int i = 0;
  int level = 0;
  bool operator==(const FilteredClass&) const = default;
};

/// Filtration levels of the homology of a bar_natan complex, one entry per
/// dimension, sorted by (i, level). Computed from the jumps in the rank of
/// H(F_q C) -> H(C).
std::vector<FilteredClass> filtered_levels(const GradedComplex& c);

}  // namespace khtight
