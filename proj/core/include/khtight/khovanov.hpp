#pragma once

// The cube of resolutions of a closed braid and the reduced/unreduced
// Khovanov and Bar-Natan-Turner complexes over F2.
//
// Conventions (n+ / n- positive / negative crossings, |s| the weight of a state):
//   i = |s| - n-
//   q = #v+ - #v- + |s| + n+ - 2 n-      (+1 in the reduced complex)
//   a = #(axis circles labelled v+) - #(axis circles labelled v-)
// The reduced complex is the subcomplex where the marked circle carries v-.
// With these conventions the all-v- labelling of the oriented resolution sits
// at i = 0, q = sl (sl + 1 reduced), and is the unique generator of minimal a.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "khtight/braid.hpp"
#include "khtight/complex.hpp"

namespace khtight {

struct BuildLimits {
  int max_crossings = 20;
  std::uint64_t max_generators = std::uint64_t{1} << 27;

  /// Defaults, overridden by KHTIGHT_MAX_GENERATORS / KHTIGHT_MAX_CROSSINGS.
  static BuildLimits from_environment();
};

struct CubeVertex {
  std::uint64_t state = 0;
  int weight = 0;
  Resolution resolution;
};

/// All 2^n vertices, indexed by state.
std::vector<CubeVertex> build_cube(const LinkDiagram& diagram, const BuildLimits& limits = {});

struct CubeComplex {
  Flavor flavor = Flavor::khovanov;
  Reduction reduction = Reduction::unreduced;
  LinkDiagram diagram;
  int positive = 0;
  int negative = 0;
  std::vector<CubeVertex> vertices;
  std::vector<std::uint32_t> vertex_offset;
  /// Per generator: label bits over the circles of its vertex (1 = v+).
  std::vector<std::uint32_t> labels;
  GradedComplex complex;

  std::size_t size() const { return complex.size(); }
  std::optional<std::uint32_t> generator_id(std::uint64_t state, std::uint32_t label_bits) const;
  const CubeVertex& vertex_of(std::uint32_t id) const {
    return vertices[complex.states[id]];
  }
};

/// Number of generators build_complex would create, without building.
std::uint64_t count_generators(const LinkDiagram& diagram, Reduction reduction,
                               const BuildLimits& limits = {});

CubeComplex build_complex(const LinkDiagram& diagram, Flavor flavor, Reduction reduction,
                          const BuildLimits& limits = {});

/// A chain named by (state, labels) pairs, independent of any built complex.
struct LabeledGenerator {
  std::uint64_t state = 0;
  std::uint32_t labels = 0;
  bool operator==(const LabeledGenerator&) const = default;
};

struct LabeledChain {
  std::vector<LabeledGenerator> terms;
  /// Grading of the lowest-q term.
  Grading grading;
};

/// The all-v- labelling of the oriented resolution.
LabeledChain psi_chain(const BraidWord& word, Reduction reduction);

/// The canonical Bar-Natan-Turner cycles: circles of the oriented resolution
/// labelled alternately by v- and (v- + v+), nested from the axis outward.
/// Unreduced: both alternation patterns. Reduced: the single pattern that
/// puts v- on the marked circle.
std::vector<LabeledChain> canonical_generators(const BraidWord& word, Reduction reduction);

/// Generator ids of `chain` in `complex`; throws MathError when a term is not
/// a generator (e.g. a marked-v+ term in the reduced complex).
gf2::SparseVec locate(const CubeComplex& complex, const LabeledChain& chain);

/// Terms of `chain` of minimal quantum degree.
gf2::SparseVec lowest_quantum_part(const CubeComplex& complex, const gf2::SparseVec& chain);

/// Skein degree of a labelling at a vertex.
int skein_level(const Resolution& resolution, std::uint32_t labels);

Grading grading_of(const Resolution& resolution, std::uint32_t labels, int weight, int positive,
                   int negative, Reduction reduction);

}  // namespace khtight
