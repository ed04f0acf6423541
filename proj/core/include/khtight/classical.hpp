#pragma once

// Determinant and signature from the Goeritz form of a closed-braid diagram,
// thinness and rank-determinant tests, and a quasi-alternating certificate
// search by deletion/contraction on the Tait graph.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "khtight/braid.hpp"
#include "khtight/homology.hpp"

namespace khtight {

using IntMatrix = std::vector<std::vector<long long>>;

/// Checkerboard class used as the white (vertex) regions.
/// even_levels: levels 0, 2, 4, ...; odd_levels: levels 1, 3, ...
enum class Coloring { even_levels, odd_levels };

std::string to_string(Coloring c);

/// One crossing as an edge between the white regions it touches.
/// eta is the Goeritz incidence sign; type_two marks crossings whose white
/// regions lie to its left and right (strands oriented across the edge).
struct TaitEdge {
  int u = 0;
  int v = 0;
  int eta = 1;
  bool type_two = false;
  int letter_index = 0;
};

struct TaitGraph {
  int vertices = 0;
  std::vector<TaitEdge> edges;
};

TaitGraph tait_graph(const LinkDiagram& d, Coloring coloring = Coloring::even_levels);

struct GoeritzData {
  IntMatrix matrix;
  /// Sum of eta over type-II crossings.
  int correction = 0;
  Coloring coloring = Coloring::even_levels;
};

/// Goeritz matrix (weighted Laplacian of the Tait graph with one vertex
/// removed). Throws MathError on a disconnected diagram.
GoeritzData goeritz(const LinkDiagram& d, Coloring coloring = Coloring::even_levels);

mpz_class determinant_of(const IntMatrix& m);
/// Signature of a symmetric integer matrix (exact, by congruence).
int matrix_signature(const IntMatrix& m);

/// |det| of the Goeritz matrix.
long long determinant(const LinkDiagram& d);
/// sign(G) - correction; the right-handed trefoil has signature +2.
int signature(const LinkDiagram& d);

enum class Thinness { thin, not_thin };
enum class Collapse { collapse_certified, unknown };

std::string to_string(Thinness t);
std::string to_string(Collapse c);

/// Thin iff every nonzero entry lies on the diagonal q - 2i = sigma.
Thinness thinness(const HomologyTable& h, int sigma);

/// collapse_certified iff total rank equals det. Throws MathError on det 0.
Collapse rank_det_check(const HomologyTable& h, long long det);

enum class Smoothing { vertical, horizontal };
std::string to_string(Smoothing s);

struct QANode {
  /// The braid word with vertically smoothed letters removed and
  /// horizontally smoothed letters written as h<letter>.
  std::string link;
  long long det = 0;
  /// Letter index of the resolved crossing in the root word (internal nodes).
  std::optional<int> witness;
  std::optional<Smoothing> smoothing;  // how this node arose from its parent
  /// Base-case description for leaves.
  std::string leaf;
  std::vector<QANode> children;

  bool is_leaf() const { return children.empty(); }
  int depth() const;
  /// Leaves along the first-child chain, i.e. the repeatedly deleted branch.
  const QANode& first_leaf() const;
};

struct QACertificate {
  BraidWord word;
  QANode root;
};

enum class WitnessStrategy {
  /// The last remaining sigma_1^{-1} letter, falling back to a search over
  /// all crossings when that choice does not certify.
  last_negative_sigma1,
  /// Search over all crossings in word order.
  search,
};

/// Words of non-split alternating leaves accepted without further recursion.
const std::vector<std::string>& qa_leaf_whitelist();

/// Builds a certificate or throws MathError describing the first failure.
QACertificate qa_verify(const BraidWord& w,
                        WitnessStrategy strategy = WitnessStrategy::last_negative_sigma1);

/// Checks determinant additivity and positivity at every internal node.
bool certificate_consistent(const QANode& node);

}  // namespace khtight
