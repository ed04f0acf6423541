#pragma once

// Braid words, their closures as planar diagrams, and the classical
// transverse quantities read off a word.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace khtight {

/// Malformed input or a mathematically undefined request (exit code 2 in the CLI).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation refused because it would exceed a configured resource cap
/// (exit code 3 in the CLI).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Word in the braid group on `strands` strands. Letter +k is sigma_k, -k its
/// inverse; the sign of a letter is the sign of the crossing it produces.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }
  bool operator==(const BraidWord&) const = default;
};

/// Parses `[-]?digit+` tokens separated by commas and/or whitespace. When
/// `strands` is absent the strand count is max|letter| + 1 (1 for the empty
/// word only if given explicitly).
BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt);

/// Checks the BraidWord invariants; throws MathError on violation.
void validate(const BraidWord& word);

std::string to_string(const BraidWord& word);

/// Expands a family template: comma-separated tokens where `<letter>*{r}`
/// (or `<letter>*<count>`) repeats the letter, and `{r}` elsewhere is
/// replaced by the parameter value.
std::string expand_template(std::string_view templ, int r);

int writhe(const BraidWord& word);
int positive_crossings(const BraidWord& word);
int negative_crossings(const BraidWord& word);

/// Self-linking number of the transverse closure: writhe - strands.
int self_linking(const BraidWord& word);

BraidWord mirror(const BraidWord& word);

/// A crossing of the closed braid. Edges are listed counterclockwise starting
/// at the incoming bottom-left arc: in_left, in_right, out_right, out_left.
/// Faces are listed as left, right, below, above.
struct Crossing {
  int sign = 1;
  int generator = 1;  // |letter|
  int letter_index = 0;
  std::array<int, 4> edges{};
  std::array<int, 4> faces{};

  int in_left() const { return edges[0]; }
  int in_right() const { return edges[1]; }
  int out_right() const { return edges[2]; }
  int out_left() const { return edges[3]; }
};

/// A region of the closed-braid diagram. Level j sits between braid positions
/// j-1 and j (level 0 is the innermost disk around the axis, level `strands`
/// the outer region); inner levels are cut into pieces by sigma_j crossings.
struct Face {
  int level = 0;
  int piece = 0;
  bool annulus = false;  // a level with no crossings at all
};

struct LinkDiagram {
  int strands = 1;
  std::vector<Crossing> crossings;
  int edge_count = 0;
  /// Braid position each edge runs along.
  std::vector<int> edge_position;
  /// True for the edge at each position that passes through the closure arc
  /// (the bottom of the braid box).
  std::vector<bool> edge_on_closure;
  std::vector<Face> faces;
  int marked_edge = 0;
  int components = 0;
  /// Per-edge link component id.
  std::vector<int> edge_component;

  int crossing_count() const { return static_cast<int>(crossings.size()); }
  /// True when every sigma_j (1 <= j < strands) occurs, i.e. the diagram is a
  /// single planar piece.
  bool connected() const;
  /// Number of connected planar pieces of the diagram.
  int pieces() const;
  /// V - E + F on the sphere, with a crossingless loop counted as one vertex
  /// and one edge. Equals 1 + pieces().
  int euler_characteristic() const;
};

LinkDiagram closure_diagram(const BraidWord& word);

/// The circles of one complete resolution of a diagram. Bit k of `state`
/// selects the 1-smoothing at crossing k. The 0-smoothing of a positive
/// crossing (and the 1-smoothing of a negative one) is the oriented one.
struct Resolution {
  std::uint64_t state = 0;
  int circle_count = 0;
  std::vector<std::uint8_t> circle_of_edge;
  /// Bit c set when circle c winds around the braid axis.
  std::uint32_t axis_linking = 0;
  int marked_circle = 0;

  bool links_axis(int circle) const { return (axis_linking >> circle) & 1u; }
};

/// Traces the circles of `state`. Circles are numbered by their smallest
/// edge id, so the numbering is deterministic.
Resolution resolve(const LinkDiagram& diagram, std::uint64_t state);

/// The state selecting the oriented smoothing at every crossing.
std::uint64_t oriented_state(const LinkDiagram& diagram);

struct OrientedResolution {
  LinkDiagram diagram;
  Resolution resolution;
};

OrientedResolution oriented_resolution(const BraidWord& word);

}  // namespace khtight
