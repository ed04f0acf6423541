#pragma once

// Contact (+1)/(-1) surgery diagrams, the d3 invariant of the resulting plane
// field, and surgery diagrams for branched double covers of braid closures.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "khtight/braid.hpp"
#include "khtight/classical.hpp"

namespace khtight {

struct SurgeryComponent {
  int tb = -1;
  int rot = 0;
  int coeff = -1;  // contact surgery coefficient, +1 or -1
  bool operator==(const SurgeryComponent&) const = default;
};

struct SurgeryDiagram {
  std::vector<SurgeryComponent> components;
  /// Linking numbers off the diagonal, topological framing tb + coeff on it.
  IntMatrix linking;

  std::size_t size() const { return components.size(); }
  /// Throws MathError when the matrix is not symmetric, has the wrong size,
  /// or disagrees with tb + coeff on the diagonal.
  void validate() const;
};

struct D3Result {
  mpq_class d3;
  mpq_class c1_sq;
  int chi = 1;
  int sign = 0;
  int m = 0;
  long long h1_order = 1;
};

/// d3 = (c1^2 - 2 chi - 3 sign + 2) / 4 + m with chi = 1 + #components,
/// c1^2 = r^T Q^{-1} r, m = #(+1 components). Throws MathError when Q is
/// singular.
D3Result d3(const SurgeryDiagram& s);

/// |det Q|; 1 for the empty diagram.
long long h1_order(const SurgeryDiagram& s);

/// How lifted chain curves on different pages link. Curves c_a and c_b with
/// |a - b| = 1 at word positions i < j link `adjacent` when a < b
/// (`ascending`) and 0 otherwise; with ascending false the roles swap.
/// Copies of the same curve link `same`.
struct LinkingConvention {
  int same = -1;
  int adjacent = 1;
  bool ascending = true;
};

struct SurgeryOptions {
  /// Add a positive stabilization to even-strand braids.
  bool stabilize_even = true;
  /// Look for a cyclic rotation of the word that begins with the base
  /// monodromy sigma_1 ... sigma_{b-1}; otherwise (or when absent) the
  /// diagram carries its inverse as extra (+1) surgeries.
  bool factor_base = true;
  LinkingConvention linking;
};

/// The braid word after stabilization and base factoring: the letters that
/// become surgery components, in page order.
std::vector<int> surgery_letters(const BraidWord& w, const SurgeryOptions& options = {});

/// One component per letter of surgery_letters: tb = -1, rot = 0, contact
/// coefficient -sign(letter).
SurgeryDiagram braid_to_surgery(const BraidWord& w, const SurgeryOptions& options = {});

std::string to_string(const mpq_class& q);

}  // namespace khtight
