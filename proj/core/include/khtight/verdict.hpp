#pragma once

// Transverse invariants of a braid closure and the tightness verdict for its
// branched double cover.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "khtight/braid.hpp"
#include "khtight/classical.hpp"
#include "khtight/homology.hpp"
#include "khtight/khovanov.hpp"

namespace khtight {

enum class PsiMethod {
  /// Carry psi through a full cancellation of the reduced complex.
  cancellation,
  /// Solve d y = psi directly.
  direct_solve,
};

struct PsiResult {
  bool nonzero = false;
  Grading grading;  // (i, q, a) of psi in the reduced complex
  std::size_t generators = 0;
  PsiMethod method = PsiMethod::cancellation;
};

PsiResult psi_nonvanishing(const BraidWord& w, PsiMethod method = PsiMethod::cancellation,
                           const BuildLimits& limits = BuildLimits::from_environment());

/// Filtration level of the reduced canonical class in Bar-Natan-Turner
/// homology. Throws MathError unless the closure is a knot.
int s_invariant(const BraidWord& w, const BuildLimits& limits = BuildLimits::from_environment());

/// Filtration levels of the two unreduced canonical classes (s - 1, s + 1).
std::vector<int> unreduced_canonical_levels(const BraidWord& w,
                                            const BuildLimits& limits = BuildLimits::from_environment());

enum class Verdict { tight_certified, psi_zero, inconclusive };
std::string to_string(Verdict v);

struct VerdictReport {
  BraidWord braid;
  int components = 0;
  int crossings = 0;
  int sl = 0;
  std::optional<int> s;
  std::optional<int> sigma;
  std::optional<long long> det;
  std::optional<int> kh_rank;
  HomologyTable kh;
  bool thin = false;
  bool collapse = false;
  bool psi_nonzero = false;
  std::optional<Grading> psi_grading;
  Verdict verdict = Verdict::inconclusive;
  /// Field name -> how the value was obtained or why it is missing.
  std::map<std::string, std::string> notes;
  /// Stage name -> wall time in milliseconds.
  std::map<std::string, double> timing_ms;
  std::size_t generators = 0;
  std::size_t reduced_generators = 0;
};

struct VerdictOptions {
  BuildLimits limits = BuildLimits::from_environment();
  bool compute_s = true;
};

/// Never throws MathError or ResourceError: failures leave fields empty,
/// add a note and yield INCONCLUSIVE (or PSI_ZERO when psi was decided).
VerdictReport tightness_verdict(const BraidWord& w, const VerdictOptions& options = {});

}  // namespace khtight
