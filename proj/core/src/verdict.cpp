#include "khtight/verdict.hpp"

#include <chrono>

namespace khtight {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::tight_certified: return "TIGHT_CERTIFIED";
    case Verdict::psi_zero: return "PSI_ZERO";
    case Verdict::inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

PsiResult psi_nonvanishing(const BraidWord& w, PsiMethod method, const BuildLimits& limits) {
  auto d = closure_diagram(w);
  auto c = build_complex(d, Flavor::khovanov, Reduction::reduced, limits);
  auto psi = locate(c, psi_chain(w, Reduction::reduced));
  PsiResult r;
  r.method = method;
  r.generators = c.size();
  r.grading = c.complex.gradings[psi.front()];
  if (method == PsiMethod::direct_solve) {
    r.nonzero = !is_boundary(c.complex, psi).boundary;
  } else {
    auto scan = scan_reduce(c.complex, {CancelRule::any, {psi}});
    r.nonzero = !scan.tracked.front().empty();
  }
  return r;
}

namespace {

void require_knot(const LinkDiagram& d) {
  if (d.components != 1)
    throw MathError("s is defined for knots; closure has " + std::to_string(d.components) +
                    " components");
}

}  // namespace

int s_invariant(const BraidWord& w, const BuildLimits& limits) {
  auto d = closure_diagram(w);
  require_knot(d);
  auto c = build_complex(d, Flavor::bar_natan, Reduction::reduced, limits);
  auto canonical = locate(c, canonical_generators(w, Reduction::reduced).front());
  if (!c.complex.is_cycle(canonical)) throw MathError("canonical generator is not a cycle");
  auto levels = filtered_levels(c.complex);
  if (levels.size() != 1 || levels.front().i != 0)
    throw MathError("reduced Bar-Natan homology of a knot should have rank one");
  return levels.front().level;
}

std::vector<int> unreduced_canonical_levels(const BraidWord& w, const BuildLimits& limits) {
  auto d = closure_diagram(w);
  require_knot(d);
  auto c = build_complex(d, Flavor::bar_natan, Reduction::unreduced, limits);
  std::vector<int> out;
  for (const auto& f : filtered_levels(c.complex)) out.push_back(f.level);
  return out;
}

VerdictReport tightness_verdict(const BraidWord& w, const VerdictOptions& options) {
  using clock = std::chrono::steady_clock;
  VerdictReport r;
  r.braid = w;
  r.sl = self_linking(w);
  r.crossings = w.length();
  auto elapsed = [](clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
  };
  auto stage = [&](const std::string& name, const std::string& field, auto&& body) {
    auto t0 = clock::now();
    try {
      body();
    } catch (const MathError& e) {
      r.notes[field] = std::string("not computed: ") + e.what();
    } catch (const ResourceError& e) {
      r.notes[field] = std::string("resource cap: ") + e.what();
    }
    r.timing_ms[name] = elapsed(t0);
  };

  LinkDiagram d;
  stage("diagram", "braid", [&] {
    d = closure_diagram(w);
    r.components = d.components;
  });
  r.notes["sl"] = "writhe minus strand count";

  stage("classical", "det", [&] {
    r.det = determinant(d);
    r.sigma = signature(d);
    r.notes["det"] = "absolute determinant of the Goeritz matrix";
    r.notes["sigma"] = "Goeritz signature with the type-II correction";
  });

  bool psi_decided = false;
  stage("khovanov", "psi_nonzero", [&] {
    auto c = build_complex(d, Flavor::khovanov, Reduction::reduced, options.limits);
    r.generators = c.size();
    auto psi = locate(c, psi_chain(w, Reduction::reduced));
    r.psi_grading = c.complex.gradings[psi.front()];
    auto scan = scan_reduce(c.complex, {CancelRule::any, {psi}});
    r.reduced_generators = scan.reduced.size();
    r.kh = generator_table(scan.reduced);
    r.kh_rank = r.kh.total_rank();
    r.psi_nonzero = !scan.tracked.front().empty();
    psi_decided = true;
    r.notes["psi_nonzero"] = "psi carried through cancellation of the reduced complex";
    r.notes["kh_rank"] = "reduced F2 Khovanov homology";
  });

  if (r.kh_rank && r.sigma) {
    r.thin = thinness(r.kh, *r.sigma) == Thinness::thin;
    if (r.det && *r.det != 0) r.collapse = rank_det_check(r.kh, *r.det) == Collapse::collapse_certified;
    r.notes["collapse"] = r.collapse ? "reduced rank equals det" : "reduced rank differs from det";
  }

  if (options.compute_s && r.components == 1) {
    stage("s", "s", [&] {
      r.s = s_invariant(w, options.limits);
      r.notes["s"] = "filtration level of the reduced canonical class";
    });
  } else if (r.components > 1) {
    r.notes["s"] = "closure is a link; psi decided by direct computation only";
  }

  if (psi_decided && !r.psi_nonzero) {
    r.verdict = Verdict::psi_zero;
    r.notes["verdict"] = "psi vanishes; this says nothing about tightness either way";
  } else if (psi_decided && r.collapse) {
    r.verdict = Verdict::tight_certified;
    r.notes["verdict"] = "psi nonzero and rank equals det";
  } else {
    r.verdict = Verdict::inconclusive;
    r.notes["verdict"] = psi_decided ? "psi nonzero but collapse not certified"
                                     : "psi could not be decided";
  }
  return r;
}

}  // namespace khtight
