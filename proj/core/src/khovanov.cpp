#include "khtight/khovanov.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <sstream>
#include <string>

namespace khtight {

std::string to_string(Flavor f) { return f == Flavor::khovanov ? "khovanov_f2" : "bar_natan_f2"; }

std::string to_string(Reduction r) { return r == Reduction::reduced ? "reduced" : "unreduced"; }

gf2::SparseVec GradedComplex::apply(const gf2::SparseVec& chain) const {
  gf2::SparseVec all;
  for (auto g : chain) all.insert(all.end(), differential[g].begin(), differential[g].end());
  std::sort(all.begin(), all.end());
  gf2::SparseVec out;
  for (std::size_t k = 0; k < all.size();) {
    std::size_t j = k;
    while (j < all.size() && all[j] == all[k]) ++j;
    if ((j - k) % 2 == 1) out.push_back(all[k]);
    k = j;
  }
  return out;
}

bool GradedComplex::squares_to_zero() const {
  for (std::size_t g = 0; g < size(); ++g)
    if (!apply(differential[g]).empty()) return false;
  return true;
}

bool GradedComplex::raises_homological_degree() const {
  for (std::size_t g = 0; g < size(); ++g)
    for (auto t : differential[g])
      if (gradings[t].i != gradings[g].i + 1) return false;
  return true;
}

bool GradedComplex::respects_quantum_grading() const {
  for (std::size_t g = 0; g < size(); ++g) {
    for (auto t : differential[g]) {
      if (flavor == Flavor::khovanov && gradings[t].q != gradings[g].q) return false;
      if (flavor == Flavor::bar_natan && gradings[t].q < gradings[g].q) return false;
    }
  }
  return true;
}

std::string dump(const GradedComplex& c) {
  std::ostringstream out;
  for (std::size_t g = 0; g < c.size(); ++g) {
    const auto& gr = c.gradings[g];
    out << "g " << g << " i=" << gr.i << " q=" << gr.q << " a=" << gr.a << '\n';
  }
  for (std::size_t g = 0; g < c.size(); ++g) {
    if (c.differential[g].empty()) continue;
    out << "d " << g << " -> ";
    for (std::size_t k = 0; k < c.differential[g].size(); ++k) {
      if (k) out << ',';
      out << c.differential[g][k];
    }
    out << '\n';
  }
  return out.str();
}

BuildLimits BuildLimits::from_environment() {
  BuildLimits l;
  if (const char* v = std::getenv("KHTIGHT_MAX_GENERATORS")) l.max_generators = std::stoull(v);
  if (const char* v = std::getenv("KHTIGHT_MAX_CROSSINGS")) l.max_crossings = std::stoi(v);
  return l;
}

namespace {

void check_crossings(const LinkDiagram& d, const BuildLimits& limits) {
  if (d.crossing_count() > limits.max_crossings)
    throw ResourceError("diagram has " + std::to_string(d.crossing_count()) +
                        " crossings; full cube builds are capped at " +
                        std::to_string(limits.max_crossings));
}

std::uint64_t labels_per_vertex(int circles, Reduction r) {
  return std::uint64_t{1} << (r == Reduction::reduced ? circles - 1 : circles);
}

// Position of a labelling within its vertex block.
std::uint32_t label_index(std::uint32_t labels, int marked, Reduction r) {
  if (r == Reduction::unreduced) return labels;
  std::uint32_t low = (1u << marked) - 1u;
  return (labels & low) | ((labels >> (marked + 1)) << marked);
}

std::uint32_t index_labels(std::uint32_t index, int marked, Reduction r) {
  if (r == Reduction::unreduced) return index;
  std::uint32_t low = (1u << marked) - 1u;
  return (index & low) | ((index >> marked) << (marked + 1));
}

// How circles at a vertex map to circles one step up the cube.
struct Transition {
  std::uint64_t target = 0;
  bool merge = false;
  int from_a = 0, from_b = 0;  // involved circles at the source (equal for a split)
  int to_a = 0, to_b = 0;      // involved circles at the target (equal for a merge)
  std::vector<std::pair<int, int>> carried;  // other circles: source -> target
};

Transition make_transition(const LinkDiagram& d, const CubeVertex& from, const CubeVertex& to,
                           int k) {
  const auto& c = d.crossings[k];
  // Arcs of the 0-smoothing at `from` and of the 1-smoothing at `to`.
  bool zero_vertical = c.sign > 0;
  int zero_a = c.in_left();
  int zero_b = zero_vertical ? c.in_right() : c.out_left();
  int one_a = c.in_left();
  int one_b = zero_vertical ? c.out_left() : c.in_right();

  Transition t;
  t.target = to.state;
  const auto& rf = from.resolution;
  const auto& rt = to.resolution;
  t.from_a = rf.circle_of_edge[zero_a];
  t.from_b = rf.circle_of_edge[zero_b];
  t.to_a = rt.circle_of_edge[one_a];
  t.to_b = rt.circle_of_edge[one_b];
  t.merge = t.from_a != t.from_b;

  std::vector<bool> done(rf.circle_count, false);
  done[t.from_a] = done[t.from_b] = true;
  for (int e = 0; e < d.edge_count; ++e) {
    int x = rf.circle_of_edge[e];
    if (done[x]) continue;
    done[x] = true;
    t.carried.emplace_back(x, rt.circle_of_edge[e]);
  }
  return t;
}

void apply_transition(const Transition& t, std::uint32_t labels, Flavor flavor,
                      std::vector<std::uint32_t>& out) {
  std::uint32_t base = 0;
  for (auto [x, y] : t.carried)
    if ((labels >> x) & 1u) base |= 1u << y;
  bool la = (labels >> t.from_a) & 1u;
  if (t.merge) {
    bool lb = (labels >> t.from_b) & 1u;
    std::uint32_t plus = 1u << t.to_a;
    if (la && lb) {
      out.push_back(base | plus);
    } else if (la != lb) {
      out.push_back(base);
    } else if (flavor == Flavor::bar_natan) {
      out.push_back(base);
    }
  } else {
    std::uint32_t pa = 1u << t.to_a;
    std::uint32_t pb = 1u << t.to_b;
    if (la) {
      out.push_back(base | pa);
      out.push_back(base | pb);
      if (flavor == Flavor::bar_natan) out.push_back(base | pa | pb);
    } else {
      out.push_back(base);
    }
  }
}

}  // namespace

std::vector<CubeVertex> build_cube(const LinkDiagram& diagram, const BuildLimits& limits) {
  check_crossings(diagram, limits);
  const std::uint64_t count = std::uint64_t{1} << diagram.crossing_count();
  std::vector<CubeVertex> vertices(count);
  for (std::uint64_t s = 0; s < count; ++s) {
    vertices[s].state = s;
    vertices[s].weight = std::popcount(s);
    vertices[s].resolution = resolve(diagram, s);
  }
  return vertices;
}

std::uint64_t count_generators(const LinkDiagram& diagram, Reduction reduction,
                               const BuildLimits& limits) {
  check_crossings(diagram, limits);
  std::uint64_t total = 0;
  const std::uint64_t count = std::uint64_t{1} << diagram.crossing_count();
  for (std::uint64_t s = 0; s < count; ++s)
    total += labels_per_vertex(resolve(diagram, s).circle_count, reduction);
  return total;
}

int skein_level(const Resolution& resolution, std::uint32_t labels) {
  int plus = std::popcount(labels & resolution.axis_linking);
  int minus = std::popcount(~labels & resolution.axis_linking);
  return plus - minus;
}

Grading grading_of(const Resolution& resolution, std::uint32_t labels, int weight, int positive,
                   int negative, Reduction reduction) {
  int plus = std::popcount(labels);
  Grading g;
  g.i = weight - negative;
  g.q = 2 * plus - resolution.circle_count + weight + positive - 2 * negative +
        (reduction == Reduction::reduced ? 1 : 0);
  g.a = skein_level(resolution, labels);
  return g;
}

std::optional<std::uint32_t> CubeComplex::generator_id(std::uint64_t state,
                                                       std::uint32_t label_bits) const {
  if (state >= vertices.size()) return std::nullopt;
  const auto& r = vertices[state].resolution;
  if (r.circle_count < 32 && (label_bits >> r.circle_count) != 0) return std::nullopt;
  if (reduction == Reduction::reduced && ((label_bits >> r.marked_circle) & 1u))
    return std::nullopt;
  return vertex_offset[state] + label_index(label_bits, r.marked_circle, reduction);
}

CubeComplex build_complex(const LinkDiagram& diagram, Flavor flavor, Reduction reduction,
                          const BuildLimits& limits) {
  CubeComplex cc;
  cc.flavor = flavor;
  cc.reduction = reduction;
  cc.diagram = diagram;
  for (const auto& c : diagram.crossings) (c.sign > 0 ? cc.positive : cc.negative)++;
  cc.vertices = build_cube(diagram, limits);

  const std::size_t nv = cc.vertices.size();
  cc.vertex_offset.resize(nv + 1);
  std::uint64_t total = 0;
  for (std::size_t s = 0; s < nv; ++s) {
    cc.vertex_offset[s] = static_cast<std::uint32_t>(total);
    total += labels_per_vertex(cc.vertices[s].resolution.circle_count, reduction);
    if (total > limits.max_generators)
      throw ResourceError("complex would exceed the generator budget of " +
                          std::to_string(limits.max_generators));
  }
  cc.vertex_offset[nv] = static_cast<std::uint32_t>(total);

  GradedComplex& gc = cc.complex;
  gc.flavor = flavor;
  gc.gradings.resize(total);
  gc.states.resize(total);
  gc.differential.resize(total);
  cc.labels.resize(total);

  const int n = diagram.crossing_count();
  std::vector<Transition> transitions;
  std::vector<std::uint32_t> outs;
  for (std::size_t s = 0; s < nv; ++s) {
    const auto& v = cc.vertices[s];
    const auto& r = v.resolution;
    transitions.clear();
    for (int k = 0; k < n; ++k) {
      if ((s >> k) & 1u) continue;
      const auto& to = cc.vertices[s | (std::uint64_t{1} << k)];
      transitions.push_back(make_transition(diagram, v, to, k));
    }
    const std::uint32_t block = cc.vertex_offset[s + 1] - cc.vertex_offset[s];
    for (std::uint32_t idx = 0; idx < block; ++idx) {
      std::uint32_t id = cc.vertex_offset[s] + idx;
      std::uint32_t labels = index_labels(idx, r.marked_circle, reduction);
      cc.labels[id] = labels;
      gc.states[id] = s;
      gc.gradings[id] = grading_of(r, labels, v.weight, cc.positive, cc.negative, reduction);
      auto& targets = gc.differential[id];
      for (const auto& t : transitions) {
        outs.clear();
        apply_transition(t, labels, flavor, outs);
        const auto& tr = cc.vertices[t.target].resolution;
        for (auto l : outs)
          targets.push_back(cc.vertex_offset[t.target] + label_index(l, tr.marked_circle, reduction));
      }
      std::sort(targets.begin(), targets.end());
    }
  }
  return cc;
}

LabeledChain psi_chain(const BraidWord& word, Reduction reduction) {
  auto o = oriented_resolution(word);
  LabeledChain c;
  c.terms.push_back({o.resolution.state, 0u});
  int negative = negative_crossings(word);
  c.grading = grading_of(o.resolution, 0u, negative, positive_crossings(word), negative, reduction);
  return c;
}

std::vector<LabeledChain> canonical_generators(const BraidWord& word, Reduction reduction) {
  auto o = oriented_resolution(word);
  const auto& r = o.resolution;
  const int positive = positive_crossings(word);
  const int negative = negative_crossings(word);

  // Circle p of the oriented resolution runs along braid position p; the
  // marked circle is position 0.
  std::vector<int> position_of_circle(r.circle_count, 0);
  for (int e = 0; e < o.diagram.edge_count; ++e)
    position_of_circle[r.circle_of_edge[e]] = o.diagram.edge_position[e];

  std::vector<LabeledChain> out;
  for (int parity : {1, 0}) {
    // Circles at positions of this parity get (v- + v+), the others v-.
    bool marked_gets_sum = position_of_circle[r.marked_circle] % 2 == parity;
    if (reduction == Reduction::reduced && marked_gets_sum) continue;
    std::uint32_t free_mask = 0;
    for (int c = 0; c < r.circle_count; ++c)
      if (position_of_circle[c] % 2 == parity) free_mask |= 1u << c;
    LabeledChain chain;
    // Enumerate all subsets of free_mask.
    std::uint32_t sub = 0;
    do {
      chain.terms.push_back({r.state, sub});
      sub = (sub - free_mask) & free_mask;
    } while (sub != 0);
    std::sort(chain.terms.begin(), chain.terms.end(),
              [](const auto& a, const auto& b) { return a.labels < b.labels; });
    chain.grading = grading_of(r, 0u, negative, positive, negative, reduction);
    out.push_back(std::move(chain));
  }
  return out;
}

gf2::SparseVec locate(const CubeComplex& complex, const LabeledChain& chain) {
  gf2::SparseVec out;
  for (const auto& t : chain.terms) {
    auto id = complex.generator_id(t.state, t.labels);
    if (!id) throw MathError("chain term is not a generator of this complex");
    out.push_back(*id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

gf2::SparseVec lowest_quantum_part(const CubeComplex& complex, const gf2::SparseVec& chain) {
  if (chain.empty()) return {};
  int low = complex.complex.gradings[chain.front()].q;
  for (auto g : chain) low = std::min(low, complex.complex.gradings[g].q);
  gf2::SparseVec out;
  for (auto g : chain)
    if (complex.complex.gradings[g].q == low) out.push_back(g);
  return out;
}

}  // namespace khtight
