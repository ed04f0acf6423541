#include "khtight/homology.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "khtight/braid.hpp"

namespace khtight {

int HomologyTable::total_rank() const {
  int t = 0;
  for (const auto& [k, v] : dims) t += v;
  return t;
}

int HomologyTable::at(int i, int q) const {
  auto it = dims.find({i, q});
  return it == dims.end() ? 0 : it->second;
}

namespace {

using Block = std::pair<int, int>;

// Generators grouped by (i, q), with each generator's index inside its block.
struct Blocks {
  std::map<Block, std::vector<std::uint32_t>> members;
  std::vector<std::uint32_t> local;

  explicit Blocks(const GradedComplex& c) : local(c.size()) {
    for (std::uint32_t g = 0; g < c.size(); ++g) {
      auto& m = members[{c.gradings[g].i, c.gradings[g].q}];
      local[g] = static_cast<std::uint32_t>(m.size());
      m.push_back(g);
    }
  }

  const std::vector<std::uint32_t>* find(Block b) const {
    auto it = members.find(b);
    return it == members.end() ? nullptr : &it->second;
  }
};

// Matrix of the q-preserving part of d from block (i, q) into (i+1, q).
gf2::SparseBitMatrix block_matrix(const GradedComplex& c, const Blocks& blocks, Block from) {
  const auto* src = blocks.find(from);
  const auto* dst = blocks.find({from.first + 1, from.second});
  gf2::SparseBitMatrix m(dst ? static_cast<std::uint32_t>(dst->size()) : 0,
                         src ? static_cast<std::uint32_t>(src->size()) : 0);
  if (!src || !dst) return m;
  for (std::uint32_t k = 0; k < src->size(); ++k) {
    auto g = (*src)[k];
    for (auto t : c.differential[g]) {
      const auto& gt = c.gradings[t];
      if (gt.q == from.second && gt.i == from.first + 1) m.columns[k].push_back(blocks.local[t]);
    }
    std::sort(m.columns[k].begin(), m.columns[k].end());
  }
  return m;
}

}  // namespace

HomologyTable generator_table(const GradedComplex& c) {
  HomologyTable t;
  for (const auto& g : c.gradings) ++t.dims[{g.i, g.q}];
  return t;
}

HomologyTable homology(const GradedComplex& c) {
  Blocks blocks(c);
  std::map<Block, std::size_t> rank_out;
  for (const auto& [b, members] : blocks.members)
    rank_out[b] = gf2::rank_f2(block_matrix(c, blocks, b));
  HomologyTable t;
  for (const auto& [b, members] : blocks.members) {
    std::size_t in = 0;
    if (auto it = rank_out.find({b.first - 1, b.second}); it != rank_out.end()) in = it->second;
    int dim = static_cast<int>(members.size() - rank_out[b] - in);
    if (dim > 0) t.dims[b] = dim;
  }
  return t;
}

BoundaryResult is_boundary(const GradedComplex& c, const gf2::SparseVec& v) {
  if (c.flavor != Flavor::khovanov)
    throw MathError("is_boundary needs a q-graded (khovanov flavor) complex");
  if (!c.is_cycle(v)) throw MathError("is_boundary: chain is not a cycle");
  BoundaryResult result;
  result.boundary = true;
  if (v.empty()) return result;

  Blocks blocks(c);
  std::map<Block, gf2::SparseVec> parts;
  for (auto g : v) parts[{c.gradings[g].i, c.gradings[g].q}].push_back(blocks.local[g]);
  for (auto& [b, target] : parts) {
    Block source{b.first - 1, b.second};
    const auto* src = blocks.find(source);
    if (!src) {
      result.boundary = false;
      result.witness.clear();
      return result;
    }
    std::sort(target.begin(), target.end());
    auto m = block_matrix(c, blocks, source);
    auto y = gf2::solve(m, target);
    if (!y) {
      result.boundary = false;
      result.witness.clear();
      return result;
    }
    for (auto k : *y) result.witness.push_back((*src)[k]);
  }
  std::sort(result.witness.begin(), result.witness.end());
  return result;
}

namespace {

// Gaussian elimination on a complex stored as forward and backward arrow lists.
class Reducer {
 public:
  Reducer(const GradedComplex& c, std::vector<gf2::SparseVec> tracked)
      : gradings_(c.gradings), states_(c.states), out_(c.differential),
        in_(c.size()), alive_(c.size(), 1), tracked_(std::move(tracked)) {
    if (states_.size() != c.size()) states_.assign(c.size(), 0);
    for (std::uint32_t g = 0; g < c.size(); ++g)
      for (auto t : out_[g]) in_[t].push_back(g);
    // in_ lists are sorted because g increases.
  }

  bool alive(std::uint32_t g) const { return alive_[g]; }
  const gf2::SparseVec& out(std::uint32_t g) const { return out_[g]; }
  const Grading& grading(std::uint32_t g) const { return gradings_[g]; }
  std::uint64_t state(std::uint32_t g) const { return states_[g]; }
  std::size_t cancellations() const { return cancellations_; }

  // Cancels the arrow x -> y (x != y).
  void cancel(std::uint32_t x, std::uint32_t y) {
    gf2::SparseVec zs, ws;
    for (auto z : in_[y])
      if (z != x && z != y) zs.push_back(z);
    for (auto w : out_[x])
      if (w != x && w != y) ws.push_back(w);

    for (auto& chain : tracked_) {
      bool has_y = std::binary_search(chain.begin(), chain.end(), y);
      bool has_x = std::binary_search(chain.begin(), chain.end(), x);
      if (has_x) chain.erase(std::lower_bound(chain.begin(), chain.end(), x));
      if (has_y) {
        chain.erase(std::lower_bound(chain.begin(), chain.end(), y));
        gf2::add_into(chain, ws);
      }
    }

    if (!ws.empty())
      for (auto z : zs) gf2::add_into(out_[z], ws);
    if (!zs.empty())
      for (auto w : ws) gf2::add_into(in_[w], zs);

    detach(x);
    detach(y);
    ++cancellations_;
  }

  GradedComplex compact(Flavor flavor, std::vector<gf2::SparseVec>& tracked_out,
                        std::vector<std::uint32_t>& survivors) const {
    std::vector<std::uint32_t> remap(alive_.size(), 0);
    GradedComplex r;
    r.flavor = flavor;
    std::uint32_t next = 0;
    for (std::uint32_t g = 0; g < alive_.size(); ++g) {
      if (!alive_[g]) continue;
      remap[g] = next++;
      survivors.push_back(g);
      r.gradings.push_back(gradings_[g]);
      r.states.push_back(states_[g]);
    }
    r.differential.resize(next);
    for (std::uint32_t g = 0; g < alive_.size(); ++g) {
      if (!alive_[g]) continue;
      auto& d = r.differential[remap[g]];
      for (auto t : out_[g]) d.push_back(remap[t]);
    }
    tracked_out.clear();
    for (const auto& chain : tracked_) {
      gf2::SparseVec m;
      for (auto g : chain) m.push_back(remap[g]);
      tracked_out.push_back(std::move(m));
    }
    return r;
  }

 private:
  static void erase_one(gf2::SparseVec& v, std::uint32_t x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x) v.erase(it);
  }

  void detach(std::uint32_t x) {
    for (auto z : in_[x])
      if (z != x) erase_one(out_[z], x);
    for (auto w : out_[x])
      if (w != x) erase_one(in_[w], x);
    gf2::SparseVec().swap(in_[x]);
    gf2::SparseVec().swap(out_[x]);
    alive_[x] = 0;
  }

  std::vector<Grading> gradings_;
  std::vector<std::uint64_t> states_;
  std::vector<gf2::SparseVec> out_;
  std::vector<gf2::SparseVec> in_;
  std::vector<char> alive_;
  std::vector<gf2::SparseVec> tracked_;
  std::size_t cancellations_ = 0;
};

}  // namespace

ScanResult scan_reduce(const GradedComplex& c, ScanOptions options) {
  for (auto& t : options.tracked) std::sort(t.begin(), t.end());
  Reducer r(c, std::move(options.tracked));
  auto allowed = [&](std::uint32_t x, std::uint32_t y) {
    if (x == y) return false;
    const auto& gx = r.grading(x);
    const auto& gy = r.grading(y);
    switch (options.rule) {
      case CancelRule::any: return true;
      case CancelRule::same_quantum: return gx.q == gy.q;
      case CancelRule::same_bidegree: return gx.q == gy.q && gx.i == gy.i;
    }
    return false;
  };

  std::vector<std::uint32_t> order(c.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return c.gradings[a].i < c.gradings[b].i;
  });

  std::uint64_t used_bits = 0;
  for (auto s : c.states) used_bits |= s;
  const int directions = used_bits ? 64 - std::countl_zero(used_bits) : 0;

  for (int k = 0; k < directions; ++k) {
    const std::uint64_t bit = std::uint64_t{1} << k;
    for (auto x : order) {
      if (!r.alive(x)) continue;
      for (auto y : r.out(x)) {
        if ((r.state(x) ^ r.state(y)) == bit && allowed(x, y)) {
          r.cancel(x, y);
          break;
        }
      }
    }
  }

  bool progress = true;
  while (progress) {
    progress = false;
    for (auto x : order) {
      if (!r.alive(x)) continue;
      for (auto y : r.out(x)) {
        if (allowed(x, y)) {
          r.cancel(x, y);
          progress = true;
          break;
        }
      }
    }
  }

  ScanResult result;
  result.original_size = c.size();
  result.cancellations = r.cancellations();
  result.reduced = r.compact(c.flavor, result.tracked, result.survivors);
  return result;
}

std::vector<FilteredClass> filtered_levels(const GradedComplex& c) {
  auto reduced = scan_reduce(c, {CancelRule::same_quantum, {}}).reduced;
  const std::size_t n = reduced.size();

  std::set<int> degrees;
  for (const auto& g : reduced.gradings) degrees.insert(g.i);

  std::vector<FilteredClass> out;
  for (int i : degrees) {
    std::vector<gf2::BitVec> domain, images, boundary;
    for (std::uint32_t g = 0; g < n; ++g) {
      const auto& gr = reduced.gradings[g];
      if (gr.i != i && gr.i != i - 1) continue;
      gf2::BitVec img(n);
      for (auto t : reduced.differential[g]) img.set(t);
      if (gr.i == i) {
        gf2::BitVec e(n);
        e.set(g);
        domain.push_back(std::move(e));
        images.push_back(std::move(img));
      } else {
        boundary.push_back(std::move(img));
      }
    }
    auto cycles = gf2::kernel(n, domain, images);
    auto bounds = gf2::Subspace::span(n, boundary);
    const auto base = bounds.dim();

    std::set<int, std::greater<>> levels;
    for (const auto& g : reduced.gradings)
      if (g.i == i) levels.insert(g.q);
    std::size_t previous = 0;
    for (int q0 : levels) {
      gf2::BitVec mask(n);
      for (std::uint32_t g = 0; g < n; ++g)
        if (reduced.gradings[g].q >= q0) mask.set(g);
      auto image = cycles.restrict_to(mask).plus(bounds).dim() - base;
      for (std::size_t k = previous; k < image; ++k) out.push_back({i, q0});
      previous = image;
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.i != b.i ? a.i < b.i : a.level < b.level;
  });
  return out;
}

}  // namespace khtight
