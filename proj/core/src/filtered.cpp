#include "khtight/filtered.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <unordered_map>

#include "khtight/braid.hpp"
#include "khtight/homology.hpp"

namespace khtight {

std::string to_string(Filtration f) { return f == Filtration::I ? "I" : "A"; }

int Page::total() const {
  int t = 0;
  for (const auto& [p, d] : dims) t += d;
  return t;
}

void BiFilteredComplex::validate() const {
  if (differential.size() != generators.size())
    throw MathError("bifiltered: differential size mismatch");
  const auto n = static_cast<std::uint32_t>(size());
  for (std::uint32_t g = 0; g < n; ++g) {
    for (auto t : differential[g]) {
      if (t >= n) throw MathError("bifiltered: arrow target out of range");
      if (generators[t].I < generators[g].I)
        throw MathError("bifiltered: arrow " + generators[g].name + " -> " + generators[t].name +
                        " lowers I");
      if (generators[t].A > generators[g].A)
        throw MathError("bifiltered: arrow " + generators[g].name + " -> " + generators[t].name +
                        " raises A");
    }
  }
  for (std::uint32_t g = 0; g < n; ++g) {
    gf2::SparseVec dd;
    for (auto t : differential[g]) gf2::add_into(dd, differential[t]);
    if (!dd.empty()) throw MathError("bifiltered: d^2 != 0 at " + generators[g].name);
  }
}

namespace {

std::vector<std::string> split_tokens(std::string_view s, char extra) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == extra) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

int parse_int(std::string_view s, int line) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw MathError("bifiltered: line " + std::to_string(line) + ": bad integer '" +
                    std::string(s) + "'");
  return v;
}

}  // namespace

BiFilteredComplex parse_bifiltered(std::string_view text) {
  BiFilteredComplex c;
  std::unordered_map<std::string, std::uint32_t> index;
  std::vector<std::pair<std::string, std::vector<std::string>>> arrows;
  std::vector<int> arrow_lines;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    auto tokens = split_tokens(raw, '\0');
    if (tokens.empty()) continue;
    if (tokens[0] == "g") {
      if (tokens.size() < 2) throw MathError("bifiltered: line " + std::to_string(line) + ": missing name");
      BiGenerator g;
      g.name = tokens[1];
      bool has_a = false, has_i = false;
      for (std::size_t k = 2; k < tokens.size(); ++k) {
        auto eq = tokens[k].find('=');
        if (eq == std::string::npos)
          throw MathError("bifiltered: line " + std::to_string(line) + ": expected key=value");
        std::string key = tokens[k].substr(0, eq);
        std::string_view value(tokens[k].data() + eq + 1, tokens[k].size() - eq - 1);
        if (key == "A" || key == "a") {
          g.A = parse_int(value, line);
          has_a = true;
        } else if (key == "I" || key == "i") {
          g.I = parse_int(value, line);
          has_i = true;
        }
      }
      if (!has_a || !has_i)
        throw MathError("bifiltered: line " + std::to_string(line) + ": generator needs A and I");
      if (!index.emplace(g.name, static_cast<std::uint32_t>(c.generators.size())).second)
        throw MathError("bifiltered: duplicate generator " + g.name);
      c.generators.push_back(std::move(g));
    } else if (tokens[0] == "d") {
      auto arrow = raw.find("->");
      if (tokens.size() < 3 || tokens[2].rfind("->", 0) != 0 || arrow == std::string::npos)
        throw MathError("bifiltered: line " + std::to_string(line) + ": expected d <name> -> ...");
      arrows.push_back({tokens[1], split_tokens(std::string_view(raw).substr(arrow + 2), ',')});
      arrow_lines.push_back(line);
    } else {
      throw MathError("bifiltered: line " + std::to_string(line) + ": unknown record '" +
                      tokens[0] + "'");
    }
  }

  c.differential.assign(c.generators.size(), {});
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    auto lookup = [&](const std::string& name) {
      auto it = index.find(name);
      if (it == index.end())
        throw MathError("bifiltered: line " + std::to_string(arrow_lines[k]) +
                        ": unknown generator " + name);
      return it->second;
    };
    auto from = lookup(arrows[k].first);
    for (const auto& t : arrows[k].second) {
      auto id = lookup(t);
      auto& d = c.differential[from];
      gf2::add_into(d, gf2::SparseVec{id});
    }
  }
  c.validate();
  return c;
}

std::string format_bifiltered(const BiFilteredComplex& c) {
  std::string out;
  for (const auto& g : c.generators)
    out += "g " + g.name + " A=" + std::to_string(g.A) + " I=" + std::to_string(g.I) + "\n";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c.differential[k].empty()) continue;
    out += "d " + c.generators[k].name + " ->";
    for (std::size_t j = 0; j < c.differential[k].size(); ++j)
      out += (j ? "," : " ") + c.generators[c.differential[k][j]].name;
    out += "\n";
  }
  return out;
}

BiFilteredComplex from_graded(const GradedComplex& c) {
  BiFilteredComplex b;
  for (std::size_t g = 0; g < c.size(); ++g)
    b.generators.push_back({"g" + std::to_string(g), c.gradings[g].a, c.gradings[g].i});
  b.differential = c.differential;
  return b;
}

BiFilteredComplex cancel_reduce(const BiFilteredComplex& c) {
  GradedComplex g;
  for (const auto& x : c.generators) g.gradings.push_back({x.I, x.A, x.A});
  g.states.assign(c.size(), 0);
  g.differential = c.differential;
  auto scan = scan_reduce(g, {CancelRule::same_bidegree, {}});
  BiFilteredComplex out;
  for (auto id : scan.survivors) out.generators.push_back(c.generators[id]);
  out.differential = std::move(scan.reduced.differential);
  return out;
}

namespace {

using gf2::BitVec;
using gf2::Subspace;

// Filtration degree f with d never lowering f: f = I, or f = -A.
struct Levels {
  std::vector<int> f;
  int lo = 0, hi = 0;
};

class PageEngine {
 public:
  PageEngine(const BiFilteredComplex& c, Filtration which) : c_(c), n_(c.size()) {
    for (const auto& g : c.generators) lv_.f.push_back(which == Filtration::I ? g.I : -g.A);
    if (n_) {
      lv_.lo = *std::min_element(lv_.f.begin(), lv_.f.end());
      lv_.hi = *std::max_element(lv_.f.begin(), lv_.f.end());
    }
    for (std::size_t g = 0; g < n_; ++g) {
      BitVec img(n_);
      for (auto t : c.differential[g]) img.set(t);
      images_.push_back(std::move(img));
    }
  }

  BitVec mask_at_least(int p) const {
    BitVec m(n_);
    for (std::size_t g = 0; g < n_; ++g)
      if (lv_.f[g] >= p) m.set(g);
    return m;
  }

  // Z_r^p = { x in F_p : dx in F_{p+r} }.
  Subspace Z(int r, int p) const {
    BitVec outside = mask_at_least(p + r);
    std::vector<BitVec> dom, img;
    for (std::size_t g = 0; g < n_; ++g) {
      if (lv_.f[g] < p) continue;
      BitVec e(n_);
      e.set(g);
      dom.push_back(std::move(e));
      BitVec i = images_[g];
      BitVec keep = outside;
      keep ^= all_;
      i &= keep;
      img.push_back(std::move(i));
    }
    return gf2::kernel(n_, dom, img);
  }

  // B_r^p = F_p intersected with d(F_{p-r}).
  Subspace B(int r, int p) const {
    std::vector<BitVec> v;
    for (std::size_t g = 0; g < n_; ++g)
      if (lv_.f[g] >= p - r) v.push_back(images_[g]);
    return Subspace::span(n_, v).restrict_to(mask_at_least(p));
  }

  void finish_setup() {
    all_ = BitVec(n_);
    for (std::size_t g = 0; g < n_; ++g) all_.set(g);
  }

  const Levels& levels() const { return lv_; }
  std::size_t n() const { return n_; }

  // Levels of the other filtration induced on Z / D.
  std::vector<int> induced(const Subspace& Zs, const Subspace& D, Filtration other) const {
    std::set<int> values;
    for (const auto& g : c_.generators) values.insert(other == Filtration::A ? g.A : g.I);
    std::vector<int> ordered(values.begin(), values.end());
    // A: grow the allowed set upward (terms with A <= a); I: downward.
    if (other == Filtration::I) std::reverse(ordered.begin(), ordered.end());
    std::vector<int> out;
    std::size_t previous = 0;
    const auto base = D.dim();
    for (int v : ordered) {
      BitVec m(n_);
      for (std::size_t g = 0; g < n_; ++g) {
        int x = other == Filtration::A ? c_.generators[g].A : c_.generators[g].I;
        if (other == Filtration::A ? x <= v : x >= v) m.set(g);
      }
      auto dim = Zs.restrict_to(m).plus(D).dim() - base;
      for (std::size_t k = previous; k < dim; ++k) out.push_back(v);
      previous = dim;
    }
    return out;
  }

 private:
  const BiFilteredComplex& c_;
  std::size_t n_;
  Levels lv_;
  std::vector<BitVec> images_;
  BitVec all_;
};

}  // namespace

PageReport pages(const BiFilteredComplex& c, Filtration which, int r_max) {
  c.validate();
  PageReport report;
  report.which = which;
  PageEngine e(c, which);
  e.finish_setup();
  const auto& lv = e.levels();
  const Filtration other = which == Filtration::I ? Filtration::A : Filtration::I;
  auto native = [&](int p) { return which == Filtration::I ? p : -p; };

  for (int r = 0; r <= r_max; ++r) {
    Page page;
    page.r = r;
    if (e.n() == 0) {
      report.pages.push_back(page);
      continue;
    }
    for (int p = lv.lo; p <= lv.hi; ++p) {
      auto Zr = e.Z(r, p);
      auto D = e.Z(r - 1, p + 1).plus(e.B(r - 1, p));
      int dim = static_cast<int>(Zr.dim() - D.dim());
      if (dim == 0) continue;
      page.dims[native(p)] = dim;
      auto kernel = e.Z(r + 1, p).plus(D);
      int rank = static_cast<int>(Zr.dim() - kernel.dim());
      if (rank) page.differential_rank[native(p)] = rank;
      page.other_levels[native(p)] = e.induced(Zr, D, other);
    }
    report.pages.push_back(std::move(page));
  }

  if (e.n()) {
    const int big = lv.hi - lv.lo + 2;
    auto cycles = e.Z(big, lv.lo);
    auto bounds = e.B(big, lv.lo);
    report.homology_rank = static_cast<int>(cycles.dim() - bounds.dim());
    report.homology_A_levels = e.induced(cycles, bounds, Filtration::A);
    report.homology_I_levels = e.induced(cycles, bounds, Filtration::I);
    std::sort(report.homology_A_levels.begin(), report.homology_A_levels.end());
    std::sort(report.homology_I_levels.begin(), report.homology_I_levels.end());
  }
  return report;
}

BiFilteredComplex random_bifiltered(std::mt19937_64& rng, int max_generators, int level_range) {
  std::uniform_int_distribution<int> level(-level_range, level_range);
  std::uniform_int_distribution<int> step(0, 2);
  std::uniform_int_distribution<int> coin(0, 2);
  const int target = std::uniform_int_distribution<int>(1, std::max(1, max_generators))(rng);

  std::vector<BiGenerator> gens;
  std::vector<std::vector<char>> d;  // d[source][target]
  std::vector<std::pair<int, int>> pairs;
  while (static_cast<int>(gens.size()) < target) {
    int A = level(rng), I = level(rng);
    if (coin(rng) > 0 && static_cast<int>(gens.size()) + 2 <= target) {
      // x -> y with A(y) <= A(x) and I(y) >= I(x).
      gens.push_back({"", A, I});
      gens.push_back({"", A - step(rng), I + step(rng)});
      pairs.push_back({static_cast<int>(gens.size()) - 2, static_cast<int>(gens.size()) - 1});
    } else {
      gens.push_back({"", A, I});
    }
  }
  const int n = static_cast<int>(gens.size());
  d.assign(n, std::vector<char>(n, 0));
  for (auto [x, y] : pairs) d[x][y] = 1;

  // b_j <- b_j + b_k whenever b_k sits at least as deep in both filtrations.
  std::uniform_int_distribution<int> pick(0, n - 1);
  const int moves = 4 * n;
  for (int m = 0; m < moves; ++m) {
    int j = pick(rng), k = pick(rng);
    if (j == k || gens[k].A > gens[j].A || gens[k].I < gens[j].I) continue;
    for (int t = 0; t < n; ++t) d[j][t] ^= d[k][t];
    for (int s = 0; s < n; ++s) d[s][k] ^= d[s][j];
  }

  BiFilteredComplex c;
  std::vector<int> order(n);
  for (int g = 0; g < n; ++g) order[g] = g;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> position(n);
  for (int g = 0; g < n; ++g) position[order[g]] = g;
  for (int g = 0; g < n; ++g) {
    auto gen = gens[order[g]];
    gen.name = "x" + std::to_string(g);
    c.generators.push_back(gen);
  }
  c.differential.assign(n, {});
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (d[s][t]) c.differential[position[s]].push_back(static_cast<std::uint32_t>(position[t]));
  for (auto& v : c.differential) std::sort(v.begin(), v.end());
  c.validate();
  return c;
}

}  // namespace khtight
