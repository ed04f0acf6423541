#include "khtight/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

namespace khtight {

bool GramLattice::negative_definite() const {
  // Leading principal minors of -gram are positive.
  for (std::size_t k = 1; k <= gram.size(); ++k) {
    IntMatrix minor(k, std::vector<long long>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = -gram[i][j];
    if (determinant_of(minor) <= 0) return false;
  }
  return true;
}

void GramLattice::validate() const {
  const auto n = gram.size();
  if (!labels.empty() && labels.size() != n) throw MathError("lattice: label count mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram[i].size() != n) throw MathError("lattice: gram matrix is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (gram[i][j] != gram[j][i]) throw MathError("lattice: gram matrix is not symmetric");
  }
  if (!negative_definite()) throw MathError("lattice: gram matrix is not negative definite");
}

namespace {

GramLattice star_plumbing(std::vector<long long> weights, int chain_end) {
  // Star at v3 with neighbours v1, v2, v4; chain v4 - v5 - ... - v_{chain_end}.
  const auto n = weights.size();
  GramLattice g;
  g.gram.assign(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    g.gram[i][i] = weights[i];
    g.labels.push_back("v" + std::to_string(i + 1));
  }
  auto edge = [&](int a, int b) { g.gram[a - 1][b - 1] = g.gram[b - 1][a - 1] = 1; };
  edge(3, 1);
  edge(3, 2);
  edge(3, 4);
  for (int v = 4; v < chain_end; ++v) edge(v, v + 1);
  return g;
}

}  // namespace

GramLattice plumbing_e125() { return star_plumbing({-3, -2, -2, -2, -2, -2, -2}, 7); }
GramLattice plumbing_e141() { return star_plumbing({-3, -3, -2, -2, -2, -2, -2, -2}, 8); }

IntMatrix Embedding::gram() const {
  const auto v = vectors.size();
  IntMatrix g(v, std::vector<long long>(v, 0));
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = 0; b < v; ++b)
      for (int k = 0; k < n; ++k) g[a][b] -= static_cast<long long>(vectors[a][k]) * vectors[b][k];
  return g;
}

Embedding Embedding::canonical() const {
  const auto v = vectors.size();
  std::vector<std::vector<int>> rows(n, std::vector<int>(v, 0));
  for (int k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < v; ++a) rows[k][a] = vectors[a][k];
    auto first = std::find_if(rows[k].begin(), rows[k].end(), [](int x) { return x != 0; });
    if (first != rows[k].end() && *first > 0)
      for (int& x : rows[k]) x = -x;
  }
  // Nonzero coordinates first, in lexicographic order.
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    bool za = std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
    bool zb = std::all_of(b.begin(), b.end(), [](int x) { return x == 0; });
    if (za != zb) return zb;
    return a < b;
  });
  Embedding out;
  out.n = n;
  out.vectors.assign(v, std::vector<int>(n, 0));
  for (int k = 0; k < n; ++k)
    for (std::size_t a = 0; a < v; ++a) out.vectors[a][k] = rows[k][a];
  return out;
}

namespace {

class Search {
 public:
  Search(const GramLattice& g, int n, std::vector<std::optional<std::vector<int>>> partial)
      : g_(g), n_(n), assigned_(std::move(partial)) {
    const auto v = g.rank();
    assigned_.resize(v);
    std::vector<bool> placed(v, false);
    for (std::size_t a = 0; a < v; ++a) {
      if (!assigned_[a]) continue;
      if (static_cast<int>(assigned_[a]->size()) != n_)
        throw MathError("lattice: partial vector has the wrong length");
      placed[a] = true;
      for (int k = 0; k < n_; ++k)
        if ((*assigned_[a])[k] != 0) used_ = std::max(used_, k + 1);
    }
    for (std::size_t a = 0; a < v; ++a)
      for (std::size_t b = 0; b < v; ++b)
        if (assigned_[a] && assigned_[b] && product(*assigned_[a], *assigned_[b]) != g.gram[a][b])
          consistent_ = false;
    // Unassigned vertices, each next one having the most placed neighbours.
    for (std::size_t step = 0; step < v; ++step) {
      int best = -1, best_score = -1;
      for (std::size_t a = 0; a < v; ++a) {
        if (placed[a]) continue;
        int score = 0;
        for (std::size_t b = 0; b < v; ++b)
          if (placed[b] && g.gram[a][b] != 0) ++score;
        if (score > best_score) {
          best = static_cast<int>(a);
          best_score = score;
        }
      }
      if (best < 0) break;
      placed[best] = true;
      order_.push_back(best);
    }
  }

  std::vector<Embedding> run() {
    if (consistent_) extend(0, used_);
    return {found_.begin(), found_.end()};
  }

 private:
  long long product(const std::vector<int>& x, const std::vector<int>& y) const {
    long long s = 0;
    for (int k = 0; k < n_; ++k) s -= static_cast<long long>(x[k]) * y[k];
    return s;
  }

  void extend(std::size_t idx, int used) {
    if (idx == order_.size()) {
      Embedding e;
      e.n = n_;
      for (auto& a : assigned_) e.vectors.push_back(*a);
      found_.insert(e.canonical());
      return;
    }
    const int v = order_[idx];
    const int norm = static_cast<int>(-g_.gram[v][v]);
    std::vector<int> x(n_, 0);
    std::function<void(int, int)> old_coords = [&](int k, int remaining) {
      if (k == used) {
        for (std::size_t w = 0; w < assigned_.size(); ++w)
          if (assigned_[w] && product(x, *assigned_[w]) != g_.gram[v][w]) return;
        new_coords(v, idx, used, used, remaining, remaining, x);
        return;
      }
      int bound = static_cast<int>(std::sqrt(static_cast<double>(remaining)));
      for (int value = -bound; value <= bound; ++value) {
        x[k] = value;
        old_coords(k + 1, remaining - value * value);
      }
      x[k] = 0;
    };
    old_coords(0, norm);
  }

  // Fills fresh coordinates with positive values, non-increasing.
  void new_coords(int v, std::size_t idx, int used, int next, int remaining, int cap,
                  std::vector<int>& x) {
    if (remaining == 0) {
      assigned_[v] = x;
      extend(idx + 1, next);
      assigned_[v].reset();
      return;
    }
    if (next >= n_) return;
    for (int value = static_cast<int>(std::sqrt(static_cast<double>(std::min(remaining, cap))));
         value >= 1; --value) {
      x[next] = value;
      new_coords(v, idx, used, next + 1, remaining - value * value, value * value, x);
    }
    x[next] = 0;
  }

  const GramLattice& g_;
  int n_;
  std::vector<std::optional<std::vector<int>>> assigned_;
  int used_ = 0;
  bool consistent_ = true;
  std::vector<int> order_;
  std::set<Embedding, std::function<bool(const Embedding&, const Embedding&)>> found_{
      [](const Embedding& a, const Embedding& b) { return a.vectors < b.vectors; }};
};

}  // namespace

std::vector<Embedding> enumerate_embeddings(const GramLattice& g, int n) {
  return complete_embedding(g, n, {});
}

std::vector<Embedding> complete_embedding(const GramLattice& g, int n,
                                          const std::vector<std::optional<std::vector<int>>>& partial) {
  g.validate();
  if (n < 0) throw MathError("lattice: negative ambient rank");
  auto out = Search(g, n, partial).run();
  for (const auto& e : out)
    if (e.gram() != g.gram) throw MathError("lattice: internal error, embedding breaks the form");
  return out;
}

namespace {

using Vec = std::vector<long long>;

long long dot(const Vec& a, const Vec& b) {
  long long s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

void axpy(Vec& a, long long q, const Vec& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= q * b[k];
}

// Integer kernel of the rows of m (as vectors in Z^n) via unimodular column
// operations.
std::vector<Vec> integer_kernel(std::vector<Vec> m, int n) {
  std::vector<Vec> u(n, Vec(n, 0));  // columns of U stored as u[c]
  for (int c = 0; c < n; ++c) u[c][c] = 1;
  std::vector<Vec> cols(n, Vec(m.size(), 0));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (int c = 0; c < n; ++c) cols[c][r] = m[r][c];

  int pivot = 0;
  for (std::size_t r = 0; r < m.size() && pivot < n; ++r) {
    while (true) {
      int best = -1;
      for (int c = pivot; c < n; ++c)
        if (cols[c][r] != 0 && (best < 0 || std::llabs(cols[c][r]) < std::llabs(cols[best][r])))
          best = c;
      if (best < 0) break;
      std::swap(cols[best], cols[pivot]);
      std::swap(u[best], u[pivot]);
      bool done = true;
      for (int c = pivot + 1; c < n; ++c) {
        if (cols[c][r] == 0) continue;
        long long q = cols[c][r] / cols[pivot][r];
        axpy(cols[c], q, cols[pivot]);
        axpy(u[c], q, u[pivot]);
        if (cols[c][r] != 0) done = false;
      }
      if (done) {
        ++pivot;
        break;
      }
    }
  }
  return {u.begin() + pivot, u.end()};
}

long long round_div(const mpq_class& x) {
  mpz_class f;
  mpq_class h = x + mpq_class(1, 2);
  mpz_fdiv_q(f.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  return f.get_si();
}

void lll(std::vector<Vec>& b) {
  const std::size_t m = b.size();
  if (m < 2) return;
  auto gram_schmidt = [&](std::vector<std::vector<mpq_class>>& mu, std::vector<mpq_class>& norm) {
    std::vector<std::vector<mpq_class>> star(m);
    mu.assign(m, std::vector<mpq_class>(m, 0));
    norm.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      star[i].resize(b[i].size());
      for (std::size_t k = 0; k < b[i].size(); ++k) star[i][k] = static_cast<long>(b[i][k]);
      for (std::size_t j = 0; j < i; ++j) {
        mpq_class d = 0;
        for (std::size_t k = 0; k < b[i].size(); ++k) d += static_cast<long>(b[i][k]) * star[j][k];
        mu[i][j] = d / norm[j];
        for (std::size_t k = 0; k < b[i].size(); ++k) star[i][k] -= mu[i][j] * star[j][k];
      }
      for (auto& s : star[i]) norm[i] += s * s;
    }
  };
  std::vector<std::vector<mpq_class>> mu;
  std::vector<mpq_class> norm;
  std::size_t k = 1;
  gram_schmidt(mu, norm);
  while (k < m) {
    for (std::size_t j = k; j-- > 0;) {
      long long q = round_div(mu[k][j]);
      if (q != 0) {
        axpy(b[k], q, b[j]);
        gram_schmidt(mu, norm);
      }
    }
    if (norm[k] >= (mpq_class(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * norm[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gram_schmidt(mu, norm);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
}

}  // namespace

Complement orthogonal_complement(const Embedding& e) {
  std::vector<Vec> rows;
  for (const auto& v : e.vectors) rows.emplace_back(v.begin(), v.end());
  auto basis = integer_kernel(rows, e.n);
  lll(basis);

  // Split off unit vectors, then sort by norm.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (dot(basis[i], basis[i]) != 1) continue;
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (j != i) axpy(basis[j], dot(basis[j], basis[i]), basis[i]);
  }
  std::stable_sort(basis.begin(), basis.end(),
                   [](const Vec& a, const Vec& b) { return dot(a, a) > dot(b, b); });
  for (auto& v : basis) {
    auto first = std::find_if(v.begin(), v.end(), [](long long x) { return x != 0; });
    if (first != v.end() && *first > 0)
      for (auto& x : v) x = -x;
  }

  Complement c;
  const auto r = basis.size();
  c.lattice.gram.assign(r, std::vector<long long>(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    c.lattice.labels.push_back("u" + std::to_string(i + 1));
    c.basis.emplace_back(basis[i].begin(), basis[i].end());
    for (std::size_t j = 0; j < r; ++j) c.lattice.gram[i][j] = -dot(basis[i], basis[j]);
  }
  c.diagonal = true;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (i != j && c.lattice.gram[i][j] != 0) c.diagonal = false;
  if (c.diagonal)
    for (std::size_t i = 0; i < r; ++i) c.diagonal_entries.push_back(c.lattice.gram[i][i]);
  return c;
}

ParityResult parity_obstruction(const GramLattice& complement, long long k) {
  const auto& g = complement.gram;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (i != j && g[i][j] != 0) throw MathError("parity_obstruction: complement is not diagonal");
  ParityResult r;
  for (std::size_t i = 0; i < g.size(); ++i) {
    long long d = -g[i][i];
    if ((k % 2 != 0) && (d % 2 != 0)) {
      r.obstructed = true;
      r.witness = static_cast<int>(i);
      break;
    }
  }
  if (r.obstructed) {
    r.forced_b2 = 0;
    r.required_d3 = mpq_class(0);
  }
  return r;
}

}  // namespace khtight
