#include "khtight/gf2.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <utility>

namespace khtight::gf2 {

SparseVec sum(const SparseVec& a, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void add_into(SparseVec& a, const SparseVec& b) {
  if (b.empty()) return;
  a = sum(a, b);
}

bool SparseBitMatrix::well_formed() const {
  if (columns.size() != cols) return false;
  for (const auto& c : columns) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] >= rows) return false;
      if (k && c[k - 1] >= c[k]) return false;
    }
  }
  return true;
}

namespace {

// Column reduction against a lowest-row pivot table. `combos`, when given,
// tracks which original columns each reduced column is a sum of.
struct ColumnReducer {
  std::vector<std::int64_t> pivot_of_row;
  std::vector<SparseVec> reduced;
  std::vector<SparseVec> combos;
  bool track;

  ColumnReducer(std::uint32_t rows, bool track_combos)
      : pivot_of_row(rows, -1), track(track_combos) {}

  void reduce(SparseVec& col, SparseVec* combo) const {
    while (!col.empty()) {
      auto p = pivot_of_row[col.back()];
      if (p < 0) return;
      add_into(col, reduced[p]);
      if (combo) add_into(*combo, combos[p]);
    }
  }

  void push(SparseVec col, std::uint32_t index) {
    SparseVec combo;
    if (track) combo.push_back(index);
    reduce(col, track ? &combo : nullptr);
    if (col.empty()) return;
    pivot_of_row[col.back()] = static_cast<std::int64_t>(reduced.size());
    reduced.push_back(std::move(col));
    if (track) combos.push_back(std::move(combo));
  }
};

}  // namespace

std::size_t rank_f2(const SparseBitMatrix& m) {
  ColumnReducer r(m.rows, false);
  for (std::uint32_t c = 0; c < m.cols; ++c) r.push(m.columns[c], c);
  return r.reduced.size();
}

std::optional<SparseVec> solve(const SparseBitMatrix& m, const SparseVec& target) {
  ColumnReducer r(m.rows, true);
  for (std::uint32_t c = 0; c < m.cols; ++c) r.push(m.columns[c], c);
  SparseVec t = target;
  SparseVec combo;
  r.reduce(t, &combo);
  if (!t.empty()) return std::nullopt;
  return combo;
}

BitVec& BitVec::operator^=(const BitVec& o) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& o) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
  return *this;
}

bool BitVec::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVec::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t BitVec::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return size_;
}

std::vector<std::size_t> BitVec::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

DenseBitMatrix DenseBitMatrix::from_sparse(const SparseBitMatrix& m) {
  DenseBitMatrix d(m.rows, m.cols);
  for (std::uint32_t c = 0; c < m.cols; ++c)
    for (auto r : m.columns[c]) d.data[r].set(c);
  return d;
}

std::size_t rank_dense(DenseBitMatrix m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && !m.data[pivot].get(col)) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(m.data[rank], m.data[pivot]);
    for (std::size_t r = rank + 1; r < m.rows; ++r)
      if (m.data[r].get(col)) m.data[r] ^= m.data[rank];
    ++rank;
  }
  return rank;
}

BitVec Subspace::reduce(BitVec v) const {
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (v.get(pivots_[k])) v ^= basis_[k];
  return v;
}

bool Subspace::contains(BitVec v) const { return !reduce(std::move(v)).any(); }

bool Subspace::insert(BitVec v) {
  v = reduce(std::move(v));
  if (!v.any()) return false;
  std::size_t p = v.first();
  for (auto& b : basis_)
    if (b.get(p)) b ^= v;
  basis_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

Subspace Subspace::span(std::size_t ambient, std::span<const BitVec> vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::plus(const Subspace& other) const {
  Subspace s = *this;
  for (const auto& v : other.basis_) s.insert(v);
  return s;
}

Subspace Subspace::restrict_to(const BitVec& mask) const {
  BitVec outside(ambient_);
  for (std::size_t i = 0; i < ambient_; ++i)
    if (!mask.get(i)) outside.set(i);

  std::vector<std::pair<BitVec, std::size_t>> rows;
  Subspace result(ambient_);
  for (BitVec v : basis_) {
    for (const auto& [r, p] : rows)
      if (v.get(p)) v ^= r;
    BitVec proj = v;
    proj &= outside;
    if (!proj.any()) {
      result.insert(std::move(v));
    } else {
      rows.emplace_back(std::move(v), proj.first());
    }
  }
  return result;
}

Subspace kernel(std::size_t ambient, std::span<const BitVec> domain,
                std::span<const BitVec> images) {
  std::vector<std::pair<BitVec, BitVec>> rows;  // (image, domain combination)
  std::vector<std::size_t> pivots;
  Subspace result(ambient);
  for (std::size_t k = 0; k < domain.size(); ++k) {
    BitVec img = images[k];
    BitVec dom = domain[k];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (img.get(pivots[r])) {
        img ^= rows[r].first;
        dom ^= rows[r].second;
      }
    }
    if (!img.any()) {
      result.insert(std::move(dom));
    } else {
      pivots.push_back(img.first());
      rows.emplace_back(std::move(img), std::move(dom));
    }
  }
  return result;
}

}  // namespace khtight::gf2
