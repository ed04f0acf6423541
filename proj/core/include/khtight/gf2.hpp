#pragma once

// Linear algebra over the two-element field: sparse column matrices for the
// large cube complexes, bit-packed dense vectors for small residual problems.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace khtight::gf2 {

/// Sorted list of generator (or row) indices; the F2 vector with those entries set.
using SparseVec = std::vector<std::uint32_t>;

/// a := a + b for sorted index lists.
void add_into(SparseVec& a, const SparseVec& b);
SparseVec sum(const SparseVec& a, const SparseVec& b);

/// Column-major sparse matrix; each column a strictly increasing row list.
struct SparseBitMatrix {
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  std::vector<SparseVec> columns;

  SparseBitMatrix() = default;
  SparseBitMatrix(std::uint32_t r, std::uint32_t c) : rows(r), cols(c), columns(c) {}
  bool well_formed() const;
};

/// Rank by column reduction with a pivot (lowest row) table.
std::size_t rank_f2(const SparseBitMatrix& m);

/// Solves m * x = target. Returns the set of columns summing to target, or
/// nullopt when target is outside the column space.
std::optional<SparseVec> solve(const SparseBitMatrix& m, const SparseVec& target);

/// Bit-packed vector of fixed length.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true) {
    auto mask = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  BitVec& operator^=(const BitVec& o);
  BitVec& operator&=(const BitVec& o);
  bool any() const;
  std::size_t count() const;
  /// Index of the lowest set bit, or size() when zero.
  std::size_t first() const;
  std::vector<std::size_t> support() const;
  bool operator==(const BitVec&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense matrix with bit-packed rows.
struct DenseBitMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BitVec> data;

  DenseBitMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r, BitVec(c)) {}
  static DenseBitMatrix from_sparse(const SparseBitMatrix& m);
};

/// Rank by row-echelon elimination on packed words.
std::size_t rank_dense(DenseBitMatrix m);

/// Row-reduced basis of a subspace of F2^n, kept in echelon form by pivot.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BitVec>& basis() const { return basis_; }

  /// Adds v; returns false when v was already in the span.
  bool insert(BitVec v);
  bool contains(BitVec v) const;
  /// v reduced against the basis (zero iff v is in the span).
  BitVec reduce(BitVec v) const;

  static Subspace span(std::size_t ambient, std::span<const BitVec> vectors);
  Subspace plus(const Subspace& other) const;
  /// Intersection with the coordinate subspace spanned by the coordinates
  /// where `mask` is set.
  Subspace restrict_to(const BitVec& mask) const;

 private:
  std::size_t ambient_;
  std::vector<BitVec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Kernel of the linear map sending domain[k] (a vector of F2^n) to images[k].
/// Returned vectors are expressed in the ambient space of the domain vectors.
Subspace kernel(std::size_t ambient, std::span<const BitVec> domain,
                std::span<const BitVec> images);

}  // namespace khtight::gf2
