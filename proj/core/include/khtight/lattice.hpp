#pragma once

// Embeddings of negative-definite integral lattices into the diagonal lattice
// <-1>^n (basis e_i with e_i . e_j = -delta_ij), orthogonal complements, and
// the parity obstruction for fillings with vanishing first Chern class.

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "khtight/classical.hpp"

namespace khtight {

struct GramLattice {
  IntMatrix gram;
  std::vector<std::string> labels;

  std::size_t rank() const { return gram.size(); }
  bool negative_definite() const;
  /// Throws MathError unless square, symmetric, labelled consistently and
  /// negative definite.
  void validate() const;
};

/// Star-shaped plumbings for the 10_125 family (v1 .. v7) and the 10_141 family (v1 .. v8).
GramLattice plumbing_e125();
GramLattice plumbing_e141();

struct Embedding {
  int n = 0;
  /// vectors[v] is the image of vertex v in Z^n.
  std::vector<std::vector<int>> vectors;

  /// Gram matrix of the images under -sum x_k y_k.
  IntMatrix gram() const;
  /// Canonical representative under signed permutations of the e_i: each
  /// coordinate's first nonzero entry (in vertex order) made negative,
  /// coordinates then sorted.
  Embedding canonical() const;
  bool operator==(const Embedding&) const = default;
};

/// All embeddings up to signed permutations of the e_i, as canonical
/// representatives in lexicographic order.
std::vector<Embedding> enumerate_embeddings(const GramLattice& g, int n);

/// Completions of a partial assignment (nullopt = unassigned), canonicalized.
/// An empty result means the partial assignment does not extend.
std::vector<Embedding> complete_embedding(const GramLattice& g, int n,
                                          const std::vector<std::optional<std::vector<int>>>& partial);

struct Complement {
  /// Basis of the orthogonal complement in Z^n (rows).
  std::vector<std::vector<int>> basis;
  GramLattice lattice;
  bool diagonal = false;
  /// Diagonal entries sorted by absolute value, largest first (when diagonal).
  std::vector<long long> diagonal_entries;
};

Complement orthogonal_complement(const Embedding& e);

struct ParityResult {
  bool obstructed = false;
  /// Index of a summand <-d_i> with k^2 d_i odd.
  std::optional<int> witness;
  /// Consequences when obstructed: b2 of a filling with c1 = 0 must vanish,
  /// which forces d3 = 0.
  int forced_b2 = -1;
  std::optional<mpq_class> required_d3;
};

/// Throws MathError when the complement is not diagonal.
ParityResult parity_obstruction(const GramLattice& complement, long long k);

}  // namespace khtight
