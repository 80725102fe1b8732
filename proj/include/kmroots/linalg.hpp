// Exact rational linear algebra on Eigen dense types: canonical echelon
// forms, solves, kernels, and integer kernel lattices. Deterministic pivot
// choice (first nonzero), no scaling heuristics.

#pragma once

#include "kmroots/numeric.hpp"

#include <optional>
#include <vector>

namespace kmroots {

/// Reduced row echelon form, in place. Returns pivot column indices.
std::vector<Index> rref_in_place(RatMat& m);

inline RatMat rref(RatMat m) {
  rref_in_place(m);
  return m;
}

Index rank(const RatMat& m);

Rat determinant(RatMat m);

/// One solution x of a*x = b, or nullopt if inconsistent.
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

/// Columns form a basis of the rational kernel {x : a*x = 0}.
RatMat kernel_basis(const RatMat& a);

/// Columns form a Z-basis of the kernel lattice {x in Z^m : a*x = 0},
/// computed by integer column reduction with unimodular tracking.
IntMat integer_kernel(const IntMat& a);

/// A subspace of Q^n held as a canonical reduced-row-echelon basis.
/// Two Subspaces are equal iff their canonical bases are identical.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Index ambient) : ambient_(ambient), basis_(0, ambient) {}
  /// Rows of `vectors` span the subspace.
  Subspace(Index ambient, const RatMat& vectors);

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  bool is_zero() const { return basis_.rows() == 0; }
  /// Canonical RREF basis, one vector per row.
  const RatMat& basis() const { return basis_; }

  bool contains(const RatVec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Orthogonal complement within Q^n w.r.t. the symmetric form `gram`.
  Subspace orthogonal_complement(const RatMat& gram) const;
  /// Deterministic complement of `other` inside *this (other must be
  /// contained in *this): basis vectors of *this not absorbed by `other`.
  Subspace complement_within(const Subspace& other) const;

  static Subspace full(Index ambient);

 private:
  Index ambient_ = 0;
  RatMat basis_;  // RREF rows, zero rows dropped
};

}  // namespace kmroots
