// Generalized Cartan matrices, symmetrizers, the invariant bilinear form,
// and exact type detection (finite / affine / indefinite).
//
// All types are immutable after construction and all operations are pure.

#pragma once

#include "kmroots/errors.hpp"
#include "kmroots/numeric.hpp"

#include <string>
#include <vector>

namespace kmroots {

/// A generalized Cartan matrix: a_ii = 2, a_ij <= 0 for i != j, and
/// a_ij = 0 iff a_ji = 0.
class Gcm {
 public:
  static Gcm validate(const IntMat& entries);

  Index rank() const { return entries_.rows(); }
  const IntMat& entries() const { return entries_; }
  const Int& a(Index i, Index j) const { return entries_(i, j); }

  bool operator==(const Gcm& other) const { return entries_ == other.entries_; }

 private:
  explicit Gcm(IntMat entries) : entries_(std::move(entries)) {}
  IntMat entries_;
};

enum class MatrixKind { Finite, Affine, Indefinite };

std::string to_string(MatrixKind k);

/// A GCM together with its symmetrizer d (minimal positive integers per
/// indecomposable component) and the exact Gram matrix gram_ij = d_i a_ij.
class CartanDatum {
 public:
  static CartanDatum symmetrize(const Gcm& g);

  Index rank() const { return gcm_.rank(); }
  const Gcm& gcm() const { return gcm_; }
  const std::vector<Int>& d() const { return d_; }
  const RatMat& gram() const { return gram_; }
  /// Gram matrix of the simple coroots: (alpha_i^vee, alpha_j^vee) = a_ij / d_j.
  const RatMat& coroot_gram() const { return coroot_gram_; }

  /// (x, y) = sum x_i y_j gram_ij, exact.
  Rat bilinear(const IntVec& x, const IntVec& y) const;
  Rat norm(const IntVec& x) const { return bilinear(x, x); }

  /// (beta, alpha^vee) = 2 (beta, alpha) / (alpha, alpha); requires
  /// (alpha, alpha) > 0 and an integral value.
  Int pairing(const IntVec& beta, const IntVec& alpha) const;

  /// Reflection s_alpha(x) = x - (x, alpha^vee) alpha.
  IntVec reflect(const IntVec& alpha, const IntVec& x) const;

  /// Coroot of a real-normed lattice vector in simple-coroot coordinates.
  RatVec coroot(const IntVec& alpha) const;

  bool operator==(const CartanDatum& other) const {
    return gcm_ == other.gcm_ && d_ == other.d_;
  }

 private:
  CartanDatum(Gcm g, std::vector<Int> d, RatMat gram, RatMat coroot_gram)
      : gcm_(std::move(g)), d_(std::move(d)), gram_(std::move(gram)),
        coroot_gram_(std::move(coroot_gram)) {}
  Gcm gcm_;
  std::vector<Int> d_;
  RatMat gram_;
  RatMat coroot_gram_;
};

/// Connected components of the Coxeter graph, each a sorted index list.
std::vector<std::vector<Index>> components(const Gcm& g);

/// Type of each indecomposable component, in components() order, decided
/// by exact signs of principal minors of the restricted Gram matrix.
std::vector<MatrixKind> kind(const CartanDatum& cd);

/// Type of the whole datum; requires an indecomposable GCM.
MatrixKind kind_indecomposable(const CartanDatum& cd);

/// Standard irreducible GCMs by Cartan label ("A3", "B2", ..., "G2") and
/// untwisted affine labels ("A2~", alias "A2^(1)").
Gcm named_gcm(const std::string& label);

}  // namespace kmroots
