// Exact enumeration of the root system of a symmetrizable GCM up to a
// height cutoff H, root classification, reflections, root strings, and the
// root-string criterion on GCM entries.
//
// The slice is exactly Delta^+ intersected with {ht <= H}; negative roots
// are never stored and all queries on them are answered by negation.
// Every answer that could change with a larger H is reported as Unknown or
// Truncated rather than guessed.

#pragma once

#include "kmroots/cartan.hpp"

#include <cstdlib>
#include <set>
#include <vector>

namespace kmroots {

enum class RootClass { Real, Imaginary, NotARoot, Unknown };

std::string to_string(RootClass c);

using RootVecSet = std::set<IntVec, HtLexLess>;

std::size_t max_roots_cap();

class RootSlice {
 public:
  /// Enumerate Delta^+ up to height H.
  ///
  /// Positive real roots: closure of the simple roots under
  /// height-increasing simple reflections. Positive imaginary roots: the
  /// fundamental cone (connected support, all simple pairings <= 0) scanned
  /// up to height H, then closed under height-increasing simple reflections.
  static RootSlice enumerate(const CartanDatum& cd, long height_bound,
                             std::size_t cap = max_roots_cap());

  const CartanDatum& cartan() const { return cd_; }
  long height_bound() const { return H_; }
  const RootVecSet& pos_real() const { return pos_real_; }
  const RootVecSet& pos_imag() const { return pos_imag_; }

  /// Exact classification when |ht(beta)| <= H, Unknown beyond the bound.
  RootClass classify(const IntVec& beta) const;
  bool is_root(const IntVec& beta) const {
    RootClass c = classify(beta);
    return c == RootClass::Real || c == RootClass::Imaginary;
  }
  bool in_bound(const IntVec& beta) const { return abs(height(beta)) <= H_; }

 private:
  RootSlice(CartanDatum cd, long H) : cd_(std::move(cd)), H_(H) {}
  CartanDatum cd_;
  long H_;
  RootVecSet pos_real_;
  RootVecSet pos_imag_;
};

/// The alpha-string through beta: {beta - p alpha, ..., beta + q alpha}
/// with p - q = (beta, alpha^vee).
struct RootString {
  IntVec alpha;
  IntVec beta;
  long p = 0;
  long q = 0;
  std::vector<IntVec> members;   // beta - p alpha ... beta + q alpha
  std::vector<bool> real_flags;  // per member

  long real_count() const {
    long n = 0;
    for (bool f : real_flags) n += f;
    return n;
  }
};

/// Computes the alpha-string through beta; alpha must be a real root and
/// beta a root of the slice. Throws TruncatedError if an endpoint cannot be
/// resolved within the height bound.
RootString root_string(const RootSlice& slice, const IntVec& alpha, const IntVec& beta);

/// All ordered pairs (i, j) with a_ij = -1 and a_ji < -1. When empty,
/// every root string contains at most 2 real roots.
std::vector<std::pair<Index, Index>> morita_pairs(const Gcm& g);

}  // namespace kmroots
