// Complete finite root systems: exact enumeration with no cutoff, indexed
// root arithmetic (sum / reflection / pairing tables), closed subroot
// systems and their simple systems, and the brute-force maximal-closed
// oracle.

#pragma once

#include "kmroots/cartan.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace kmroots {

using RootIdSet = std::set<Index>;

class FiniteRootSystem {
 public:
  /// Requires every component of cd to be of finite type.
  static FiniteRootSystem build(const CartanDatum& cd);

  const CartanDatum& cartan() const { return cd_; }
  Index rank() const { return cd_.rank(); }

  Index count() const { return static_cast<Index>(roots_.size()); }
  Index num_positive() const { return count() / 2; }
  const IntVec& root(Index id) const { return roots_[id]; }
  /// -1 if v is not a root.
  Index index_of(const IntVec& v) const;
  Index neg(Index id) const { return neg_[id]; }
  bool is_positive(Index id) const { return id < num_positive(); }

  const Rat& norm(Index id) const { return norms_[id]; }
  /// Coroot coordinates over the simple coroot basis.
  const RatVec& coroot(Index id) const { return coroots_[id]; }
  /// (root_b, root_a^vee), exact integer.
  long pairing(Index b, Index a) const { return pairing_(b, a); }
  /// Index of root_i + root_j, or -1.
  Index sum(Index i, Index j) const { return sum_(i, j); }
  /// Index of s_{root_a}(root_x).
  Index reflect(Index a, Index x) const;
  /// p-value of the a-string through b: max{k : b - k a is a root}.
  long string_down(Index a, Index b) const;

  const std::vector<std::vector<Index>>& gcm_components() const { return gcm_components_; }
  /// Highest root id of each GCM component.
  const std::vector<Index>& highest_roots() const { return highest_; }

  RootIdSet all_ids() const;
  RootIdSet ids_of(const std::vector<IntVec>& roots) const;

 private:
  explicit FiniteRootSystem(CartanDatum cd) : cd_(std::move(cd)) {}
  CartanDatum cd_;
  std::vector<IntVec> roots_;  // positives in (ht, lex) order, then negatives mirrored
  std::vector<Index> neg_;
  std::vector<Rat> norms_;
  std::vector<RatVec> coroots_;
  Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic> pairing_;
  Eigen::Matrix<Index, Eigen::Dynamic, Eigen::Dynamic> sum_;
  std::vector<std::vector<Index>> gcm_components_;
  std::vector<Index> highest_;
  std::map<IntVec, Index, HtLexLess> index_;
};

/// Smallest closed subroot system containing s (exact, finite type).
RootIdSet finite_closure(const FiniteRootSystem& fr, const RootIdSet& s);

bool is_closed_subroot_system(const FiniteRootSystem& fr, const RootIdSet& s);

/// Irreducible components of a closed subroot system, grouped by
/// non-orthogonality.
std::vector<RootIdSet> irreducible_components(const FiniteRootSystem& fr, const RootIdSet& s);

/// Simple system of a closed subroot system w.r.t. the inherited
/// positivity: positive members that are not sums of two positive members.
std::vector<Index> simple_system(const FiniteRootSystem& fr, const RootIdSet& s);

/// Brute force: psi is maximal among proper closed subroot systems iff
/// adjoining any missing root pair closes up to the full system.
/// Throws NotProperError when psi equals the full system.
bool is_maximal_closed(const FiniteRootSystem& fr, const RootIdSet& psi);

/// All maximal closed subroot systems (explicit sets, not conjugacy
/// classes), by exhaustive lattice search certified with is_maximal_closed.
/// Requires rank <= rank_cap.
std::vector<RootIdSet> maximal_closed(const FiniteRootSystem& fr, Index rank_cap = 8);

/// All closed subroot systems (the full lattice, minus the empty set).
std::vector<RootIdSet> all_closed_subsystems(const FiniteRootSystem& fr, Index rank_cap = 8);

}  // namespace kmroots
