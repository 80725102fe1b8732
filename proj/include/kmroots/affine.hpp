// Exact combinatorics for untwisted affine root systems: the periodic
// representation (Psi0_i, k_i, f_i) of real closed subroot systems, exact
// canonical generators with no truncation, maximal closed subroot systems
// of the finite part, and the tuple datum (Psi0, k, Lambda, (f_i), (V_x))
// describing symmetric regular subalgebras of the derived algebra.
//
// Real roots are pairs alpha + m delta with alpha in the finite system;
// imaginary roots are the nonzero multiples of delta.

#pragma once

#include "kmroots/finite.hpp"
#include "kmroots/linalg.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace kmroots {

struct AffineRoot {
  IntVec fin;  // zero vector for imaginary roots
  long level = 0;

  bool operator==(const AffineRoot& o) const { return level == o.level && vec_eq(fin, o.fin); }
};

std::string to_string(const AffineRoot& r);

/// Z-linear function on a closed subroot system component, stored by its
/// values on the component's simple system and extended linearly; integer
/// values on every root of the component are checked exhaustively.
class ZLinearFn {
 public:
  ZLinearFn() = default;
  static ZLinearFn zero(const FiniteRootSystem& fr, const RootIdSet& component);
  static ZLinearFn on_base(const FiniteRootSystem& fr, const RootIdSet& component,
                           const std::vector<Index>& base, const std::vector<Int>& values);

  const std::vector<Index>& base() const { return base_; }
  const std::vector<Int>& base_values() const { return values_; }
  Int operator()(Index root_id) const;
  bool is_zero() const;
  /// Reduce base values into [0, k); membership is unchanged.
  void reduce_mod(long k);

 private:
  std::vector<Index> base_;
  std::vector<Int> values_;
  std::map<Index, Int> all_;  // value on every root of the component
};

struct PeriodicComponent {
  RootIdSet roots;  // irreducible closed subroot system, symmetric
  long k = 0;       // level period, >= 0 (k = 0: single layer)
  ZLinearFn f;
};

/// Exact representation of a real closed subroot system of an untwisted
/// affine root system: alpha + m delta is a member iff alpha lies in some
/// component i and m == f_i(alpha) (mod k_i), with k_i = 0 read as equality.
class PeriodicRootSet {
 public:
  /// Validates: union closed, given parts are its irreducible components,
  /// each f integral, and the represented set real closed (finite residue
  /// check over all root pairs).
  static PeriodicRootSet validate(const FiniteRootSystem& fr,
                                  std::vector<PeriodicComponent> comps);

  const FiniteRootSystem& finite() const { return *fr_; }
  const std::vector<PeriodicComponent>& components() const { return comps_; }
  /// Component index containing the finite root, or -1.
  int component_of(Index fin_id) const;
  RootIdSet finite_union() const;

  bool membership(Index fin_id, long level) const;
  bool membership(const AffineRoot& r) const;

 private:
  explicit PeriodicRootSet(const FiniteRootSystem& fr) : fr_(&fr) {}
  const FiniteRootSystem* fr_;
  std::vector<PeriodicComponent> comps_;
};

/// Exact canonical generators of the represented subroot system, decided by
/// finitely many residue checks; no truncation.
std::vector<AffineRoot> pi_exact(const PeriodicRootSet& psi);

enum class Gradient { Full, Proper };

struct Case1 {
  long k;  // prime
  ZLinearFn f;  // on the whole finite system
};

struct Case2 {
  RootIdSet psi0;  // maximal closed subroot system
};

struct MaximalRealClosed {
  PeriodicRootSet psi;
  Gradient gradient;
};

MaximalRealClosed maximal_real_closed(const FiniteRootSystem& fr, const Case1& c);
MaximalRealClosed maximal_real_closed(const FiniteRootSystem& fr, const Case2& c);

/// A symmetric subset of Z minus {0}, presented as residue classes modulo
/// `modulus` adjusted by finite symmetric exception sets.
class PeriodicIntSet {
 public:
  static PeriodicIntSet make(long modulus, std::set<long> residues, std::set<long> add = {},
                             std::set<long> remove = {});
  static PeriodicIntSet empty() { return make(1, {}); }

  long modulus() const { return modulus_; }
  const std::set<long>& residues() const { return residues_; }
  const std::set<long>& added() const { return add_; }
  const std::set<long>& removed() const { return remove_; }

  bool contains(long x) const;
  bool is_empty() const;
  /// Largest |x| touched by an exception.
  long exception_radius() const;
  /// Exact: does the set meet k Z (k > 0) anywhere?
  bool meets_multiples_of(long k) const;

 private:
  long modulus_ = 1;
  std::set<long> residues_, add_, remove_;
};

/// The datum (Psi0, k, Lambda, (f_i), (V_x)) of a symmetric regular
/// subalgebra of the derived algebra. V is indexed by residue classes
/// modulo L = lcm(nonzero k_i, lambda modulus) and applies at levels in
/// I(k, Lambda) = (union k_i Z) cup Lambda.
class SymRegTuple {
 public:
  static SymRegTuple validate(PeriodicRootSet psi, PeriodicIntSet lambda,
                              std::map<long, Subspace> v_by_residue);

  const PeriodicRootSet& psi() const { return psi_; }
  const PeriodicIntSet& lambda() const { return lambda_; }
  long level_modulus() const { return L_; }
  const std::map<long, Subspace>& v_map() const { return v_; }

  /// Subspace attached at level x (zero subspace when x is outside
  /// I(k, Lambda) or has no entry).
  Subspace v_at(long x) const;
  bool level_in_index_set(long x) const;  // x in I(k, Lambda)
  /// Cartan span at level x inside the finite Cartan: sum of h(Psi0_i)
  /// over k_i | x plus v_at(x).
  Subspace cartan_at(long x) const;
  /// Whether the canonical central element lies in the subalgebra.
  bool has_central() const;
  /// x != 0 carrying a nonzero Cartan span.
  bool imaginary_level(long x) const;
  /// Window radius sufficient for periodic comparisons.
  long compare_window() const;

  bool operator==(const SymRegTuple& other) const;

 private:
  SymRegTuple(PeriodicRootSet psi, PeriodicIntSet lambda)
      : psi_(std::move(psi)), lambda_(std::move(lambda)) {}
  PeriodicRootSet psi_;
  PeriodicIntSet lambda_;
  long L_ = 1;
  std::map<long, Subspace> v_;
};

struct TupleRoots {
  std::set<std::pair<Index, long>> real;  // (finite root id, level)
  std::set<long> imaginary_levels;
  bool has_central = false;
};

/// Roots of the represented subalgebra within |level| <= band.
TupleRoots tuple_roots(const SymRegTuple& t, long band);

/// Exact containment of the represented subalgebras.
bool tuple_leq(const SymRegTuple& a, const SymRegTuple& b);

struct MaximalVerdict {
  bool maximal = false;
  std::string shape;  // "derived-algebra" | "proper-gradient" | "full-gradient" | ""
  std::string reason;
};

/// Matches the tuple against the classified maximal shapes. with_d states
/// whether C d is adjoined; the derived-algebra datum is maximal only
/// without d (with d it is the whole algebra and NotProperError is thrown).
MaximalVerdict is_maximal_tuple(const SymRegTuple& t, bool with_d);

/// A maximal tuple containing t (the derived-algebra datum when nothing
/// proper lies above). Used as an independent witness for non-maximality.
SymRegTuple maximal_envelope(const SymRegTuple& t);

/// The derived-algebra datum [g, g]: full finite system at every level.
SymRegTuple derived_algebra_tuple(const FiniteRootSystem& fr);

/// The proper-gradient maximal tuple over a maximal closed psi0.
SymRegTuple proper_gradient_tuple(const FiniteRootSystem& fr, const RootIdSet& psi0);

/// The full-gradient maximal tuple (k prime, f Z-linear on the full system).
SymRegTuple full_gradient_tuple(const FiniteRootSystem& fr, long k, const ZLinearFn& f);

}  // namespace kmroots
