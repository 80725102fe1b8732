// Exact bracket engine for untwisted affine Lie algebras
//   g = g0 (x) C[t, t^-1]  (+)  C c  (+)  C d
// over a Chevalley basis of the finite part: structure-constant tables,
// sparse rational loop elements, bracket-closed subalgebra slices within a
// degree band, and the checks built on them.
//
// Sign convention: extraspecial pairs w.r.t. the canonical (height, lex)
// order on positive roots receive N = +(p+1); everything else follows from
// antisymmetry, the involution rule N(-a,-b) = -N(a,b), and the Jacobi
// identity. The invariant form is (x_a, x_-a) = 2/(a,a) with
// (h_i, h_j) the coroot Gram matrix, so [x_a, x_-a] = a^vee exactly.

#pragma once

#include "kmroots/affine.hpp"
#include "kmroots/finite.hpp"
#include "kmroots/linalg.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace kmroots {

class ChevalleyBasis {
 public:
  static ChevalleyBasis build(const FiniteRootSystem& fr);

  const FiniteRootSystem& finite() const { return *fr_; }
  /// N(root_a, root_b); zero when the sum is not a root.
  const Int& n_constant(Index a, Index b) const { return n_(a, b); }
  /// (x_a, x_{-a}) = 2 / (a, a).
  Rat form_xx(Index a) const;
  /// Index of the i-th simple root within the root list.
  Index simple_id(Index i) const { return simple_ids_[i]; }
  std::string convention() const;

 private:
  explicit ChevalleyBasis(const FiniteRootSystem& fr) : fr_(&fr) {}
  const FiniteRootSystem* fr_;
  IntMat n_;
  std::vector<Index> simple_ids_;
};

struct LoopKey {
  enum class Kind { X, H, C, D } kind;
  Index idx = 0;  // root id for X, simple-coroot index for H
  long r = 0;     // t-degree

  bool operator<(const LoopKey& o) const {
    if (r != o.r) return r < o.r;
    if (kind != o.kind) return kind < o.kind;
    return idx < o.idx;
  }
  bool operator==(const LoopKey& o) const {
    return kind == o.kind && idx == o.idx && r == o.r;
  }
};

/// Finitely supported rational combination of basis vectors
/// x_a (x) t^r, alpha_i^vee (x) t^r, c, d; kept in canonical form.
class LoopElement {
 public:
  LoopElement() = default;

  static LoopElement x(Index root_id, long r, Rat coef = Rat(1));
  static LoopElement h(Index simple_i, long r, Rat coef = Rat(1));
  /// h (x) t^r for h given in simple-coroot coordinates.
  static LoopElement cartan(const RatVec& h, long r);
  static LoopElement c(Rat coef = Rat(1));
  static LoopElement d(Rat coef = Rat(1));

  const std::map<LoopKey, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const LoopKey& k, const Rat& coef);
  LoopElement& operator+=(const LoopElement& o);
  LoopElement operator*(const Rat& s) const;

  bool operator==(const LoopElement& o) const { return terms_ == o.terms_; }

 private:
  std::map<LoopKey, Rat> terms_;
};

std::string to_string(const LoopElement& e, const FiniteRootSystem& fr);

/// Exact bracket; bilinear, antisymmetric. Central extension:
/// [a (x) t^m, b (x) t^n] = [a,b] (x) t^{m+n} + m delta_{m,-n} (a,b) c,
/// [d, a (x) t^m] = m a (x) t^m, c central.
LoopElement bracket(const ChevalleyBasis& cb, const LoopElement& x, const LoopElement& y);

/// Invariant form on degree-paired elements (used by the cocycle and the
/// symmetric/special hypothesis check).
Rat loop_form(const ChevalleyBasis& cb, const LoopElement& x, const LoopElement& y);

/// A graded key of a regular subalgebra slice: a real root-space line
/// (root, level) or the Cartan block of one level.
struct GradedKey {
  bool real = false;
  Index root = -1;  // for real keys
  long level = 0;

  bool operator<(const GradedKey& o) const {
    if (level != o.level) return level < o.level;
    if (real != o.real) return real < o.real;
    return root < o.root;
  }
  bool operator==(const GradedKey& o) const {
    return real == o.real && root == o.root && level == o.level;
  }
};

/// Bracket-saturated spans of an h-invariant subalgebra within
/// |t-degree| <= band. Cartan blocks live in Q^{rank+2} with coordinates
/// [h-part | c | d]; c and d occur at level 0 only.
class SubalgebraSlice {
 public:
  SubalgebraSlice(const FiniteRootSystem& fr, long band);

  long band() const { return band_; }
  Index rank() const { return rank_; }
  bool saturated() const { return saturated_; }
  /// In-band closure may miss elements reachable only through out-of-band
  /// intermediates; set when any product was discarded at the boundary.
  bool boundary_hit() const { return boundary_hit_; }

  const std::set<std::pair<Index, long>>& real_keys() const { return real_; }
  const std::map<long, Subspace>& cartan_blocks() const { return cartan_; }

  bool has_real(Index root_id, long level) const { return real_.count({root_id, level}) != 0; }
  Subspace cartan_at(long level) const;
  bool has_central() const;

  /// Graded membership: every homogeneous component must lie in its span.
  bool contains(const LoopElement& e) const;

  /// Returns false if e is out of band. Used by generate and by tests that
  /// assemble slices by hand.
  bool insert(const LoopElement& e);

  void set_saturated(bool s) { saturated_ = s; }
  void set_boundary_hit(bool b) { boundary_hit_ = b; }

  /// Basis representatives of all spans, in deterministic order.
  std::vector<LoopElement> basis_elements() const;

 private:
  const FiniteRootSystem* fr_;
  long band_;
  Index rank_;
  bool saturated_ = false;
  bool boundary_hit_ = false;
  std::set<std::pair<Index, long>> real_;
  std::map<long, Subspace> cartan_;
};

/// Graded component split of an element; throws if a term mixes levels in
/// one X key (cannot happen for well-formed elements).
std::map<GradedKey, LoopElement> graded_components(const LoopElement& e);

/// Bracket closure of the generators within the band. Generators must be
/// ad-h homogeneous (a single graded key each).
SubalgebraSlice generate(const ChevalleyBasis& cb, const std::vector<LoopElement>& gens,
                         long band);

struct SupportReport {
  std::set<std::pair<Index, long>> real;
  std::set<long> imaginary_levels;
  bool has_central = false;
  bool boundary_hit = false;
};

SupportReport root_support(const SubalgebraSlice& s);

/// All in-band bracket products of span basis elements that escape the
/// spans (empty iff the slice is bracket-closed within the band).
std::vector<std::string> saturation_violations(const ChevalleyBasis& cb,
                                               const SubalgebraSlice& s);

struct RootGeneratedReport {
  bool pass = false;
  bool band_sufficient = true;
  std::vector<std::string> mismatches;
  bool central_expected = false;      // sharp in-band model
  bool central_actual = false;
  bool central_display_rule = false;  // k_i or f_i nonzero somewhere
};

/// Checks that the subalgebra generated by the root spaces of psi within
/// the band has real support exactly psi, the predicted Cartan layers, and
/// the predicted central component.
RootGeneratedReport verify_root_generated(const ChevalleyBasis& cb, const PeriodicRootSet& psi,
                                          long band);

struct KeypropReport {
  bool pass = false;
  long pairs_checked = 0;
  std::vector<std::string> violations;
};

/// For all real pairs of Delta(s) whose strings stay in band: the sum
/// property, reflection stability, and full string containment.
KeypropReport verify_keyprop(const ChevalleyBasis& cb, const SubalgebraSlice& s);

struct TupleSubalgebraReport {
  bool pass = false;
  std::vector<std::string> violations;
};

/// Assembles the space described by the tuple within the band and checks
/// it is bracket-closed.
TupleSubalgebraReport verify_tuple_subalgebra(const ChevalleyBasis& cb, const SymRegTuple& t,
                                              long band);

/// The assembled (unvalidated) slice of a tuple datum; test hook for
/// deliberately corrupted data.
SubalgebraSlice assemble_tuple_slice(const ChevalleyBasis& cb, const PeriodicRootSet& psi,
                                     const std::map<long, Subspace>& cartan_extra, long band,
                                     bool with_central);

struct SymSpecialReport {
  std::set<GradedKey> symmetric, special;
  bool hypothesis_pairing = true;     // nondegenerate s_a x s_-a pairing
  bool hypothesis_involution = true;  // omega(s_a) inside s_-a
  std::vector<std::string> hypothesis_witnesses;
  bool sym_part_closed = true;   // generated part stays on symmetric keys
  bool ideal = true;             // [s, s_sp] inside s_sp
  bool semidirect = true;        // s = s_sp (+) s_sy as graded spans
  std::vector<std::string> witnesses;
};

/// Symmetric/special split of Delta(s) and the decomposition checks.
SymSpecialReport split_sym_special(const ChevalleyBasis& cb, const SubalgebraSlice& s);

}  // namespace kmroots
