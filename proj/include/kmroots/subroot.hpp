// Subroot systems inside a RootSlice: closure, real-closedness, the
// canonical generators Pi(Psi), reflection orbits, the induced GCM B_Sigma,
// and bounded verification of the correspondence
//   pi-systems in Delta^+  <->  real closed subroot systems.
//
// Truncation-sensitive answers carry explicit certification status; there
// are no silent best-effort answers.

#pragma once

#include "kmroots/rootslice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kmroots {

/// A set of signed roots of a slice, stored explicitly.
class RootSet {
 public:
  explicit RootSet(const RootSlice& slice) : slice_(&slice) {}

  /// Throws if a vector is not a (possibly negative) root of the slice.
  static RootSet of(const RootSlice& slice, const std::vector<IntVec>& roots,
                    bool with_negatives = false);

  const RootSlice& slice() const { return *slice_; }
  const RootVecSet& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const IntVec& v) const { return members_.count(v) != 0; }
  void insert_checked(const IntVec& v);

  std::vector<IntVec> positive_members() const;
  bool is_symmetric() const;
  bool all_real() const;

  bool operator==(const RootSet& other) const { return members_ == other.members_; }

 private:
  const RootSlice* slice_;
  RootVecSet members_;
};

enum class Cert { True, False, Undecided };

std::string to_string(Cert c);

struct CertResult {
  Cert value = Cert::Undecided;
  std::optional<IntVec> witness_a, witness_b;  // for False
};

/// Closed under reflections by its own real members, exactly when all
/// images stay within the slice.
CertResult is_subroot_system(const RootSet& psi);

struct ClosureResult {
  RootSet set;
  bool truncated = false;  // some required element exceeded the slice
};

/// Smallest closed subroot system containing s (sums and reflections to a
/// fixpoint), exact when nothing leaves the slice.
ClosureResult closure(const RootSet& s);

/// psi subseteq real roots; alpha + beta in Delta^re forces membership.
CertResult is_real_closed(const RootSet& psi);

struct MinimalityReport {
  std::vector<IntVec> certified_minimal;
  std::vector<IntVec> certified_nonminimal;
  std::vector<IntVec> undecided;
};

/// Minimal elements of Psi per the stabilization description: beta in
/// Psi cap Delta^+ is minimal iff s_beta permutes the remaining positive
/// members. Image positivity is decided exactly from coefficient signs;
/// in-slice images are additionally checked for membership, and a positive
/// in-slice image missing from psi puts the candidate in `undecided`.
MinimalityReport minimal_elements(const RootSet& psi);

struct PiSystem {
  std::vector<IntVec> gens;  // distinct positive real roots, canonical order
};

struct PiCheckResult {
  enum class Status { Certified, Refuted, Undecided } status;
  std::optional<IntVec> witness_a, witness_b, witness_diff;
};

/// Checks alpha - beta not in Delta for all pairs from sigma; Refuted
/// carries a witness pair.
PiCheckResult pi_system_check(const std::vector<IntVec>& sigma, const RootSlice& slice);

/// Validates sigma (distinct positive real roots of the slice) as a
/// PiSystem; throws on precondition violations, returns the check result
/// alongside.
std::pair<PiSystem, PiCheckResult> make_pi_system(const std::vector<IntVec>& sigma,
                                                  const RootSlice& slice);

struct OrbitResult {
  RootSet set;
  bool truncated = false;
};

/// W_Sigma(Sigma) within the slice: closure of +-sigma under reflections by
/// members already in the set, pruned at the slice boundary.
OrbitResult orbit(const PiSystem& sigma, const RootSlice& slice);

struct InducedGcm {
  Gcm gcm;
  std::vector<IntVec> labels;  // row index -> generator
};

/// b_ij = (beta_j, beta_i^vee); a valid GCM for any pi-system.
InducedGcm b_sigma(const PiSystem& sigma, const CartanDatum& cd);

/// One decomposition of beta over sigma with all coefficients >= 0 or all
/// <= 0, or nullopt.
std::optional<IntVec> combo_decompose(const PiSystem& sigma, const IntVec& beta);

/// Z-basis of the lattice of integral relations {c : sum c_i sigma_i = 0},
/// one relation per column.
IntMat combo_kernel(const PiSystem& sigma);

struct BijectionReport {
  std::string status;  // "pass" | "fail" | "undecided"
  std::vector<IntVec> pi;
  MinimalityReport minimality;
  PiCheckResult pi_check{PiCheckResult::Status::Undecided, {}, {}, {}};
  bool roundtrip_equal = false;
  bool orbit_truncated = false;
  // positive pi-systems of Delta inside psi whose orbit covers psi within
  // the slice; expected to be exactly {Pi} for real closed psi
  std::vector<std::vector<IntVec>> generating_pi_systems;
  std::vector<std::string> notes;
};

/// Bounded verification of the bijection round trip and the uniqueness of
/// the generating pi-system; the probe enumerates candidate generator sets
/// of size <= max_gens.
BijectionReport verify_bijection(const RootSet& psi, std::size_t max_gens = 6);

}  // namespace kmroots
