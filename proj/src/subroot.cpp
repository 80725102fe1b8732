#include "kmroots/subroot.hpp"

#include "kmroots/linalg.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace kmroots {

std::string to_string(Cert c) {
  switch (c) {
    case Cert::True: return "true";
    case Cert::False: return "false";
    case Cert::Undecided: return "undecided";
  }
  return "?";
}

RootSet RootSet::of(const RootSlice& slice, const std::vector<IntVec>& roots,
                    bool with_negatives) {
  RootSet s(slice);
  for (const IntVec& r : roots) {
    s.insert_checked(r);
    if (with_negatives) s.insert_checked(-r);
  }
  return s;
}

void RootSet::insert_checked(const IntVec& v) {
  RootClass c = slice_->classify(v);
  if (c == RootClass::NotARoot) throw KmError("RootSet: " + to_string(v) + " is not a root");
  if (c == RootClass::Unknown) throw TruncatedError(slice_->height_bound());
  members_.insert(v);
}

std::vector<IntVec> RootSet::positive_members() const {
  std::vector<IntVec> out;
  for (const IntVec& v : members_)
    if (vec_sign(v) == Sign::Positive) out.push_back(v);
  return out;
}

bool RootSet::is_symmetric() const {
  for (const IntVec& v : members_)
    if (!members_.count(-v)) return false;
  return true;
}

bool RootSet::all_real() const {
  for (const IntVec& v : members_)
    if (slice_->classify(v) != RootClass::Real) return false;
  return true;
}

CertResult is_subroot_system(const RootSet& psi) {
  const RootSlice& slice = psi.slice();
  const CartanDatum& cd = slice.cartan();
  bool truncated = false;
  for (const IntVec& a : psi.members()) {
    if (slice.classify(a) != RootClass::Real) continue;
    for (const IntVec& b : psi.members()) {
      IntVec img = cd.reflect(a, b);
      if (!slice.in_bound(img)) {
        truncated = true;
        continue;
      }
      if (!psi.contains(img)) return {Cert::False, a, b};
    }
  }
  if (truncated) return {Cert::Undecided, {}, {}};
  return {Cert::True, {}, {}};
}

ClosureResult closure(const RootSet& s) {
  const RootSlice& slice = s.slice();
  const CartanDatum& cd = slice.cartan();
  ClosureResult res{RootSet(slice), false};
  RootSet& acc = res.set;
  std::deque<IntVec> work;
  for (const IntVec& v : s.members()) {
    acc.insert_checked(v);
    work.push_back(v);
  }
  auto offer = [&](const IntVec& v) {
    RootClass c = slice.classify(v);
    if (c == RootClass::Unknown) {
      res.truncated = true;
      return;
    }
    if (c == RootClass::NotARoot) return;
    if (!acc.contains(v)) {
      acc.insert_checked(v);
      work.push_back(v);
    }
  };
  while (!work.empty()) {
    IntVec x = work.front();
    work.pop_front();
    bool x_real = slice.classify(x) == RootClass::Real;
    for (const IntVec& y : RootVecSet(acc.members())) {
      offer(x + y);
      if (x_real) {
        IntVec img = cd.reflect(x, y);
        if (!slice.in_bound(img))
          res.truncated = true;
        else
          offer(img);
      }
      if (slice.classify(y) == RootClass::Real) {
        IntVec img = cd.reflect(y, x);
        if (!slice.in_bound(img))
          res.truncated = true;
        else
          offer(img);
      }
    }
  }
  return res;
}

CertResult is_real_closed(const RootSet& psi) {
  if (!psi.all_real()) throw KmError("is_real_closed: psi must consist of real roots");
  const RootSlice& slice = psi.slice();
  bool truncated = false;
  for (const IntVec& a : psi.members()) {
    for (const IntVec& b : psi.members()) {
      IntVec sum = a + b;
      if (is_zero(sum)) continue;
      RootClass c = slice.classify(sum);
      if (c == RootClass::Unknown) {
        truncated = true;
        continue;
      }
      if (c == RootClass::Real && !psi.contains(sum)) return {Cert::False, a, b};
    }
  }
  if (truncated) return {Cert::Undecided, {}, {}};
  return {Cert::True, {}, {}};
}

MinimalityReport minimal_elements(const RootSet& psi) {
  const RootSlice& slice = psi.slice();
  const CartanDatum& cd = slice.cartan();
  MinimalityReport rep;
  std::vector<IntVec> pos = psi.positive_members();
  for (const IntVec& beta : pos) {
    if (slice.classify(beta) != RootClass::Real) {
      rep.certified_nonminimal.push_back(beta);
      continue;
    }
    bool nonminimal = false, doubt = false;
    for (const IntVec& gamma : pos) {
      if (vec_eq(gamma, beta)) continue;
      IntVec img = cd.reflect(beta, gamma);
      Sign sg = vec_sign(img);
      if (sg != Sign::Positive) {
        nonminimal = true;
        break;
      }
      // positivity settles the stabilization condition; an in-slice image
      // missing from psi means the given set is not reflection-closed here
      if (slice.in_bound(img) && !psi.contains(img)) doubt = true;
    }
    if (nonminimal)
      rep.certified_nonminimal.push_back(beta);
    else if (doubt)
      rep.undecided.push_back(beta);
    else
      rep.certified_minimal.push_back(beta);
  }
  return rep;
}

PiCheckResult pi_system_check(const std::vector<IntVec>& sigma, const RootSlice& slice) {
  PiCheckResult res{PiCheckResult::Status::Certified, {}, {}, {}};
  bool undecided = false;
  for (size_t i = 0; i < sigma.size(); ++i) {
    for (size_t j = i + 1; j < sigma.size(); ++j) {
      IntVec diff = sigma[i] - sigma[j];
      RootClass c = slice.classify(diff);
      if (c == RootClass::Unknown) {
        undecided = true;
        continue;
      }
      if (c != RootClass::NotARoot) {
        res.status = PiCheckResult::Status::Refuted;
        res.witness_a = sigma[i];
        res.witness_b = sigma[j];
        res.witness_diff = diff;
        return res;
      }
    }
  }
  if (undecided) res.status = PiCheckResult::Status::Undecided;
  return res;
}

std::pair<PiSystem, PiCheckResult> make_pi_system(const std::vector<IntVec>& sigma,
                                                  const RootSlice& slice) {
  PiSystem ps;
  RootVecSet seen;
  for (const IntVec& g : sigma) {
    if (vec_sign(g) != Sign::Positive) throw KmError("pi-system generators must be positive");
    if (slice.classify(g) != RootClass::Real)
      throw KmError("pi-system generator " + to_string(g) + " is not a real root of the slice");
    if (!seen.insert(g).second) throw KmError("pi-system generators must be distinct");
    ps.gens.push_back(g);  // caller order is kept
  }
  return {ps, pi_system_check(ps.gens, slice)};
}

OrbitResult orbit(const PiSystem& sigma, const RootSlice& slice) {
  const CartanDatum& cd = slice.cartan();
  OrbitResult res{RootSet(slice), false};
  std::deque<IntVec> work;
  for (const IntVec& g : sigma.gens) {
    for (const IntVec& v : {IntVec(g), IntVec(-g)}) {
      if (!res.set.contains(v)) {
        res.set.insert_checked(v);
        work.push_back(v);
      }
    }
  }
  auto offer = [&](const IntVec& v) {
    if (!slice.in_bound(v)) {
      res.truncated = true;
      return;
    }
    if (!res.set.contains(v)) {
      res.set.insert_checked(v);
      work.push_back(v);
    }
  };
  while (!work.empty()) {
    IntVec x = work.front();
    work.pop_front();
    for (const IntVec& y : RootVecSet(res.set.members())) {
      offer(cd.reflect(x, y));
      offer(cd.reflect(y, x));
    }
  }
  return res;
}

InducedGcm b_sigma(const PiSystem& sigma, const CartanDatum& cd) {
  const Index m = static_cast<Index>(sigma.gens.size());
  IntMat b(m, m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) b(i, j) = cd.pairing(sigma.gens[j], sigma.gens[i]);
  return InducedGcm{Gcm::validate(b), sigma.gens};
}

namespace {

bool decompose_nonneg(const std::vector<IntVec>& gens, const IntVec& target, size_t idx,
                      IntVec& coeffs) {
  if (idx == gens.size()) return is_zero(target);
  if (!all_nonneg(target)) return false;
  // bound the coefficient by the tightest coordinate ratio
  Int bound = -1;
  const IntVec& g = gens[idx];
  for (Index i = 0; i < g.size(); ++i) {
    if (g[i] > 0) {
      Int b = target[i] / g[i];
      if (bound < 0 || b < bound) bound = b;
    }
  }
  if (bound < 0) bound = 0;
  for (Int c = bound; c >= 0; --c) {
    coeffs[static_cast<Index>(idx)] = c;
    if (decompose_nonneg(gens, IntVec(target - c * g), idx + 1, coeffs)) return true;
  }
  return false;
}

}  // namespace

std::optional<IntVec> combo_decompose(const PiSystem& sigma, const IntVec& beta) {
  const Index m = static_cast<Index>(sigma.gens.size());
  IntVec coeffs = IntVec::Zero(m);
  Sign sg = vec_sign(beta);
  if (sg == Sign::Zero) return coeffs;
  IntVec target = (sg == Sign::Negative) ? IntVec(-beta) : beta;
  if (vec_sign(target) != Sign::Positive) return std::nullopt;  // mixed signs
  if (!decompose_nonneg(sigma.gens, target, 0, coeffs)) return std::nullopt;
  if (sg == Sign::Negative) coeffs = -coeffs;
  return coeffs;
}

IntMat combo_kernel(const PiSystem& sigma) {
  if (sigma.gens.empty()) return IntMat(0, 0);
  const Index n = sigma.gens.front().size();
  const Index m = static_cast<Index>(sigma.gens.size());
  IntMat mat(n, m);
  for (Index j = 0; j < m; ++j) mat.col(j) = sigma.gens[static_cast<size_t>(j)];
  return integer_kernel(mat);
}

namespace {

// Enumerate inclusion-maximal-first candidate generator subsets as cliques
// of the pairwise pi-compatibility graph, invoking `emit` on each clique of
// size >= 1 and <= cap.
void cliques(const std::vector<std::vector<bool>>& compat, size_t cap,
             const std::function<void(const std::vector<size_t>&)>& emit) {
  const size_t n = compat.size();
  std::vector<size_t> cur;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (!cur.empty()) emit(cur);
    if (cur.size() == cap) return;
    for (size_t i = start; i < n; ++i) {
      bool ok = true;
      for (size_t j : cur)
        if (!compat[j][i]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

}  // namespace

BijectionReport verify_bijection(const RootSet& psi, std::size_t max_gens) {
  const RootSlice& slice = psi.slice();
  BijectionReport rep;
  rep.minimality = minimal_elements(psi);
  rep.pi = rep.minimality.certified_minimal;
  bool undecided = !rep.minimality.undecided.empty();

  rep.pi_check = pi_system_check(rep.pi, slice);

  // round trip: orbit(Pi) within the slice must reproduce psi
  if (!rep.pi.empty()) {
    PiSystem ps{rep.pi};
    OrbitResult orb = orbit(ps, slice);
    rep.orbit_truncated = orb.truncated;
    rep.roundtrip_equal = orb.set.members() == psi.members();
  } else {
    rep.roundtrip_equal = psi.members().empty();
  }

  // uniqueness probe: search positive pi-systems of Delta inside psi whose
  // orbit covers psi within the slice
  std::vector<IntVec> pos;
  for (const IntVec& v : psi.positive_members())
    if (slice.classify(v) == RootClass::Real) pos.push_back(v);
  const size_t n = pos.size();
  std::vector<std::vector<bool>> compat(n, std::vector<bool>(n, false));
  bool probe_undecided = false;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      RootClass c = slice.classify(IntVec(pos[i] - pos[j]));
      if (c == RootClass::Unknown) probe_undecided = true;
      compat[i][j] = compat[j][i] = (c == RootClass::NotARoot);
    }
  }
  cliques(compat, max_gens, [&](const std::vector<size_t>& idx) {
    PiSystem cand;
    for (size_t i : idx) cand.gens.push_back(pos[i]);
    OrbitResult orb = orbit(cand, slice);
    bool covers = true;
    for (const IntVec& v : psi.members())
      if (!orb.set.contains(v)) {
        covers = false;
        break;
      }
    if (covers) rep.generating_pi_systems.push_back(cand.gens);
  });
  if (probe_undecided) rep.notes.push_back("probe compatibility graph has undecided edges");

  bool unique_ok = rep.generating_pi_systems.size() == 1 &&
                   rep.generating_pi_systems.front() == rep.pi;
  if (rep.generating_pi_systems.empty())
    rep.notes.push_back("no positive pi-system generates this set within the slice");

  bool pass = rep.pi_check.status == PiCheckResult::Status::Certified && rep.roundtrip_equal &&
              unique_ok && rep.minimality.undecided.empty();
  bool definite_fail = rep.pi_check.status == PiCheckResult::Status::Refuted ||
                       (!rep.roundtrip_equal && !rep.orbit_truncated) ||
                       rep.generating_pi_systems.size() > 1;
  rep.status = pass ? "pass" : (definite_fail ? "fail" : (undecided || probe_undecided ? "undecided" : "fail"));
  return rep;
}

}  // namespace kmroots
