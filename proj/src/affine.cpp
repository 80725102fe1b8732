#include "kmroots/affine.hpp"

#include <algorithm>
#include <numeric>

namespace kmroots {

std::string to_string(const AffineRoot& r) {
  std::ostringstream os;
  os << to_string(r.fin) << (r.level >= 0 ? "+" : "") << r.level << "d";
  return os.str();
}

ZLinearFn ZLinearFn::zero(const FiniteRootSystem& fr, const RootIdSet& component) {
  std::vector<Index> base = simple_system(fr, component);
  return on_base(fr, component, base, std::vector<Int>(base.size(), Int(0)));
}

ZLinearFn ZLinearFn::on_base(const FiniteRootSystem& fr, const RootIdSet& component,
                             const std::vector<Index>& base, const std::vector<Int>& values) {
  if (base.size() != values.size()) throw ValidationError("f base and values differ in length");
  {
    std::vector<Index> canon = simple_system(fr, component);
    std::set<Index> canon_set(canon.begin(), canon.end());
    std::set<Index> base_set(base.begin(), base.end());
    if (canon_set != base_set)
      throw ValidationError("f base is not the simple system of its component");
  }
  ZLinearFn f;
  f.base_ = base;
  f.values_ = values;
  const Index n = fr.rank();
  const Index m = static_cast<Index>(base.size());
  RatMat basemat(n, m);
  for (Index j = 0; j < m; ++j)
    for (Index i = 0; i < n; ++i) basemat(i, j) = Rat(fr.root(base[j])[i]);
  if (rank(basemat) != m) throw ValidationError("f base is not linearly independent");
  for (Index id : component) {
    RatVec b(n);
    for (Index i = 0; i < n; ++i) b[i] = Rat(fr.root(id)[i]);
    auto sol = solve(basemat, b);
    if (!sol) throw ValidationError("component root outside the span of the f base");
    Rat val = 0;
    for (Index j = 0; j < m; ++j) val += (*sol)[j] * Rat(values[j]);
    if (val.get_den() != 1)
      throw ValidationError("f is not integral on " + to_string(fr.root(id)));
    f.all_[id] = val.get_num();
  }
  return f;
}

Int ZLinearFn::operator()(Index root_id) const {
  auto it = all_.find(root_id);
  if (it == all_.end()) throw KmError("ZLinearFn: root not in this component");
  return it->second;
}

bool ZLinearFn::is_zero() const {
  for (const Int& v : values_)
    if (v != 0) return false;
  return true;
}

void ZLinearFn::reduce_mod(long k) {
  if (k <= 0) return;
  auto red = [&](Int& v) {
    v %= k;
    if (v < 0) v += k;
  };
  for (Int& v : values_) red(v);
  // entry-wise reduction is sound: with period k the values only ever
  // matter modulo k
  for (auto& [id, v] : all_) red(v);
}

namespace {

long mod_pos(const Int& v, long k) {
  Int r = v % k;
  if (r < 0) r += k;
  return r.get_si();
}

}  // namespace

PeriodicRootSet PeriodicRootSet::validate(const FiniteRootSystem& fr,
                                          std::vector<PeriodicComponent> comps) {
  PeriodicRootSet psi(fr);
  RootIdSet all;
  for (const auto& c : comps) {
    if (c.k < 0) throw ValidationError("component period k must be >= 0");
    if (c.roots.empty()) throw ValidationError("component must be nonempty");
    for (Index id : c.roots) {
      if (id < 0 || id >= fr.count()) throw ValidationError("component root id out of range");
      if (!c.roots.count(fr.neg(id)))
        throw ValidationError("component is not symmetric at " + to_string(fr.root(id)));
      if (!all.insert(id).second) throw ValidationError("components are not disjoint");
    }
  }
  if (!is_closed_subroot_system(fr, all))
    throw ValidationError("Psi0 is not a closed subroot system of the finite system");
  {
    std::vector<RootIdSet> irr = irreducible_components(fr, all);
    std::set<RootIdSet> given;
    for (const auto& c : comps) given.insert(c.roots);
    std::set<RootIdSet> computed(irr.begin(), irr.end());
    if (given != computed)
      throw ValidationError("given parts are not the irreducible components of Psi0");
  }
  // f integrality is established by ZLinearFn construction; certify the
  // represented set is real closed by residue arithmetic on all root pairs
  for (size_t i = 0; i < comps.size(); ++i) {
    for (size_t j = 0; j < comps.size(); ++j) {
      for (Index a : comps[i].roots) {
        for (Index b : comps[j].roots) {
          Index s = fr.sum(a, b);
          if (s < 0) continue;
          int l = -1;
          for (size_t t = 0; t < comps.size(); ++t)
            if (comps[t].roots.count(s)) l = static_cast<int>(t);
          if (l < 0) throw ValidationError("represented set is not real closed (sum escapes)");
          long ki = comps[i].k, kj = comps[j].k, kl = comps[l].k;
          Int fs = comps[i].f(a) + comps[j].f(b);
          long g = std::gcd(ki, kj);
          if (g == 0) {
            if (kl != 0 || comps[l].f(s) != fs)
              throw ValidationError("represented set is not real closed (level mismatch)");
          } else {
            if (kl == 0 || g % kl != 0 || mod_pos(Int(fs - comps[l].f(s)), kl) != 0)
              throw ValidationError("represented set is not real closed (residue mismatch)");
          }
        }
      }
    }
  }
  for (auto& c : comps) c.f.reduce_mod(c.k);
  std::sort(comps.begin(), comps.end(), [](const PeriodicComponent& a, const PeriodicComponent& b) {
    return *a.roots.begin() < *b.roots.begin();
  });
  psi.comps_ = std::move(comps);
  return psi;
}

int PeriodicRootSet::component_of(Index fin_id) const {
  for (size_t i = 0; i < comps_.size(); ++i)
    if (comps_[i].roots.count(fin_id)) return static_cast<int>(i);
  return -1;
}

RootIdSet PeriodicRootSet::finite_union() const {
  RootIdSet s;
  for (const auto& c : comps_) s.insert(c.roots.begin(), c.roots.end());
  return s;
}

bool PeriodicRootSet::membership(Index fin_id, long level) const {
  int ci = component_of(fin_id);
  if (ci < 0) return false;
  const PeriodicComponent& c = comps_[ci];
  Int f = c.f(fin_id);
  if (c.k == 0) return f == level;
  return mod_pos(Int(Int(level) - f), c.k) == 0;
}

bool PeriodicRootSet::membership(const AffineRoot& r) const {
  if (is_zero(r.fin)) return false;
  Index id = fr_->index_of(r.fin);
  if (id < 0) return false;
  return membership(id, r.level);
}

std::vector<AffineRoot> pi_exact(const PeriodicRootSet& psi) {
  const FiniteRootSystem& fr = psi.finite();
  const auto& comps = psi.components();
  struct Cand {
    Index a;
    long m;
  };
  std::vector<Cand> cands;
  for (const auto& c : comps) {
    for (Index a : c.roots) {
      bool pos = fr.is_positive(a);
      long m;
      if (c.k == 0) {
        Int f = c.f(a);
        if (f < 0 || (f == 0 && !pos)) continue;  // no positive root over a
        m = f.get_si();
      } else {
        m = mod_pos(c.f(a), c.k);
        if (m == 0 && !pos) m = c.k;
      }
      cands.push_back({a, m});
    }
  }
  std::vector<AffineRoot> out;
  for (const Cand& cand : cands) {
    bool minimal = true;
    for (const auto& cj : comps) {
      for (Index b : cj.roots) {
        long c = fr.pairing(b, cand.a);
        if (c <= 0) continue;
        long upper = c * cand.m;
        long lower = fr.is_positive(b) ? 0 : 1;
        auto check = [&](long m2) {
          if (b == cand.a && m2 == cand.m) return;  // gamma == candidate
          long lam = m2 - c * cand.m;
          if (lam < 0) {
            minimal = false;
            return;
          }
          if (lam == 0 && !fr.is_positive(fr.reflect(cand.a, b))) minimal = false;
        };
        if (cj.k == 0) {
          Int f = cj.f(b);
          if (f >= lower && f <= upper) check(f.get_si());
        } else {
          long r = mod_pos(cj.f(b), cj.k);
          long first = lower + ((r - lower) % cj.k + cj.k) % cj.k;
          for (long m2 = first; m2 <= upper && minimal; m2 += cj.k) check(m2);
        }
        if (!minimal) break;
      }
      if (!minimal) break;
    }
    if (minimal) {
      AffineRoot r;
      r.fin = fr.root(cand.a);
      r.level = cand.m;
      out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end(), [&](const AffineRoot& x, const AffineRoot& y) {
    if (x.level != y.level) return x.level < y.level;
    return HtLexLess{}(x.fin, y.fin);
  });
  return out;
}

namespace {

bool is_prime(long k) {
  if (k < 2) return false;
  for (long d = 2; d * d <= k; ++d)
    if (k % d == 0) return false;
  return true;
}

void require_irreducible(const FiniteRootSystem& fr) {
  if (fr.gcm_components().size() != 1)
    throw KmError("operation requires an irreducible finite root system");
}

}  // namespace

MaximalRealClosed maximal_real_closed(const FiniteRootSystem& fr, const Case1& c) {
  require_irreducible(fr);
  if (!is_prime(c.k)) throw NotPrimeError(c.k);
  PeriodicComponent comp;
  comp.roots = fr.all_ids();
  comp.k = c.k;
  comp.f = c.f;
  return {PeriodicRootSet::validate(fr, {comp}), Gradient::Full};
}

MaximalRealClosed maximal_real_closed(const FiniteRootSystem& fr, const Case2& c) {
  require_irreducible(fr);
  if (!is_maximal_closed(fr, c.psi0))
    throw ValidationError("psi0 is not a maximal closed subroot system");
  std::vector<PeriodicComponent> comps;
  for (const RootIdSet& part : irreducible_components(fr, c.psi0)) {
    PeriodicComponent comp;
    comp.roots = part;
    comp.k = 1;
    comp.f = ZLinearFn::zero(fr, part);
    comps.push_back(std::move(comp));
  }
  return {PeriodicRootSet::validate(fr, std::move(comps)), Gradient::Proper};
}

PeriodicIntSet PeriodicIntSet::make(long modulus, std::set<long> residues, std::set<long> add,
                                    std::set<long> remove) {
  if (modulus < 1) throw ValidationError("Lambda modulus must be >= 1");
  PeriodicIntSet s;
  s.modulus_ = modulus;
  for (long r : residues) s.residues_.insert(((r % modulus) + modulus) % modulus);
  for (long r : s.residues_)
    if (!s.residues_.count((modulus - r) % modulus))
      throw ValidationError("Lambda is not symmetric (residues)");
  for (long x : add)
    if (!add.count(-x)) throw ValidationError("Lambda is not symmetric (add)");
  for (long x : remove)
    if (!remove.count(-x)) throw ValidationError("Lambda is not symmetric (remove)");
  for (long x : add)
    if (remove.count(x)) throw ValidationError("Lambda add and remove overlap");
  auto in_core = [&](long x) { return s.residues_.count(((x % modulus) + modulus) % modulus) != 0; };
  for (long x : add)
    if (!in_core(x)) s.add_.insert(x);
  for (long x : remove)
    if (in_core(x)) s.remove_.insert(x);
  if (s.contains(0)) throw ValidationError("Lambda must exclude 0");
  return s;
}

bool PeriodicIntSet::contains(long x) const {
  if (remove_.count(x)) return false;
  if (add_.count(x)) return true;
  return residues_.count(((x % modulus_) + modulus_) % modulus_) != 0;
}

bool PeriodicIntSet::is_empty() const { return residues_.empty() && add_.empty(); }

long PeriodicIntSet::exception_radius() const {
  long r = 0;
  for (long x : add_) r = std::max(r, std::labs(x));
  for (long x : remove_) r = std::max(r, std::labs(x));
  return r;
}

bool PeriodicIntSet::meets_multiples_of(long k) const {
  if (k <= 0) throw KmError("meets_multiples_of: k must be positive");
  for (long x : add_)
    if (x % k == 0) return true;
  if (residues_.empty()) return false;
  // common members of the periodic core and kZ recur with period
  // lcm(modulus, k); one full period past the remove radius decides
  long period = std::lcm(modulus_, k);
  long radius = exception_radius();
  for (long x = k; x <= radius + period; x += k)
    if (contains(x)) return true;
  return false;
}

SymRegTuple SymRegTuple::validate(PeriodicRootSet psi, PeriodicIntSet lambda,
                                  std::map<long, Subspace> v_by_residue) {
  const FiniteRootSystem& fr = psi.finite();
  const Index n = fr.rank();
  SymRegTuple t(std::move(psi), std::move(lambda));
  long L = t.lambda_.modulus();
  for (const auto& c : t.psi_.components())
    if (c.k > 0) L = std::lcm(L, c.k);
  t.L_ = L;

  for (const auto& c : t.psi_.components())
    if (c.k > 0 && t.lambda_.meets_multiples_of(c.k))
      throw ValidationError("Lambda meets k_i Z");

  // component Cartan spans
  std::vector<Subspace> h_spans;
  for (const auto& c : t.psi_.components()) {
    RatMat rows(static_cast<Index>(c.roots.size()), n);
    Index r = 0;
    for (Index id : c.roots) rows.row(r++) = fr.coroot(id).transpose();
    h_spans.emplace_back(n, rows);
  }

  std::map<long, Subspace> v;
  for (auto& [raw_r, sub] : v_by_residue) {
    if (sub.ambient_dim() != n && !sub.is_zero())
      throw ValidationError("V subspace has wrong ambient dimension");
    long r = ((raw_r % L) + L) % L;
    auto [it, fresh] = v.emplace(r, sub);
    if (!fresh && !(it->second == sub))
      throw ValidationError("conflicting V entries for one residue class");
  }

  const auto& comps = t.psi_.components();
  for (auto it = v.begin(); it != v.end();) {
    long r = it->first;
    const Subspace& sub = it->second;
    if (sub.is_zero() || sub.dim() == 0) {
      it = v.erase(it);
      continue;
    }
    // does the class r contain nonzero levels of I(k, Lambda)?
    bool in_k_union = false;
    for (const auto& c : comps)
      if (c.k > 0 && r % c.k == 0) in_k_union = true;
    bool in_lambda = false;
    if (!in_k_union) {
      if (t.lambda_.residues().count(r % t.lambda_.modulus())) in_lambda = true;
      for (long x : t.lambda_.added())
        if (((x % L) + L) % L == r) in_lambda = true;
    }
    if (in_k_union || in_lambda) {
      // conditions for x != 0 in this class
      for (size_t i = 0; i < comps.size(); ++i) {
        bool covers = comps[i].k > 0 && r % comps[i].k == 0;
        if (!covers) {
          Subspace perp = h_spans[i].orthogonal_complement(fr.cartan().coroot_gram());
          if (!perp.contains(sub))
            throw ValidationError("V_x is not orthogonal to h(Psi0_i) for x outside k_i Z");
        }
      }
      Subspace covered(n);
      for (size_t i = 0; i < comps.size(); ++i)
        if (comps[i].k > 0 && r % comps[i].k == 0) covered = covered.sum(h_spans[i]);
      if (sub.intersect(covered).dim() > 0)
        throw ValidationError("V_x meets the covered Cartan sum for x in k_i Z");
    }
    if (r == 0) {
      Subspace covered0(n);
      for (const auto& hs : h_spans) covered0 = covered0.sum(hs);
      if (sub.intersect(covered0).dim() > 0)
        throw ValidationError("V_0 meets the Cartan span of Psi0");
    }
    if (!in_k_union && !in_lambda && r != 0) {
      it = v.erase(it);  // never applies; canonical form drops it
      continue;
    }
    ++it;
  }
  t.v_ = std::move(v);
  return t;
}

Subspace SymRegTuple::v_at(long x) const {
  if (!level_in_index_set(x)) return Subspace(psi_.finite().rank());
  auto it = v_.find(((x % L_) + L_) % L_);
  if (it == v_.end()) return Subspace(psi_.finite().rank());
  return it->second;
}

bool SymRegTuple::level_in_index_set(long x) const {
  for (const auto& c : psi_.components()) {
    if (c.k == 0 && x == 0) return true;
    if (c.k > 0 && x % c.k == 0) return true;
  }
  if (x == 0) return true;  // 0 lies in every k_i Z, including 0 Z
  return lambda_.contains(x);
}

Subspace SymRegTuple::cartan_at(long x) const {
  const FiniteRootSystem& fr = psi_.finite();
  Subspace acc(fr.rank());
  for (const auto& c : psi_.components()) {
    bool covers = (c.k == 0) ? (x == 0) : (x % c.k == 0);
    if (!covers) continue;
    RatMat rows(static_cast<Index>(c.roots.size()), fr.rank());
    Index r = 0;
    for (Index id : c.roots) rows.row(r++) = fr.coroot(id).transpose();
    acc = acc.sum(Subspace(fr.rank(), rows));
  }
  return acc.sum(v_at(x));
}

bool SymRegTuple::has_central() const {
  for (const auto& c : psi_.components()) {
    if (c.k > 0) return true;
    for (Index id : c.roots)
      if (c.f(id) != 0) return true;
  }
  // opposite Cartan levels pairing nontrivially force the central element:
  // [v (x) t^x, w (x) t^-x] = x (v, w) c
  const RatMat& g = psi_.finite().cartan().coroot_gram();
  for (long x = 1; x <= compare_window(); ++x) {
    Subspace up = cartan_at(x), down = cartan_at(-x);
    if (up.dim() == 0 || down.dim() == 0) continue;
    RatMat m = up.basis() * g * down.basis().transpose();
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j)
        if (m(i, j) != 0) return true;
  }
  return false;
}

bool SymRegTuple::imaginary_level(long x) const {
  return x != 0 && cartan_at(x).dim() > 0;
}

long SymRegTuple::compare_window() const { return L_ + lambda_.exception_radius(); }

bool SymRegTuple::operator==(const SymRegTuple& other) const {
  return tuple_leq(*this, other) && tuple_leq(other, *this);
}

TupleRoots tuple_roots(const SymRegTuple& t, long band) {
  TupleRoots out;
  for (const auto& c : t.psi().components())
    for (Index id : c.roots)
      for (long m = -band; m <= band; ++m)
        if (t.psi().membership(id, m)) out.real.insert({id, m});
  for (long x = -band; x <= band; ++x)
    if (t.imaginary_level(x)) out.imaginary_levels.insert(x);
  out.has_central = t.has_central();
  return out;
}

bool tuple_leq(const SymRegTuple& a, const SymRegTuple& b) {
  const FiniteRootSystem& fr = a.psi().finite();
  if (!(fr.cartan() == b.psi().finite().cartan())) throw KmError("tuple_leq: mismatched systems");
  // real parts: residue containment per finite root
  for (const auto& ca : a.psi().components()) {
    for (Index id : ca.roots) {
      int cj = b.psi().component_of(id);
      if (cj < 0) return false;
      const PeriodicComponent& cb = b.psi().components()[cj];
      Int fa = ca.f(id), fb = cb.f(id);
      if (cb.k == 0) {
        if (ca.k != 0 || fa != fb) return false;
      } else {
        if (ca.k > 0 && ca.k % cb.k != 0) return false;
        if (mod_pos(Int(fa - fb), cb.k) != 0) return false;
      }
    }
  }
  // Cartan layers over one combined period beyond all exceptions
  long P = std::lcm(a.level_modulus(), b.level_modulus());
  long E = std::max(a.lambda().exception_radius(), b.lambda().exception_radius());
  for (long x = -(P + E); x <= P + E; ++x) {
    Subspace ca = a.cartan_at(x);
    if (ca.dim() == 0) continue;
    if (!b.cartan_at(x).contains(ca)) return false;
  }
  if (a.has_central() && !b.has_central()) return false;
  return true;
}

namespace {

bool is_derived_datum(const SymRegTuple& t) {
  const FiniteRootSystem& fr = t.psi().finite();
  if (static_cast<Index>(t.psi().finite_union().size()) != fr.count()) return false;
  for (const auto& c : t.psi().components())
    if (c.k != 1) return false;
  return true;
}

}  // namespace

MaximalVerdict is_maximal_tuple(const SymRegTuple& t, bool with_d) {
  const FiniteRootSystem& fr = t.psi().finite();
  require_irreducible(fr);
  bool derived = is_derived_datum(t);
  if (!with_d) {
    if (derived) return {true, "derived-algebra", "the derived algebra itself"};
    return {false, "", "properly contained in the derived algebra"};
  }
  if (derived) throw NotProperError("tuple with d adjoined is the whole algebra");

  const RootIdSet uni = t.psi().finite_union();
  bool full_finite = static_cast<Index>(uni.size()) == fr.count();
  long W = t.compare_window();

  if (!full_finite && !uni.empty()) {
    bool all_k1 = true;
    for (const auto& c : t.psi().components()) all_k1 = all_k1 && c.k == 1;
    if (all_k1 && is_maximal_closed(fr, uni)) {
      bool cartan_full = true;
      for (long x = -W; x <= W && cartan_full; ++x)
        cartan_full = t.cartan_at(x).dim() == fr.rank();
      if (cartan_full)
        return {true, "proper-gradient",
                "maximal closed finite part with every imaginary level full"};
    }
  }
  if (full_finite && t.psi().components().size() == 1) {
    long k = t.psi().components().front().k;
    if (is_prime(k)) {
      bool clean = true;
      for (long x = -W; x <= W && clean; ++x)
        if (x % k != 0) clean = t.cartan_at(x).dim() == 0;
      if (clean) return {true, "full-gradient", "full finite part with prime period"};
    }
  }
  SymRegTuple env = maximal_envelope(t);
  std::string why = is_derived_datum(env)
                        ? "only the derived algebra lies above"
                        : "strictly below a maximal tuple of shape " +
                              is_maximal_tuple(env, true).shape;
  return {false, "", why};
}

SymRegTuple derived_algebra_tuple(const FiniteRootSystem& fr) {
  require_irreducible(fr);
  PeriodicComponent c;
  c.roots = fr.all_ids();
  c.k = 1;
  c.f = ZLinearFn::zero(fr, c.roots);
  return SymRegTuple::validate(PeriodicRootSet::validate(fr, {c}), PeriodicIntSet::empty(), {});
}

SymRegTuple proper_gradient_tuple(const FiniteRootSystem& fr, const RootIdSet& psi0) {
  require_irreducible(fr);
  std::vector<PeriodicComponent> comps;
  RatMat rows(static_cast<Index>(psi0.size()), fr.rank());
  Index r = 0;
  for (Index id : psi0) rows.row(r++) = fr.coroot(id).transpose();
  Subspace h_psi(fr.rank(), rows);
  for (const RootIdSet& part : irreducible_components(fr, psi0)) {
    PeriodicComponent c;
    c.roots = part;
    c.k = 1;
    c.f = ZLinearFn::zero(fr, part);
    comps.push_back(std::move(c));
  }
  std::map<long, Subspace> v;
  Subspace perp = h_psi.orthogonal_complement(fr.cartan().coroot_gram());
  if (perp.dim() > 0) v.emplace(0, perp);
  return SymRegTuple::validate(PeriodicRootSet::validate(fr, std::move(comps)),
                               PeriodicIntSet::empty(), std::move(v));
}

SymRegTuple full_gradient_tuple(const FiniteRootSystem& fr, long k, const ZLinearFn& f) {
  require_irreducible(fr);
  if (!is_prime(k)) throw NotPrimeError(k);
  PeriodicComponent c;
  c.roots = fr.all_ids();
  c.k = k;
  c.f = f;
  return SymRegTuple::validate(PeriodicRootSet::validate(fr, {c}), PeriodicIntSet::empty(), {});
}

SymRegTuple maximal_envelope(const SymRegTuple& t) {
  const FiniteRootSystem& fr = t.psi().finite();
  require_irreducible(fr);
  if (is_derived_datum(t)) return t;
  RootIdSet uni = t.psi().finite_union();
  if (static_cast<Index>(uni.size()) < fr.count() && !uni.empty()) {
    while (!is_maximal_closed(fr, uni)) {
      bool grew = false;
      for (Index g = 0; g < fr.count() && !grew; ++g) {
        if (uni.count(g)) continue;
        RootIdSet ext = uni;
        ext.insert(g);
        ext.insert(fr.neg(g));
        RootIdSet cl = finite_closure(fr, ext);
        if (static_cast<Index>(cl.size()) < fr.count()) {
          uni = cl;
          grew = true;
        }
      }
      if (!grew) break;  // every extension closes to the full system
    }
    if (static_cast<Index>(uni.size()) < fr.count()) return proper_gradient_tuple(fr, uni);
    return derived_algebra_tuple(fr);
  }
  if (uni.empty()) {
    // no real roots: any proper-gradient tuple over a maximal closed set
    // dominates every Cartan-only tuple with full imaginary levels; fall
    // back to a proper gradient over the first maximal closed subsystem
    auto maxima = maximal_closed(fr);
    if (!maxima.empty()) return proper_gradient_tuple(fr, maxima.front());
    return derived_algebra_tuple(fr);
  }
  // full finite part
  long k1 = t.psi().components().front().k;
  const ZLinearFn& f = t.psi().components().front().f;
  if (k1 == 0) return full_gradient_tuple(fr, 2, f);
  if (is_prime(k1)) return t;
  if (k1 == 1) return derived_algebra_tuple(fr);
  long p = 2;
  while (k1 % p != 0) ++p;
  return full_gradient_tuple(fr, p, f);
}

}  // namespace kmroots
