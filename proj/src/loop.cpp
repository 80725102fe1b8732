#include "kmroots/loop.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace kmroots {

ChevalleyBasis ChevalleyBasis::build(const FiniteRootSystem& fr) {
  ChevalleyBasis cb(fr);
  const Index count = fr.count();
  const Index np = fr.num_positive();
  for (Index i = 0; i < fr.rank(); ++i) {
    Index id = fr.index_of(unit_vec(fr.rank(), i));
    cb.simple_ids_.push_back(id);
  }

  IntMat n = IntMat::Zero(count, count);
  std::vector<std::vector<char>> have(count, std::vector<char>(count, 0));
  auto set_pair = [&](Index a, Index b, const Int& v) {
    n(a, b) = v;
    n(b, a) = -v;
    have[a][b] = have[b][a] = 1;
  };

  // recursive lookup: positive pairs must already be tabulated; mixed and
  // negative pairs reduce to positive pairs of smaller height sums
  std::function<Int(Index, Index)> get = [&](Index i, Index j) -> Int {
    Index s = fr.sum(i, j);
    if (s < 0) return 0;
    if (have[i][j]) return n(i, j);
    Int v;
    const bool ipos = fr.is_positive(i), jpos = fr.is_positive(j);
    if (ipos && jpos) throw KmError("chevalley: positive pair out of order (internal)");
    if (!ipos && !jpos) {
      v = -get(fr.neg(i), fr.neg(j));
    } else if (!ipos && jpos) {
      v = -get(j, i);
      n(i, j) = v;
      have[i][j] = 1;
      return v;
    } else {
      // i positive, j negative: N(mu, -nu)
      Index mu = i, nu = fr.neg(j);
      if (fr.is_positive(s)) {
        // sigma = mu - nu > 0; N(mu,-nu) = N(sigma, nu) (sigma,sigma)/(mu,mu)
        Rat val = Rat(get(s, nu)) * fr.norm(s) / fr.norm(mu);
        if (val.get_den() != 1) throw KmError("chevalley: non-integral constant (internal)");
        v = val.get_num();
      } else {
        // N(mu,-nu) = N(nu,-mu), and nu - mu > 0
        v = get(nu, fr.neg(mu));
      }
    }
    set_pair(i, j, v);
    return v;
  };

  // positive pairs by increasing height of the sum; extraspecial pair of
  // each sum gets +(p+1), the rest follow from the Jacobi identity
  for (Index gamma = 0; gamma < np; ++gamma) {
    std::vector<std::pair<Index, Index>> special;
    for (Index a = 0; a < np; ++a)
      for (Index b = a + 1; b < np; ++b)
        if (fr.sum(a, b) == gamma) special.emplace_back(a, b);
    if (special.empty()) continue;
    auto [a1, b1] = special.front();  // minimal a: pairs are generated in id order
    set_pair(a1, b1, Int(fr.string_down(a1, b1) + 1));
    for (size_t t = 1; t < special.size(); ++t) {
      auto [a, b] = special[t];
      // Jacobi on (x_{a1}, x_{-a}, x_{-b}) against the extraspecial pair:
      // N(a,b) = -(g,g)/(N(a1,b1)(b1,b1)) * [N(-b,a1)N(-a,a1-b) + N(a1,-a)N(-b,a1-a)]
      Rat acc = 0;
      Int f1 = get(fr.neg(b), a1);
      if (f1 != 0) acc += Rat(f1) * Rat(get(fr.neg(a), fr.sum(fr.neg(b), a1)));
      Int f2 = get(a1, fr.neg(a));
      if (f2 != 0) acc += Rat(f2) * Rat(get(fr.neg(b), fr.sum(a1, fr.neg(a))));
      Rat val = -fr.norm(gamma) / (Rat(n(a1, b1)) * fr.norm(b1)) * acc;
      if (val.get_den() != 1) throw KmError("chevalley: non-integral constant (internal)");
      set_pair(a, b, val.get_num());
    }
  }
  // fill the remaining sign combinations
  for (Index i = 0; i < count; ++i)
    for (Index j = 0; j < count; ++j) get(i, j);

  cb.n_ = std::move(n);
  return cb;
}

Rat ChevalleyBasis::form_xx(Index a) const { return 2 / fr_->norm(a); }

std::string ChevalleyBasis::convention() const {
  return "extraspecial pairs positive w.r.t. (height, lex) root order; "
         "[x_a, x_-a] = a^vee; (x_a, x_-a) = 2/(a,a); (h_i, h_j) = coroot Gram";
}

LoopElement LoopElement::x(Index root_id, long r, Rat coef) {
  LoopElement e;
  e.add({LoopKey::Kind::X, root_id, r}, coef);
  return e;
}

LoopElement LoopElement::h(Index simple_i, long r, Rat coef) {
  LoopElement e;
  e.add({LoopKey::Kind::H, simple_i, r}, coef);
  return e;
}

LoopElement LoopElement::cartan(const RatVec& h, long r) {
  LoopElement e;
  for (Index i = 0; i < h.size(); ++i) e.add({LoopKey::Kind::H, i, r}, h[i]);
  return e;
}

LoopElement LoopElement::c(Rat coef) {
  LoopElement e;
  e.add({LoopKey::Kind::C, 0, 0}, coef);
  return e;
}

LoopElement LoopElement::d(Rat coef) {
  LoopElement e;
  e.add({LoopKey::Kind::D, 0, 0}, coef);
  return e;
}

void LoopElement::add(const LoopKey& k, const Rat& coef) {
  if (coef == 0) return;
  auto [it, fresh] = terms_.emplace(k, coef);
  if (!fresh) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

LoopElement& LoopElement::operator+=(const LoopElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

LoopElement LoopElement::operator*(const Rat& s) const {
  LoopElement e;
  if (s == 0) return e;
  for (const auto& [k, c] : terms_) e.terms_.emplace(k, c * s);
  return e;
}

std::string to_string(const LoopElement& e, const FiniteRootSystem& fr) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : e.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c << "*";
    switch (k.kind) {
      case LoopKey::Kind::X: os << "x" << to_string(fr.root(k.idx)) << "@t^" << k.r; break;
      case LoopKey::Kind::H: os << "h" << k.idx << "@t^" << k.r; break;
      case LoopKey::Kind::C: os << "c"; break;
      case LoopKey::Kind::D: os << "d"; break;
    }
  }
  return os.str();
}

namespace {

void key_bracket(const ChevalleyBasis& cb, const LoopKey& k1, const LoopKey& k2, const Rat& scale,
                 LoopElement& out) {
  using K = LoopKey::Kind;
  const FiniteRootSystem& fr = cb.finite();
  if (k1.kind == K::C || k2.kind == K::C) return;
  if (k1.kind == K::D && k2.kind == K::D) return;
  if (k1.kind == K::D) {
    out.add(k2, scale * Rat(k2.r));
    return;
  }
  if (k2.kind == K::D) {
    out.add(k1, -scale * Rat(k1.r));
    return;
  }
  if (k1.kind == K::H && k2.kind == K::H) {
    if (k1.r + k2.r == 0 && k1.r != 0)
      out.add({K::C, 0, 0}, scale * Rat(k1.r) * fr.cartan().coroot_gram()(k1.idx, k2.idx));
    return;
  }
  if (k1.kind == K::H && k2.kind == K::X) {
    long p = fr.pairing(k2.idx, cb.simple_id(k1.idx));
    if (p != 0) out.add({K::X, k2.idx, k1.r + k2.r}, scale * Rat(p));
    return;
  }
  if (k1.kind == K::X && k2.kind == K::H) {
    long p = fr.pairing(k1.idx, cb.simple_id(k2.idx));
    if (p != 0) out.add({K::X, k1.idx, k1.r + k2.r}, -scale * Rat(p));
    return;
  }
  // X, X
  if (k2.idx == fr.neg(k1.idx)) {
    const RatVec& co = fr.coroot(k1.idx);
    for (Index i = 0; i < co.size(); ++i)
      if (co[i] != 0) out.add({K::H, i, k1.r + k2.r}, scale * co[i]);
    if (k1.r + k2.r == 0 && k1.r != 0)
      out.add({K::C, 0, 0}, scale * Rat(k1.r) * cb.form_xx(k1.idx));
    return;
  }
  Index s = fr.sum(k1.idx, k2.idx);
  if (s >= 0) {
    const Int& nc = cb.n_constant(k1.idx, k2.idx);
    out.add({K::X, s, k1.r + k2.r}, scale * Rat(nc));
  }
}

}  // namespace

LoopElement bracket(const ChevalleyBasis& cb, const LoopElement& x, const LoopElement& y) {
  LoopElement out;
  for (const auto& [k1, c1] : x.terms())
    for (const auto& [k2, c2] : y.terms()) key_bracket(cb, k1, k2, c1 * c2, out);
  return out;
}

Rat loop_form(const ChevalleyBasis& cb, const LoopElement& x, const LoopElement& y) {
  using K = LoopKey::Kind;
  const FiniteRootSystem& fr = cb.finite();
  Rat acc = 0;
  for (const auto& [k1, c1] : x.terms()) {
    for (const auto& [k2, c2] : y.terms()) {
      if (k1.kind == K::X && k2.kind == K::X && k1.r + k2.r == 0 && k2.idx == fr.neg(k1.idx))
        acc += c1 * c2 * cb.form_xx(k1.idx);
      else if (k1.kind == K::H && k2.kind == K::H && k1.r + k2.r == 0)
        acc += c1 * c2 * fr.cartan().coroot_gram()(k1.idx, k2.idx);
      else if ((k1.kind == K::C && k2.kind == K::D) || (k1.kind == K::D && k2.kind == K::C))
        acc += c1 * c2;
    }
  }
  return acc;
}

std::map<GradedKey, LoopElement> graded_components(const LoopElement& e) {
  std::map<GradedKey, LoopElement> out;
  for (const auto& [k, c] : e.terms()) {
    GradedKey g;
    if (k.kind == LoopKey::Kind::X) {
      g = GradedKey{true, k.idx, k.r};
    } else {
      g = GradedKey{false, -1, k.kind == LoopKey::Kind::H ? k.r : 0};
    }
    out[g].add(k, c);
  }
  return out;
}

SubalgebraSlice::SubalgebraSlice(const FiniteRootSystem& fr, long band)
    : fr_(&fr), band_(band), rank_(fr.rank()) {}

Subspace SubalgebraSlice::cartan_at(long level) const {
  auto it = cartan_.find(level);
  return it == cartan_.end() ? Subspace(rank_ + 2) : it->second;
}

bool SubalgebraSlice::has_central() const {
  RatVec c = RatVec::Zero(rank_ + 2);
  c[rank_] = 1;
  return cartan_at(0).contains(c);
}

bool SubalgebraSlice::contains(const LoopElement& e) const {
  for (const auto& [g, comp] : graded_components(e)) {
    if (std::labs(g.level) > band_) return false;
    if (g.real) {
      if (!real_.count({g.root, g.level})) return false;
    } else {
      RatVec v = RatVec::Zero(rank_ + 2);
      for (const auto& [k, c] : comp.terms()) {
        if (k.kind == LoopKey::Kind::H)
          v[k.idx] = c;
        else if (k.kind == LoopKey::Kind::C)
          v[rank_] = c;
        else
          v[rank_ + 1] = c;
      }
      if (!cartan_at(g.level).contains(v)) return false;
    }
  }
  return true;
}

bool SubalgebraSlice::insert(const LoopElement& e) {
  bool changed = false;
  for (const auto& [g, comp] : graded_components(e)) {
    if (std::labs(g.level) > band_) continue;
    if (g.real) {
      changed |= real_.insert({g.root, g.level}).second;
    } else {
      RatVec v = RatVec::Zero(rank_ + 2);
      for (const auto& [k, c] : comp.terms()) {
        if (k.kind == LoopKey::Kind::H)
          v[k.idx] = c;
        else if (k.kind == LoopKey::Kind::C)
          v[rank_] = c;
        else
          v[rank_ + 1] = c;
      }
      Subspace cur = cartan_at(g.level);
      Subspace next = cur.sum(Subspace(rank_ + 2, RatMat(v.transpose())));
      if (next.dim() > cur.dim()) {
        cartan_[g.level] = next;
        changed = true;
      }
    }
  }
  return changed;
}

std::vector<LoopElement> SubalgebraSlice::basis_elements() const {
  std::vector<LoopElement> out;
  for (const auto& [key, level] : real_) out.push_back(LoopElement::x(key, level));
  for (const auto& [level, sub] : cartan_) {
    for (Index r = 0; r < sub.basis().rows(); ++r) {
      LoopElement e;
      for (Index i = 0; i < rank_; ++i)
        if (sub.basis()(r, i) != 0) e.add({LoopKey::Kind::H, i, level}, sub.basis()(r, i));
      if (sub.basis()(r, rank_) != 0) e.add({LoopKey::Kind::C, 0, 0}, sub.basis()(r, rank_));
      if (sub.basis()(r, rank_ + 1) != 0) e.add({LoopKey::Kind::D, 0, 0}, sub.basis()(r, rank_ + 1));
      out.push_back(e);
    }
  }
  return out;
}

SubalgebraSlice generate(const ChevalleyBasis& cb, const std::vector<LoopElement>& gens,
                         long band) {
  const FiniteRootSystem& fr = cb.finite();
  SubalgebraSlice s(fr, band);
  std::vector<LoopElement> elems;
  std::deque<size_t> work;
  auto offer = [&](const LoopElement& e) {
    for (const auto& [g, comp] : graded_components(e)) {
      if (std::labs(g.level) > band) {
        s.set_boundary_hit(true);
        continue;
      }
      if (s.insert(comp)) {
        elems.push_back(g.real ? LoopElement::x(g.root, g.level) : comp);
        work.push_back(elems.size() - 1);
      }
    }
  };
  for (const LoopElement& g : gens) {
    if (g.is_zero()) continue;
    if (graded_components(g).size() != 1)
      throw KmError("generate: generators must be ad-h homogeneous");
    if (std::labs(graded_components(g).begin()->first.level) > band)
      throw KmError("generate: generator degree exceeds the band");
    offer(g);
  }
  while (!work.empty()) {
    size_t i = work.front();
    work.pop_front();
    for (size_t j = 0; j < elems.size(); ++j) {
      LoopElement b = bracket(cb, elems[i], elems[j]);
      if (!b.is_zero()) offer(b);
      if (i != j) {
        // products of later elements against i are covered when j is popped
        if (j > i) continue;
        LoopElement b2 = bracket(cb, elems[j], elems[i]);
        if (!b2.is_zero()) offer(b2);
      }
    }
  }
  s.set_saturated(true);
  return s;
}

SupportReport root_support(const SubalgebraSlice& s) {
  SupportReport rep;
  rep.real = s.real_keys();
  for (const auto& [level, sub] : s.cartan_blocks()) {
    if (level == 0) continue;
    bool h_part = false;
    for (Index r = 0; r < sub.basis().rows() && !h_part; ++r)
      for (Index i = 0; i < s.rank() && !h_part; ++i)
        if (sub.basis()(r, i) != 0) h_part = true;
    if (h_part) rep.imaginary_levels.insert(level);
  }
  rep.has_central = s.has_central();
  rep.boundary_hit = s.boundary_hit();
  return rep;
}

std::vector<std::string> saturation_violations(const ChevalleyBasis& cb,
                                               const SubalgebraSlice& s) {
  std::vector<std::string> out;
  std::vector<LoopElement> elems = s.basis_elements();
  const FiniteRootSystem& fr = cb.finite();
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = i + 1; j < elems.size(); ++j) {
      LoopElement b = bracket(cb, elems[i], elems[j]);
      if (b.is_zero()) continue;
      bool in_band = true;
      for (const auto& [g, comp] : graded_components(b))
        if (std::labs(g.level) > s.band()) in_band = false;
      if (!in_band) continue;
      if (!s.contains(b))
        out.push_back("[" + to_string(elems[i], fr) + ", " + to_string(elems[j], fr) + "] = " +
                      to_string(b, fr) + " escapes the spans");
    }
  }
  return out;
}

RootGeneratedReport verify_root_generated(const ChevalleyBasis& cb, const PeriodicRootSet& psi,
                                          long band) {
  const FiniteRootSystem& fr = cb.finite();
  const Index rank = fr.rank();
  RootGeneratedReport rep;

  for (const auto& comp : psi.components()) {
    if (comp.k > band) rep.band_sufficient = false;
    if (comp.k == 0)
      for (Index id : comp.roots)
        if (abs(comp.f(id)) > band) rep.band_sufficient = false;
  }

  std::vector<LoopElement> gens;
  std::set<std::pair<Index, long>> expected_real;
  for (const auto& comp : psi.components())
    for (Index id : comp.roots)
      for (long m = -band; m <= band; ++m)
        if (psi.membership(id, m)) {
          gens.push_back(LoopElement::x(id, m));
          expected_real.insert({id, m});
        }
  SubalgebraSlice s = generate(cb, gens, band);

  if (s.real_keys() != expected_real) {
    for (const auto& [id, m] : s.real_keys())
      if (!expected_real.count({id, m}))
        rep.mismatches.push_back("unexpected real root " + to_string(fr.root(id)) + " at level " +
                                 std::to_string(m));
    for (const auto& [id, m] : expected_real)
      if (!s.real_keys().count({id, m}))
        rep.mismatches.push_back("missing real root " + to_string(fr.root(id)) + " at level " +
                                 std::to_string(m));
  }

  auto embed = [&](const RatVec& h, Rat cc) {
    RatVec v = RatVec::Zero(rank + 2);
    v.head(rank) = h;
    v[rank] = cc;
    return v;
  };

  // expected Cartan layers at x != 0: sum of h(Psi0_i) over k_i | x
  for (long x = -band; x <= band; ++x) {
    if (x == 0) continue;
    RatMat rows(0, rank + 2);
    for (const auto& comp : psi.components()) {
      if (comp.k <= 0 || x % comp.k != 0) continue;
      for (Index id : comp.roots) {
        rows.conservativeResize(rows.rows() + 1, rank + 2);
        rows.row(rows.rows() - 1) = embed(fr.coroot(id), 0).transpose();
      }
    }
    Subspace expect(rank + 2, rows);
    if (!(s.cartan_at(x) == expect))
      rep.mismatches.push_back("Cartan layer mismatch at level " + std::to_string(x));
  }

  // expected level-0 block: h_a with the central coordinate f(a)*(x_a,x_-a)
  // for k = 0 components, h_a and a separable central vector otherwise
  {
    RatMat rows(0, rank + 2);
    auto push = [&](const RatVec& v) {
      rows.conservativeResize(rows.rows() + 1, rank + 2);
      rows.row(rows.rows() - 1) = v.transpose();
    };
    bool any_periodic = false;
    for (const auto& comp : psi.components()) {
      for (Index id : comp.roots) {
        if (comp.k == 0)
          push(embed(fr.coroot(id), Rat(comp.f(id)) * cb.form_xx(id)));
        else
          push(embed(fr.coroot(id), 0));
      }
      if (comp.k > 0) any_periodic = true;
    }
    if (any_periodic) push(embed(RatVec::Zero(rank), 1));
    Subspace expect(rank + 2, rows);
    if (!(s.cartan_at(0) == expect)) rep.mismatches.push_back("level-0 block mismatch");
    RatVec cvec = embed(RatVec::Zero(rank), 1);
    rep.central_expected = expect.contains(cvec);
  }
  rep.central_actual = s.has_central();

  for (const auto& comp : psi.components()) {
    if (comp.k > 0) rep.central_display_rule = true;
    for (Index id : comp.roots)
      if (comp.f(id) != 0) rep.central_display_rule = true;
  }

  rep.pass = rep.band_sufficient && rep.mismatches.empty() &&
             rep.central_expected == rep.central_actual;
  return rep;
}

namespace {

// member of the affine system: fin_id >= 0 a finite root, or fin zero with
// nonzero level
struct AffMember {
  Index fin;  // -1 for zero
  long level;
};

bool aff_is_root(const AffMember& m) { return m.fin >= 0 || m.level != 0; }

bool slice_has(const SubalgebraSlice& s, const AffMember& m) {
  if (m.fin >= 0) return s.has_real(m.fin, m.level);
  auto blocks = s.cartan_blocks();
  auto it = blocks.find(m.level);
  if (it == blocks.end()) return false;
  for (Index r = 0; r < it->second.basis().rows(); ++r)
    for (Index i = 0; i < s.rank(); ++i)
      if (it->second.basis()(r, i) != 0) return true;
  return false;
}

// step from member down/up by the real root (a, ra)
std::optional<AffMember> aff_step(const FiniteRootSystem& fr, const AffMember& m, Index a,
                                  long ra, int dir) {
  Index aa = dir > 0 ? a : fr.neg(a);
  long rr = dir > 0 ? ra : -ra;
  Index nf;
  if (m.fin < 0)
    nf = aa;
  else if (m.fin == fr.neg(aa))
    nf = -1;
  else
    nf = fr.sum(m.fin, aa);
  AffMember next{nf, m.level + rr};
  if (m.fin >= 0 && nf < 0 && m.fin != fr.neg(aa)) return std::nullopt;  // sum not a root
  if (!aff_is_root(next)) return std::nullopt;
  return next;
}

}  // namespace

KeypropReport verify_keyprop(const ChevalleyBasis& cb, const SubalgebraSlice& s) {
  const FiniteRootSystem& fr = cb.finite();
  KeypropReport rep;
  std::vector<std::pair<Index, long>> reals(s.real_keys().begin(), s.real_keys().end());
  for (const auto& [a, ra] : reals) {
    for (const auto& [b, rb] : reals) {
      if (a == b && ra == rb) continue;
      // the (a, ra)-string through (b, rb)
      AffMember base{b, rb};
      std::vector<AffMember> members{base};
      AffMember cur = base;
      bool in_band = true;
      for (int guard = 0; guard < 12; ++guard) {
        auto down = aff_step(fr, cur, a, ra, -1);
        if (!down) break;
        cur = *down;
        members.insert(members.begin(), cur);
      }
      cur = base;
      for (int guard = 0; guard < 12; ++guard) {
        auto up = aff_step(fr, cur, a, ra, +1);
        if (!up) break;
        cur = *up;
        members.push_back(cur);
      }
      for (const AffMember& m : members)
        if (std::labs(m.level) > s.band()) in_band = false;
      if (!in_band) continue;
      ++rep.pairs_checked;
      for (const AffMember& m : members) {
        if (!slice_has(s, m)) {
          std::string fin = m.fin >= 0 ? to_string(fr.root(m.fin)) : std::string("0");
          rep.violations.push_back("string member " + fin + " at level " +
                                   std::to_string(m.level) + " missing (string of " +
                                   to_string(fr.root(a)) + "@" + std::to_string(ra) +
                                   " through " + to_string(fr.root(b)) + "@" +
                                   std::to_string(rb) + ")");
        }
      }
    }
  }
  rep.pass = rep.violations.empty();
  return rep;
}

SubalgebraSlice assemble_tuple_slice(const ChevalleyBasis& cb, const PeriodicRootSet& psi,
                                     const std::map<long, Subspace>& cartan_extra, long band,
                                     bool with_central) {
  const FiniteRootSystem& fr = cb.finite();
  const Index rank = fr.rank();
  SubalgebraSlice s(fr, band);
  for (const auto& comp : psi.components())
    for (Index id : comp.roots)
      for (long m = -band; m <= band; ++m)
        if (psi.membership(id, m)) s.insert(LoopElement::x(id, m));
  for (const auto& [level, sub] : cartan_extra) {
    if (std::labs(level) > band) continue;
    for (Index r = 0; r < sub.basis().rows(); ++r) {
      RatVec h = sub.basis().row(r).head(rank).transpose();
      s.insert(LoopElement::cartan(h, level));
    }
  }
  if (with_central) s.insert(LoopElement::c());
  s.set_saturated(false);
  return s;
}

TupleSubalgebraReport verify_tuple_subalgebra(const ChevalleyBasis& cb, const SymRegTuple& t,
                                              long band) {
  std::map<long, Subspace> cartan;
  for (long x = -band; x <= band; ++x) {
    Subspace sp = t.cartan_at(x);
    if (sp.dim() > 0) cartan.emplace(x, sp);
  }
  SubalgebraSlice s = assemble_tuple_slice(cb, t.psi(), cartan, band, t.has_central());
  TupleSubalgebraReport rep;
  rep.violations = saturation_violations(cb, s);
  rep.pass = rep.violations.empty();
  return rep;
}

SymSpecialReport split_sym_special(const ChevalleyBasis& cb, const SubalgebraSlice& s) {
  const FiniteRootSystem& fr = cb.finite();
  const Index nr = fr.rank();
  SymSpecialReport rep;

  SupportReport sup = root_support(s);
  std::set<GradedKey> keys;
  for (const auto& [id, m] : sup.real) keys.insert(GradedKey{true, id, m});
  for (long x : sup.imaginary_levels) keys.insert(GradedKey{false, -1, x});
  for (const GradedKey& k : keys) {
    GradedKey mirror = k.real ? GradedKey{true, fr.neg(k.root), -k.level}
                              : GradedKey{false, -1, -k.level};
    if (keys.count(mirror))
      rep.symmetric.insert(k);
    else
      rep.special.insert(k);
  }

  auto h_part = [&](long level) {
    // h-coordinates of the Cartan block at the level
    Subspace block = s.cartan_at(level);
    RatMat rows(block.basis().rows(), nr);
    for (Index r = 0; r < block.basis().rows(); ++r)
      rows.row(r) = block.basis().row(r).head(nr);
    return Subspace(nr, rows);
  };

  // hypothesis: nondegenerate pairing s_a x s_-a and involution stability;
  // for real root lines both hold automatically
  for (const GradedKey& k : rep.symmetric) {
    if (k.real || k.level <= 0) continue;
    Subspace up = h_part(k.level), down = h_part(-k.level);
    RatMat m(up.dim(), down.dim());
    for (Index i = 0; i < up.dim(); ++i)
      for (Index j = 0; j < down.dim(); ++j)
        m(i, j) = (up.basis().row(i) * fr.cartan().coroot_gram() *
                   down.basis().row(j).transpose())(0, 0);
    if (up.dim() != down.dim() || kmroots::rank(m) != up.dim()) {
      rep.hypothesis_pairing = false;
      rep.hypothesis_witnesses.push_back("degenerate pairing at levels +-" +
                                         std::to_string(k.level));
    }
    if (!(up == down)) {
      rep.hypothesis_involution = false;
      rep.hypothesis_witnesses.push_back("involution moves level " + std::to_string(k.level) +
                                         " block outside the slice");
    }
  }

  // s_sy: the subalgebra generated by the symmetric root spaces
  std::vector<LoopElement> sy_gens;
  for (const GradedKey& k : rep.symmetric) {
    if (k.real) {
      sy_gens.push_back(LoopElement::x(k.root, k.level));
    } else {
      Subspace block = h_part(k.level);
      for (Index r = 0; r < block.basis().rows(); ++r)
        sy_gens.push_back(LoopElement::cartan(RatVec(block.basis().row(r).transpose()), k.level));
    }
  }
  SubalgebraSlice sy = generate(cb, sy_gens, s.band());
  SupportReport sy_sup = root_support(sy);
  for (const auto& [id, m] : sy_sup.real)
    if (!rep.symmetric.count(GradedKey{true, id, m})) {
      rep.sym_part_closed = false;
      rep.witnesses.push_back("symmetric part reaches special real key " +
                              to_string(fr.root(id)) + "@" + std::to_string(m));
    }
  for (long x : sy_sup.imaginary_levels)
    if (!rep.symmetric.count(GradedKey{false, -1, x})) {
      rep.sym_part_closed = false;
      rep.witnesses.push_back("symmetric part reaches special level " + std::to_string(x));
    }

  // s_sp: special spans plus a complement of h(s_sy) in h(s) at level 0
  SubalgebraSlice sp(fr, s.band());
  for (const GradedKey& k : rep.special) {
    if (k.real) {
      sp.insert(LoopElement::x(k.root, k.level));
    } else {
      Subspace block = s.cartan_at(k.level);
      for (Index r = 0; r < block.basis().rows(); ++r) {
        LoopElement e;
        for (Index i = 0; i < nr; ++i)
          if (block.basis()(r, i) != 0) e.add({LoopKey::Kind::H, i, k.level}, block.basis()(r, i));
        sp.insert(e);
      }
    }
  }
  {
    Subspace h_all = s.cartan_at(0);
    Subspace h_sy = sy.cartan_at(0);
    Subspace h_sp = h_all.complement_within(h_sy);
    for (Index r = 0; r < h_sp.basis().rows(); ++r) {
      LoopElement e;
      for (Index i = 0; i < nr; ++i)
        if (h_sp.basis()(r, i) != 0) e.add({LoopKey::Kind::H, i, 0}, h_sp.basis()(r, i));
      if (h_sp.basis()(r, nr) != 0) e.add({LoopKey::Kind::C, 0, 0}, h_sp.basis()(r, nr));
      if (h_sp.basis()(r, nr + 1) != 0)
        e.add({LoopKey::Kind::D, 0, 0}, h_sp.basis()(r, nr + 1));
      sp.insert(e);
    }
  }

  // ideal check: [s, s_sp] within the band stays in s_sp
  for (const LoopElement& u : s.basis_elements()) {
    for (const LoopElement& v : sp.basis_elements()) {
      LoopElement b = bracket(cb, u, v);
      if (b.is_zero()) continue;
      bool in_band = true;
      for (const auto& [g, comp] : graded_components(b))
        if (std::labs(g.level) > s.band()) in_band = false;
      if (!in_band) continue;
      if (!sp.contains(b)) {
        rep.ideal = false;
        rep.witnesses.push_back("[" + to_string(u, fr) + ", " + to_string(v, fr) + "] = " +
                                to_string(b, fr) + " leaves the special part");
      }
    }
  }
  rep.semidirect = rep.sym_part_closed && rep.ideal;
  return rep;
}

}  // namespace kmroots
