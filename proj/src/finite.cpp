#include "kmroots/finite.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace kmroots {

FiniteRootSystem FiniteRootSystem::build(const CartanDatum& cd) {
  for (MatrixKind k : kind(cd))
    if (k != MatrixKind::Finite) throw KmError("FiniteRootSystem: GCM is not of finite type");
  FiniteRootSystem fr(cd);
  const Index n = cd.rank();
  const Gcm& g = cd.gcm();

  std::set<IntVec, HtLexLess> pos;
  std::deque<IntVec> work;
  for (Index i = 0; i < n; ++i) {
    pos.insert(unit_vec(n, i));
    work.push_back(unit_vec(n, i));
  }
  while (!work.empty()) {
    IntVec b = work.front();
    work.pop_front();
    for (Index i = 0; i < n; ++i) {
      Int p = 0;
      for (Index j = 0; j < n; ++j) p += b[j] * g.a(i, j);
      if (p < 0) {
        IntVec nb = b;
        nb[i] -= p;
        if (pos.insert(nb).second) work.push_back(nb);
      }
    }
  }

  const Index np = static_cast<Index>(pos.size());
  fr.roots_.reserve(2 * np);
  for (const IntVec& v : pos) fr.roots_.push_back(v);
  for (Index i = 0; i < np; ++i) fr.roots_.push_back(-fr.roots_[i]);
  fr.neg_.resize(2 * np);
  for (Index i = 0; i < np; ++i) {
    fr.neg_[i] = np + i;
    fr.neg_[np + i] = i;
  }
  for (Index i = 0; i < 2 * np; ++i) fr.index_.emplace(fr.roots_[i], i);
  fr.norms_.reserve(2 * np);
  fr.coroots_.reserve(2 * np);
  for (Index i = 0; i < 2 * np; ++i) {
    fr.norms_.push_back(cd.norm(fr.roots_[i]));
    fr.coroots_.push_back(cd.coroot(fr.roots_[i]));
  }
  fr.pairing_.resize(2 * np, 2 * np);
  fr.sum_.resize(2 * np, 2 * np);
  for (Index i = 0; i < 2 * np; ++i)
    for (Index j = 0; j < 2 * np; ++j) {
      fr.pairing_(i, j) = cd.pairing(fr.roots_[i], fr.roots_[j]).get_si();
      fr.sum_(i, j) = fr.index_of(IntVec(fr.roots_[i] + fr.roots_[j]));
    }

  fr.gcm_components_ = components(g);
  for (auto& comp : fr.gcm_components_) {
    Index best = -1;
    Int best_ht = -1;
    for (Index id = 0; id < np; ++id) {
      const IntVec& v = fr.roots_[id];
      bool in_comp = true;
      for (Index c = 0; c < n; ++c) {
        if (v[c] != 0 && std::find(comp.begin(), comp.end(), c) == comp.end()) {
          in_comp = false;
          break;
        }
      }
      if (!in_comp) continue;
      Int h = height(v);
      if (h > best_ht) {
        best_ht = h;
        best = id;
      }
    }
    fr.highest_.push_back(best);
  }
  return fr;
}

Index FiniteRootSystem::index_of(const IntVec& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

Index FiniteRootSystem::reflect(Index a, Index x) const {
  long c = pairing_(x, a);
  if (c == 0) return x;
  IntVec img = roots_[x] - Int(c) * roots_[a];
  Index id = index_of(img);
  if (id < 0) throw KmError("reflect: image not a root (internal error)");
  return id;
}

long FiniteRootSystem::string_down(Index a, Index b) const {
  long p = 0;
  Index cur = b;
  for (;;) {
    cur = sum_(cur, neg_[a]);
    if (cur < 0) break;
    ++p;
  }
  return p;
}

RootIdSet FiniteRootSystem::all_ids() const {
  RootIdSet s;
  for (Index i = 0; i < count(); ++i) s.insert(i);
  return s;
}

RootIdSet FiniteRootSystem::ids_of(const std::vector<IntVec>& roots) const {
  RootIdSet s;
  for (const IntVec& v : roots) {
    Index id = index_of(v);
    if (id < 0) throw KmError("ids_of: " + to_string(v) + " is not a root");
    s.insert(id);
  }
  return s;
}

RootIdSet finite_closure(const FiniteRootSystem& fr, const RootIdSet& s) {
  RootIdSet acc = s;
  std::deque<Index> work(s.begin(), s.end());
  auto offer = [&](Index id) {
    if (id >= 0 && acc.insert(id).second) work.push_back(id);
  };
  while (!work.empty()) {
    Index x = work.front();
    work.pop_front();
    for (Index y : RootIdSet(acc)) {
      offer(fr.sum(x, y));
      offer(fr.reflect(x, y));
      offer(fr.reflect(y, x));
    }
  }
  return acc;
}

bool is_closed_subroot_system(const FiniteRootSystem& fr, const RootIdSet& s) {
  for (Index x : s)
    for (Index y : s) {
      Index z = fr.sum(x, y);
      if (z >= 0 && !s.count(z)) return false;
      if (!s.count(fr.reflect(x, y))) return false;
    }
  return true;
}

std::vector<RootIdSet> irreducible_components(const FiniteRootSystem& fr, const RootIdSet& s) {
  std::vector<Index> elems(s.begin(), s.end());
  std::map<Index, int> comp;
  int ncomp = 0;
  for (Index seed : elems) {
    if (comp.count(seed)) continue;
    std::deque<Index> work{seed};
    comp[seed] = ncomp;
    while (!work.empty()) {
      Index x = work.front();
      work.pop_front();
      for (Index y : elems) {
        if (comp.count(y)) continue;
        if (fr.cartan().bilinear(fr.root(x), fr.root(y)) != 0) {
          comp[y] = ncomp;
          work.push_back(y);
        }
      }
    }
    ++ncomp;
  }
  // negatives pair with positives automatically ((x, -x) != 0)
  std::vector<RootIdSet> out(ncomp);
  for (auto& [id, c] : comp) out[c].insert(id);
  return out;
}

std::vector<Index> simple_system(const FiniteRootSystem& fr, const RootIdSet& s) {
  std::vector<Index> pos;
  for (Index id : s)
    if (fr.is_positive(id)) pos.push_back(id);
  std::vector<Index> simples;
  for (Index b : pos) {
    bool decomposable = false;
    for (Index x : pos) {
      for (Index y : pos) {
        if (fr.sum(x, y) == b) {
          decomposable = true;
          break;
        }
      }
      if (decomposable) break;
    }
    if (!decomposable) simples.push_back(b);
  }
  return simples;
}

bool is_maximal_closed(const FiniteRootSystem& fr, const RootIdSet& psi) {
  if (static_cast<Index>(psi.size()) == fr.count())
    throw NotProperError("psi equals the full root system");
  if (!is_closed_subroot_system(fr, psi)) return false;
  for (Index g = 0; g < fr.count(); ++g) {
    if (psi.count(g)) continue;
    RootIdSet ext = psi;
    ext.insert(g);
    ext.insert(fr.neg(g));
    if (static_cast<Index>(finite_closure(fr, ext).size()) != fr.count()) return false;
  }
  return true;
}

std::vector<RootIdSet> all_closed_subsystems(const FiniteRootSystem& fr, Index rank_cap) {
  if (fr.rank() > rank_cap) throw KmError("all_closed_subsystems: rank exceeds cap");
  // proper closed subroot systems only; the full system is excluded
  std::set<RootIdSet> seen;
  std::deque<RootIdSet> work;
  for (Index g = 0; g < fr.num_positive(); ++g) {
    RootIdSet atom{g, fr.neg(g)};
    if (static_cast<Index>(atom.size()) == fr.count()) continue;
    if (seen.insert(atom).second) work.push_back(atom);
  }
  while (!work.empty()) {
    RootIdSet s = work.front();
    work.pop_front();
    for (Index g = 0; g < fr.num_positive(); ++g) {
      if (s.count(g)) continue;
      RootIdSet ext = s;
      ext.insert(g);
      ext.insert(fr.neg(g));
      RootIdSet cl = finite_closure(fr, ext);
      if (static_cast<Index>(cl.size()) == fr.count()) continue;
      if (seen.insert(cl).second) work.push_back(cl);
    }
  }
  return std::vector<RootIdSet>(seen.begin(), seen.end());
}

std::vector<RootIdSet> maximal_closed(const FiniteRootSystem& fr, Index rank_cap) {
  std::vector<RootIdSet> out;
  for (const RootIdSet& s : all_closed_subsystems(fr, rank_cap))
    if (is_maximal_closed(fr, s)) out.push_back(s);
  return out;
}

}  // namespace kmroots
