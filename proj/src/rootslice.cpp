#include "kmroots/rootslice.hpp"

#include <deque>
#include <functional>

namespace kmroots {

std::size_t max_roots_cap() {
  if (const char* env = std::getenv("KMROOTS_MAX_ROOTS")) {
    long v = std::atol(env);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

std::string to_string(RootClass c) {
  switch (c) {
    case RootClass::Real: return "Real";
    case RootClass::Imaginary: return "Imaginary";
    case RootClass::NotARoot: return "NotARoot";
    case RootClass::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

bool connected_support(const Gcm& g, const IntVec& v) {
  const Index n = g.rank();
  std::vector<Index> supp;
  for (Index i = 0; i < n; ++i)
    if (v[i] != 0) supp.push_back(i);
  if (supp.empty()) return false;
  std::vector<bool> seen(supp.size(), false);
  std::deque<size_t> work{0};
  seen[0] = true;
  size_t reached = 1;
  while (!work.empty()) {
    size_t i = work.front();
    work.pop_front();
    for (size_t j = 0; j < supp.size(); ++j) {
      if (!seen[j] && g.a(supp[i], supp[j]) != 0) {
        seen[j] = true;
        ++reached;
        work.push_back(j);
      }
    }
  }
  return reached == supp.size();
}

// Scan the fundamental cone: vectors of height <= H with connected support
// and all simple pairings <= 0. Recursive over coordinates with running
// simple-pairing partial sums.
void scan_cone(const CartanDatum& cd, long H, RootVecSet& out, std::size_t cap) {
  const Index n = cd.rank();
  const Gcm& g = cd.gcm();
  IntVec v = IntVec::Zero(n);
  // partial[i] = sum_j v_j a_ij (integer form of (v, alpha_i^vee) up to d_i > 0)
  std::vector<Int> partial(n, Int(0));
  std::function<void(Index, long)> rec = [&](Index coord, long left) {
    if (coord == n) {
      if (is_zero(v)) return;
      for (Index i = 0; i < n; ++i)
        if (partial[i] > 0) return;
      if (!connected_support(g, v)) return;
      out.insert(v);
      if (out.size() > cap) throw ResourceCapError(cap);
      return;
    }
    for (long c = 0; c <= left; ++c) {
      v[coord] = c;
      if (c > 0)
        for (Index i = 0; i < n; ++i) partial[i] += g.a(i, coord);
      rec(coord + 1, left - c);
    }
    for (Index i = 0; i < n; ++i) partial[i] -= Int(v[coord]) * g.a(i, coord);
    v[coord] = 0;
  };
  rec(0, H);
}

}  // namespace

RootSlice RootSlice::enumerate(const CartanDatum& cd, long height_bound, std::size_t cap) {
  if (height_bound < 1) throw KmError("enumerate: height bound must be >= 1");
  RootSlice slice(cd, height_bound);
  const Index n = cd.rank();
  const Gcm& g = cd.gcm();

  auto close_upward = [&](RootVecSet& set) {
    std::deque<IntVec> work(set.begin(), set.end());
    while (!work.empty()) {
      IntVec b = work.front();
      work.pop_front();
      Int ht = height(b);
      for (Index i = 0; i < n; ++i) {
        // (b, alpha_i^vee) = sum_j b_j a_ij
        Int p = 0;
        for (Index j = 0; j < n; ++j)
          if (b[j] != 0) p += b[j] * g.a(i, j);
        if (p >= 0) continue;  // only height-increasing reflections
        if (ht - p > height_bound) continue;
        IntVec nb = b;
        nb[i] -= p;
        if (set.insert(nb).second) {
          if (set.size() > cap) throw ResourceCapError(cap);
          work.push_back(nb);
        }
      }
    }
  };

  for (Index i = 0; i < n; ++i) slice.pos_real_.insert(unit_vec(n, i));
  close_upward(slice.pos_real_);

  scan_cone(cd, height_bound, slice.pos_imag_, cap);
  close_upward(slice.pos_imag_);
  if (slice.pos_real_.size() + slice.pos_imag_.size() > cap) throw ResourceCapError(cap);
  return slice;
}

RootClass RootSlice::classify(const IntVec& beta) const {
  if (beta.size() != cd_.rank()) throw RankMismatchError();
  switch (vec_sign(beta)) {
    case Sign::Zero:
    case Sign::Mixed:
      return RootClass::NotARoot;
    case Sign::Negative: {
      IntVec neg = -beta;
      return classify(neg);
    }
    case Sign::Positive:
      break;
  }
  if (height(beta) > H_) return RootClass::Unknown;
  if (pos_real_.count(beta)) return RootClass::Real;
  if (pos_imag_.count(beta)) return RootClass::Imaginary;
  return RootClass::NotARoot;
}

RootString root_string(const RootSlice& slice, const IntVec& alpha, const IntVec& beta) {
  const CartanDatum& cd = slice.cartan();
  if (slice.classify(alpha) != RootClass::Real) throw KmError("root_string: alpha must be a real root");
  if (!slice.is_root(beta)) throw KmError("root_string: beta must be a root");

  if (vec_eq(beta, alpha) || vec_eq(beta, IntVec(-alpha)))
    throw KmError("root_string: beta must not be proportional to alpha");

  RootString s;
  s.alpha = alpha;
  s.beta = beta;
  // walk down: p = max{k : beta - k alpha is a root}
  long p = 0;
  for (;;) {
    IntVec cand = beta - Int(p + 1) * alpha;
    RootClass c = slice.classify(cand);
    if (c == RootClass::Unknown) throw TruncatedError(slice.height_bound());
    if (c == RootClass::NotARoot) break;
    ++p;
  }
  Int pq = cd.pairing(beta, alpha);
  Int q = Int(p) - pq;
  if (q < 0) throw KmError("root_string: inconsistent string data");
  s.p = p;
  s.q = q.get_si();
  for (long k = -p; k <= s.q; ++k) {
    IntVec m = beta + Int(k) * alpha;
    RootClass c = slice.classify(m);
    if (c == RootClass::Unknown) throw TruncatedError(slice.height_bound());
    if (c == RootClass::NotARoot) throw KmError("root_string: broken string (enumeration bug)");
    s.members.push_back(m);
    s.real_flags.push_back(c == RootClass::Real);
  }
  return s;
}

std::vector<std::pair<Index, Index>> morita_pairs(const Gcm& g) {
  std::vector<std::pair<Index, Index>> out;
  for (Index i = 0; i < g.rank(); ++i)
    for (Index j = 0; j < g.rank(); ++j)
      if (i != j && g.a(i, j) == -1 && g.a(j, i) < -1) out.emplace_back(i, j);
  return out;
}

}  // namespace kmroots
