#include "kmroots/cartan.hpp"

#include "kmroots/linalg.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace kmroots {

Gcm Gcm::validate(const IntMat& entries) {
  if (entries.rows() != entries.cols() || entries.rows() == 0)
    throw NotGcmError(0, 0, "matrix must be square and nonempty");
  const Index n = entries.rows();
  for (Index i = 0; i < n; ++i) {
    if (entries(i, i) != 2) throw NotGcmError(i, i, "diagonal entry must be 2");
    for (Index j = 0; j < n; ++j) {
      if (i == j) continue;
      if (entries(i, j) > 0) throw NotGcmError(i, j, "off-diagonal entry must be <= 0");
      if ((entries(i, j) == 0) != (entries(j, i) == 0))
        throw NotGcmError(i, j, "zero pattern must be symmetric");
    }
  }
  return Gcm(entries);
}

std::vector<std::vector<Index>> components(const Gcm& g) {
  const Index n = g.rank();
  std::vector<Index> comp(n, -1);
  Index ncomp = 0;
  for (Index s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::deque<Index> work{s};
    comp[s] = ncomp;
    while (!work.empty()) {
      Index i = work.front();
      work.pop_front();
      for (Index j = 0; j < n; ++j) {
        if (comp[j] < 0 && g.a(i, j) != 0) {
          comp[j] = ncomp;
          work.push_back(j);
        }
      }
    }
    ++ncomp;
  }
  std::vector<std::vector<Index>> out(ncomp);
  for (Index i = 0; i < n; ++i) out[comp[i]].push_back(i);
  return out;
}

CartanDatum CartanDatum::symmetrize(const Gcm& g) {
  const Index n = g.rank();
  std::vector<Rat> d(n, Rat(0));
  std::vector<Index> parent(n, -1);
  for (auto& comp : components(g)) {
    Index root = comp.front();
    d[root] = 1;
    std::deque<Index> work{root};
    while (!work.empty()) {
      Index i = work.front();
      work.pop_front();
      for (Index j = 0; j < n; ++j) {
        if (i == j || g.a(i, j) == 0) continue;
        Rat dj = d[i] * make_rat(g.a(i, j), g.a(j, i));
        if (d[j] == 0) {
          d[j] = dj;
          parent[j] = i;
          work.push_back(j);
        } else if (d[j] != dj) {
          // walk parents to exhibit the inconsistent cycle i .. j
          std::vector<long> cyc;
          for (Index k = i; k >= 0; k = parent[k]) cyc.push_back(static_cast<long>(k));
          std::reverse(cyc.begin(), cyc.end());
          cyc.push_back(static_cast<long>(j));
          throw NotSymmetrizableError(std::move(cyc));
        }
      }
    }
    // scale the component to the minimal positive integer vector
    Int lcm_den = 1;
    for (Index i : comp) lcm_den = lcm(lcm_den, d[i].get_den());
    Int gcd_num = 0;
    for (Index i : comp) gcd_num = gcd(gcd_num, Int(d[i].get_num() * (lcm_den / d[i].get_den())));
    for (Index i : comp) d[i] = d[i] * make_rat(lcm_den, gcd_num);
  }
  std::vector<Int> dz(n);
  for (Index i = 0; i < n; ++i) dz[i] = d[i].get_num();
  RatMat gram(n, n), cgram(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      gram(i, j) = Rat(dz[i] * g.a(i, j));
      cgram(i, j) = make_rat(g.a(i, j), dz[j]);
    }
  // d_i a_ij = d_j a_ji must now hold exactly
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (gram(i, j) != gram(j, i)) throw NotSymmetrizableError({static_cast<long>(i),
                                                                 static_cast<long>(j)});
  return CartanDatum(g, std::move(dz), std::move(gram), std::move(cgram));
}

Rat CartanDatum::bilinear(const IntVec& x, const IntVec& y) const {
  if (x.size() != rank() || y.size() != rank()) throw RankMismatchError();
  Rat acc = 0;
  for (Index i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    Rat row = 0;
    for (Index j = 0; j < rank(); ++j) {
      if (y[j] == 0) continue;
      row += gram_(i, j) * Rat(y[j]);
    }
    acc += Rat(x[i]) * row;
  }
  return acc;
}

Int CartanDatum::pairing(const IntVec& beta, const IntVec& alpha) const {
  Rat nn = norm(alpha);
  if (nn <= 0) throw ZeroNormError();
  Rat v = 2 * bilinear(beta, alpha) / nn;
  if (v.get_den() != 1)
    throw NonIntegralError("(beta, alpha^vee) = " + to_string(v) + " for alpha = " +
                           kmroots::to_string(alpha));
  return v.get_num();
}

IntVec CartanDatum::reflect(const IntVec& alpha, const IntVec& x) const {
  Int c = pairing(x, alpha);
  IntVec out = x;
  for (Index i = 0; i < rank(); ++i) out[i] -= c * alpha[i];
  return out;
}

RatVec CartanDatum::coroot(const IntVec& alpha) const {
  Rat nn = norm(alpha);
  if (nn <= 0) throw ZeroNormError();
  RatVec h(rank());
  for (Index i = 0; i < rank(); ++i) h[i] = 2 * Rat(alpha[i] * d_[i]) / nn;
  return h;
}

namespace {

bool positive_definite(const RatMat& m) {
  // Sylvester: symmetric matrix is positive definite iff all leading
  // principal minors are positive.
  for (Index k = 1; k <= m.rows(); ++k) {
    if (determinant(RatMat(m.topLeftCorner(k, k))) <= 0) return false;
  }
  return true;
}

}  // namespace

std::vector<MatrixKind> kind(const CartanDatum& cd) {
  std::vector<MatrixKind> out;
  for (auto& comp : components(cd.gcm())) {
    const Index m = static_cast<Index>(comp.size());
    RatMat sub(m, m);
    for (Index i = 0; i < m; ++i)
      for (Index j = 0; j < m; ++j) sub(i, j) = cd.gram()(comp[i], comp[j]);
    if (positive_definite(sub)) {
      out.push_back(MatrixKind::Finite);
      continue;
    }
    if (determinant(sub) == 0) {
      // affine iff every proper principal submatrix is positive definite;
      // checking all single-index deletions covers all proper minors
      bool affine = true;
      for (Index del = 0; del < m && affine; ++del) {
        RatMat sub2(m - 1, m - 1);
        Index r = 0;
        for (Index i = 0; i < m; ++i) {
          if (i == del) continue;
          Index c = 0;
          for (Index j = 0; j < m; ++j) {
            if (j == del) continue;
            sub2(r, c++) = sub(i, j);
          }
          ++r;
        }
        affine = positive_definite(sub2);
      }
      if (affine) {
        out.push_back(MatrixKind::Affine);
        continue;
      }
    }
    out.push_back(MatrixKind::Indefinite);
  }
  return out;
}

MatrixKind kind_indecomposable(const CartanDatum& cd) {
  auto comps = components(cd.gcm());
  if (comps.size() != 1) throw KmError("kind_indecomposable: GCM is decomposable");
  return kind(cd).front();
}

std::string to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::Finite: return "Finite";
    case MatrixKind::Affine: return "Affine";
    case MatrixKind::Indefinite: return "Indefinite";
  }
  return "?";
}

namespace {

IntMat chain_matrix(Index n) {
  IntMat a = IntMat::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    a(i, i) = 2;
    if (i + 1 < n) {
      a(i, i + 1) = -1;
      a(i + 1, i) = -1;
    }
  }
  return a;
}

}  // namespace

Gcm named_gcm(const std::string& label) {
  if (label.size() < 2) throw KmError("named_gcm: bad label " + label);
  bool affine = false;
  std::string base = label;
  if (base.size() > 1 && base.back() == '~') {
    affine = true;
    base.pop_back();
  } else if (auto pos = base.find("^(1)"); pos != std::string::npos) {
    affine = true;
    base = base.substr(0, pos);
  }
  char family = base[0];
  long n = std::stol(base.substr(1));
  if (n < 1) throw KmError("named_gcm: bad rank in " + label);
  IntMat a;
  switch (family) {
    case 'A':
      a = chain_matrix(n);
      break;
    case 'B':
      if (n < 2) throw KmError("named_gcm: B needs rank >= 2");
      a = chain_matrix(n);
      a(n - 2, n - 1) = -2;  // short last simple root
      break;
    case 'C':
      if (n < 2) throw KmError("named_gcm: C needs rank >= 2");
      a = chain_matrix(n);
      a(n - 1, n - 2) = -2;
      break;
    case 'D':
      if (n < 3) throw KmError("named_gcm: D needs rank >= 3");
      a = chain_matrix(n);
      a(n - 2, n - 1) = 0;
      a(n - 1, n - 2) = 0;
      a(n - 3, n - 1) = -1;
      a(n - 1, n - 3) = -1;
      break;
    case 'E':
      if (n < 6 || n > 8) throw KmError("named_gcm: E needs rank 6..8");
      a = chain_matrix(n - 1);
      a.conservativeResize(n, n);
      a.row(n - 1).setZero();
      a.col(n - 1).setZero();
      a(n - 1, n - 1) = 2;
      a(2, n - 1) = -1;  // branch node at the third vertex of the chain
      a(n - 1, 2) = -1;
      break;
    case 'F':
      if (n != 4) throw KmError("named_gcm: F needs rank 4");
      a = chain_matrix(4);
      a(1, 2) = -2;
      break;
    case 'G':
      if (n != 2) throw KmError("named_gcm: G needs rank 2");
      a = IntMat(2, 2);
      a << 2, -1, -3, 2;
      break;
    default:
      throw KmError("named_gcm: unknown family in " + label);
  }
  Gcm fin = Gcm::validate(a);
  if (!affine) return fin;

  // untwisted affinization: adjoin alpha_0 = delta - theta
  CartanDatum cd = CartanDatum::symmetrize(fin);
  // find the highest root: the positive root theta with theta + alpha_i
  // never a root; equivalently maximal height in the finite enumeration.
  // Closure of simples under height-increasing reflections terminates.
  std::vector<IntVec> pos;
  {
    std::map<IntVec, bool, HtLexLess> seen;
    std::deque<IntVec> work;
    for (Index i = 0; i < n; ++i) {
      IntVec e = unit_vec(n, i);
      seen.emplace(e, true);
      work.push_back(e);
    }
    while (!work.empty()) {
      IntVec b = work.front();
      work.pop_front();
      for (Index i = 0; i < n; ++i) {
        Int p = 0;
        for (Index j = 0; j < n; ++j) p += b[j] * fin.a(i, j);
        if (p < 0) {
          IntVec nb = b;
          nb[i] -= p;
          if (seen.emplace(nb, true).second) work.push_back(nb);
        }
      }
    }
    for (auto& [v, _] : seen) pos.push_back(v);
  }
  IntVec theta = pos.back();  // HtLexLess order: maximal height last
  IntMat aff = IntMat::Zero(n + 1, n + 1);
  aff(0, 0) = 2;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) aff(i + 1, j + 1) = fin.a(i, j);
  for (Index i = 0; i < n; ++i) {
    // alpha_0 = delta - theta: a_{0,i} = -(alpha_i, theta^vee), a_{i,0} = -(theta, alpha_i^vee)
    aff(0, i + 1) = -cd.pairing(unit_vec(n, i), theta);
    aff(i + 1, 0) = -cd.pairing(theta, unit_vec(n, i));
  }
  return Gcm::validate(aff);
}

}  // namespace kmroots
