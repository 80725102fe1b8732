#include "kmroots/linalg.hpp"

#include <stdexcept>

namespace kmroots {

std::vector<Index> rref_in_place(RatMat& m) {
  std::vector<Index> pivots;
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = -1;
    for (Index i = r; i < rows; ++i) {
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    Rat inv = 1 / m(r, c);
    for (Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Index rank(const RatMat& m) {
  RatMat t = m;
  return static_cast<Index>(rref_in_place(t).size());
}

Rat determinant(RatMat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const Index n = m.rows();
  Rat det = 1;
  for (Index c = 0; c < n; ++c) {
    Index p = -1;
    for (Index i = c; i < n; ++i) {
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) return 0;
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    Rat inv = 1 / m(c, c);
    for (Index i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rat f = m(i, c) * inv;
      for (Index j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
  const Index rows = a.rows(), cols = a.cols();
  RatMat aug(rows, cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  std::vector<Index> pivots = rref_in_place(aug);
  for (Index p : pivots)
    if (p == cols) return std::nullopt;  // inconsistent row 0 = 1
  RatVec x = RatVec::Zero(cols);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(static_cast<Index>(r), cols);
  return x;
}

RatMat kernel_basis(const RatMat& a) {
  RatMat m = a;
  std::vector<Index> pivots = rref_in_place(m);
  const Index cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (Index p : pivots) is_pivot[p] = true;
  const Index kdim = cols - static_cast<Index>(pivots.size());
  RatMat k(cols, kdim);
  k.setZero();
  Index kc = 0;
  for (Index c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    k(c, kc) = 1;
    for (size_t r = 0; r < pivots.size(); ++r) k(pivots[r], kc) = -m(static_cast<Index>(r), c);
    ++kc;
  }
  return k;
}

IntMat integer_kernel(const IntMat& a) {
  const Index rows = a.rows(), cols = a.cols();
  IntMat m = a;
  IntMat u = IntMat::Identity(cols, cols);
  // Column echelon via exact gcd steps; MU = echelon, U unimodular.
  Index c = 0;
  for (Index r = 0; r < rows && c < cols; ++r) {
    // clear row r to the right of column c using gcd combinations
    for (Index j = c + 1; j < cols; ++j) {
      if (m(r, j) == 0) continue;
      if (m(r, c) == 0) {
        m.col(c).swap(m.col(j));
        u.col(c).swap(u.col(j));
        continue;
      }
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m(r, c).get_mpz_t(),
                 m(r, j).get_mpz_t());
      Int p = m(r, c) / g, q = m(r, j) / g;
      // (col_c, col_j) <- (s*col_c + t*col_j, -q*col_c + p*col_j); det = s*p + t*q = 1
      for (Index i = 0; i < rows; ++i) {
        Int mc = m(i, c), mj = m(i, j);
        m(i, c) = s * mc + t * mj;
        m(i, j) = p * mj - q * mc;
      }
      for (Index i = 0; i < cols; ++i) {
        Int uc = u(i, c), uj = u(i, j);
        u(i, c) = s * uc + t * uj;
        u(i, j) = p * uj - q * uc;
      }
    }
    if (m(r, c) != 0) ++c;
  }
  // columns c..cols-1 of MU are zero; the matching U columns span the kernel
  IntMat k(cols, cols - c);
  for (Index j = c; j < cols; ++j) k.col(j - c) = u.col(j);
  return k;
}

Subspace::Subspace(Index ambient, const RatMat& vectors) : ambient_(ambient) {
  RatMat m = vectors;
  std::vector<Index> pivots = rref_in_place(m);
  basis_ = m.topRows(static_cast<Index>(pivots.size()));
}

bool Subspace::contains(const RatVec& v) const {
  RatVec w = v;
  // reduce against RREF rows
  Index r = 0;
  for (Index c = 0; c < ambient_ && r < basis_.rows(); ++c) {
    if (basis_(r, c) == 0) continue;  // rows are RREF: pivot = first nonzero = 1
    if (w[c] != 0) {
      Rat f = w[c] / basis_(r, c);
      for (Index j = 0; j < ambient_; ++j) w[j] -= f * basis_(r, j);
    }
    ++r;
  }
  for (Index j = 0; j < ambient_; ++j)
    if (w[j] != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (Index r = 0; r < other.basis_.rows(); ++r)
    if (!contains(RatVec(other.basis_.row(r).transpose()))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_ == other.ambient_ && basis_.rows() == other.basis_.rows() &&
         basis_ == other.basis_;
}

Subspace Subspace::sum(const Subspace& other) const {
  RatMat m(basis_.rows() + other.basis_.rows(), ambient_);
  m.topRows(basis_.rows()) = basis_;
  m.bottomRows(other.basis_.rows()) = other.basis_;
  return Subspace(ambient_, m);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (is_zero() || other.is_zero()) return Subspace(ambient_);
  // x in both: x = basis^T u = other.basis^T w; kernel of [basis^T | -other.basis^T]
  RatMat stacked(ambient_, basis_.rows() + other.basis_.rows());
  stacked.leftCols(basis_.rows()) = basis_.transpose();
  stacked.rightCols(other.basis_.rows()) = -other.basis_.transpose();
  RatMat k = kernel_basis(stacked);
  RatMat vecs(k.cols(), ambient_);
  for (Index j = 0; j < k.cols(); ++j)
    vecs.row(j) = (basis_.transpose() * k.col(j).head(basis_.rows())).transpose();
  return Subspace(ambient_, vecs);
}

Subspace Subspace::orthogonal_complement(const RatMat& gram) const {
  if (is_zero()) return full(ambient_);
  RatMat constraints = basis_ * gram;  // rows b: b.gram.v = 0
  RatMat k = kernel_basis(constraints);
  return Subspace(ambient_, RatMat(k.transpose()));
}

Subspace Subspace::complement_within(const Subspace& other) const {
  RatMat acc = other.basis_;
  std::vector<Index> keep;
  for (Index r = 0; r < basis_.rows(); ++r) {
    RatMat trial(acc.rows() + 1, ambient_);
    trial.topRows(acc.rows()) = acc;
    trial.bottomRows(1) = basis_.row(r);
    if (rank(trial) > rank(acc)) {
      keep.push_back(r);
      acc = trial;
    }
  }
  RatMat vecs(static_cast<Index>(keep.size()), ambient_);
  for (size_t i = 0; i < keep.size(); ++i) vecs.row(static_cast<Index>(i)) = basis_.row(keep[i]);
  return Subspace(ambient_, vecs);
}

Subspace Subspace::full(Index ambient) {
  return Subspace(ambient, RatMat(RatMat::Identity(ambient, ambient)));
}

}  // namespace kmroots
