// Exact scalar types and dense containers used throughout kmroots.
//
// All arithmetic in this library is exact: arbitrary-precision integers
// (mpz_class) and rationals (mpq_class) wrapped in Eigen dense types.
// No floating point is used anywhere.

#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace Eigen {

template <> struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <> struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace kmroots {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;

inline Rat make_rat(Int num, Int den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Coefficient sum of a root-lattice vector.
inline Int height(const IntVec& v) {
  Int h = 0;
  for (Index i = 0; i < v.size(); ++i) h += v[i];
  return h;
}

inline bool is_zero(const IntVec& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

inline bool all_nonneg(const IntVec& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v[i] < 0) return false;
  return true;
}

inline bool all_nonpos(const IntVec& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v[i] > 0) return false;
  return true;
}

enum class Sign { Positive, Negative, Zero, Mixed };

/// Sign of a root-lattice vector: roots have uniformly signed coefficients.
inline Sign vec_sign(const IntVec& v) {
  bool pos = false, neg = false;
  for (Index i = 0; i < v.size(); ++i) {
    if (v[i] > 0) pos = true;
    if (v[i] < 0) neg = true;
  }
  if (pos && neg) return Sign::Mixed;
  if (pos) return Sign::Positive;
  if (neg) return Sign::Negative;
  return Sign::Zero;
}

/// Strict lexicographic order on coefficient vectors.
inline bool lex_less(const IntVec& a, const IntVec& b) {
  for (Index i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

/// Canonical enumeration order: by height, then lexicographic.
struct HtLexLess {
  bool operator()(const IntVec& a, const IntVec& b) const {
    Int ha = height(a), hb = height(b);
    int c = cmp(ha, hb);
    if (c != 0) return c < 0;
    return lex_less(a, b);
  }
};

struct LexLess {
  bool operator()(const IntVec& a, const IntVec& b) const { return lex_less(a, b); }
};

inline bool vec_eq(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

inline std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

inline std::string to_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

inline IntVec unit_vec(Index n, Index i) {
  IntVec v = IntVec::Zero(n);
  v[i] = 1;
  return v;
}

inline IntVec make_vec(std::initializer_list<long> cs) {
  IntVec v(static_cast<Index>(cs.size()));
  Index i = 0;
  for (long c : cs) v[i++] = c;
  return v;
}

}  // namespace kmroots
