#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kmroots {

struct KmError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A cell condition of a generalized Cartan matrix is violated at (i, j).
struct NotGcmError : KmError {
  NotGcmError(long i_, long j_, const std::string& what_)
      : KmError("NotGcm(" + std::to_string(i_) + "," + std::to_string(j_) + "): " + what_),
        i(i_),
        j(j_) {}
  long i, j;
};

/// No positive symmetrizer exists; carries one inconsistent cycle.
struct NotSymmetrizableError : KmError {
  explicit NotSymmetrizableError(std::vector<long> cycle_)
      : KmError("NotSymmetrizable: inconsistent cycle"), cycle(std::move(cycle_)) {}
  std::vector<long> cycle;
};

struct ZeroNormError : KmError {
  ZeroNormError() : KmError("ZeroNorm: (alpha,alpha) <= 0") {}
};

struct NonIntegralError : KmError {
  explicit NonIntegralError(const std::string& what_) : KmError("NonIntegral: " + what_) {}
};

struct RankMismatchError : KmError {
  RankMismatchError() : KmError("rank mismatch") {}
};

/// An answer would depend on roots beyond the height bound H.
struct TruncatedError : KmError {
  explicit TruncatedError(long h) : KmError("Truncated(H=" + std::to_string(h) + ")"), H(h) {}
  long H;
};

struct ResourceCapError : KmError {
  explicit ResourceCapError(std::size_t cap_)
      : KmError("resource cap exceeded: " + std::to_string(cap_)), cap(cap_) {}
  std::size_t cap;
};

struct NotPrimeError : KmError {
  explicit NotPrimeError(long k) : KmError("NotPrime: k=" + std::to_string(k)) {}
};

struct NotProperError : KmError {
  explicit NotProperError(const std::string& what_) : KmError("NotProper: " + what_) {}
};

/// A named validation condition failed (affine datum, tuple datum, ...).
struct ValidationError : KmError {
  explicit ValidationError(const std::string& condition_)
      : KmError("validation failed: " + condition_), condition(condition_) {}
  std::string condition;
};

}  // namespace kmroots
