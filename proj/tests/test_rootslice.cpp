#include "kmroots/rootslice.hpp"

#include <doctest.h>

#include <random>

using namespace kmroots;

namespace {

CartanDatum cd_of(std::initializer_list<long> entries, Index n) {
  IntMat m(n, n);
  Index i = 0;
  for (long v : entries) {
    m(i / n, i % n) = v;
    ++i;
  }
  return CartanDatum::symmetrize(Gcm::validate(m));
}

CartanDatum cd244() { return cd_of({2, -4, -1, 2}, 2); }
CartanDatum cd_fn() { return cd_of({2, -1, 0, -1, 2, -2, 0, -2, 2}, 3); }

std::mt19937_64 seeded(unsigned long s) { return std::mt19937_64(s); }

Gcm random_symmetrizable_gcm(std::mt19937_64& rng, Index n, int max_entry) {
  std::uniform_int_distribution<int> entry(0, max_entry);
  for (;;) {
    IntMat m = IntMat::Zero(n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = 2;
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j) {
        int a = entry(rng), b = entry(rng);
        if (a == 0 || b == 0) a = b = 0;
        m(i, j) = -a;
        m(j, i) = -b;
      }
    try {
      Gcm g = Gcm::validate(m);
      CartanDatum::symmetrize(g);
      return g;
    } catch (const NotSymmetrizableError&) {
    }
  }
}

}  // namespace

TEST_CASE("enumerate matches the rank-2 closed form") {
  RootSlice slice = RootSlice::enumerate(cd244(), 10);
  std::set<IntVec, HtLexLess> expect;
  auto put = [&](long a, long b) {
    if (a + b <= 10 && a + b >= 1) expect.insert(make_vec({a, b}));
  };
  for (long j = 0; j <= 20; j += 2) {
    put(2 * j, j + 1);
    put(j + 1, j / 2);
  }
  for (long j = 1; j <= 20; j += 2) {
    put(j, (j + 1) / 2);
    put(2 * (j + 1), j);
  }
  CHECK(slice.pos_real() == expect);
}

TEST_CASE("enumerate A2 and finite types have empty imaginary part") {
  RootSlice slice = RootSlice::enumerate(cd_of({2, -1, -1, 2}, 2), 2);
  CHECK(slice.pos_real().size() == 3);
  CHECK(slice.pos_imag().empty());
}

TEST_CASE("fibonacci slice at small height") {
  RootSlice slice = RootSlice::enumerate(cd_of({2, -3, -3, 2}, 2), 30);
  std::set<IntVec, HtLexLess> expect;
  long f[12] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
  for (int j = 0; 2 * j + 2 < 12; ++j) {
    if (f[2 * j] + f[2 * j + 2] <= 30) {
      expect.insert(make_vec({f[2 * j], f[2 * j + 2]}));
      expect.insert(make_vec({f[2 * j + 2], f[2 * j]}));
    }
  }
  CHECK(slice.pos_real() == expect);
}

TEST_CASE("classify") {
  RootSlice fn = RootSlice::enumerate(cd_fn(), 10);
  CHECK(fn.classify(make_vec({1, 1, 1})) == RootClass::Imaginary);  // norm 0
  CHECK(fn.classify(unit_vec(3, 0)) == RootClass::Real);
  CHECK(fn.classify(make_vec({1, 1, 3})) == RootClass::NotARoot);  // gamma2 - gamma1
  CHECK(fn.classify(make_vec({-1, -1, 0})) == RootClass::Real);
  CHECK(fn.classify(make_vec({1, -1, 0})) == RootClass::NotARoot);
  CHECK(fn.classify(make_vec({5, 5, 5})) == RootClass::Unknown);
  CHECK(fn.classify(IntVec::Zero(3)) == RootClass::NotARoot);
}

TEST_CASE("reflect") {
  CartanDatum cd = cd244();
  CHECK(vec_eq(cd.reflect(unit_vec(2, 0), unit_vec(2, 1)), make_vec({4, 1})));
  CHECK(vec_eq(cd.reflect(unit_vec(2, 0), unit_vec(2, 0)), make_vec({-1, 0})));
  CartanDatum all2 = cd_of({2, -2, -2, -2, 2, -2, -2, -2, 2}, 3);
  IntVec g1 = all2.reflect(unit_vec(3, 0), all2.reflect(unit_vec(3, 1), unit_vec(3, 2)));
  CHECK(vec_eq(g1, make_vec({6, 2, 1})));
}

TEST_CASE("root strings") {
  // untwisted affine: the alpha-string through delta
  CartanDatum aff = cd_of({2, -2, -2, 2}, 2);
  RootSlice slice = RootSlice::enumerate(aff, 8);
  RootString s = root_string(slice, make_vec({0, 1}), make_vec({1, 1}));
  REQUIRE(s.members.size() == 3);
  CHECK(s.p == 1);
  CHECK(s.q == 1);
  CHECK(vec_eq(s.members[0], make_vec({1, 0})));
  CHECK(vec_eq(s.members[2], make_vec({1, 2})));
  CHECK(s.real_flags == std::vector<bool>{true, false, true});

  RootSlice fn = RootSlice::enumerate(cd_fn(), 10);
  RootString t = root_string(fn, unit_vec(3, 2), make_vec({1, 1, 0}));
  CHECK(t.p == 0);
  CHECK(t.q == 2);
  CHECK(t.real_flags == std::vector<bool>{true, false, true});

  RootSlice a2 = RootSlice::enumerate(cd_of({2, -1, -1, 2}, 2), 3);
  RootString u = root_string(a2, unit_vec(2, 0), unit_vec(2, 1));
  CHECK(u.p == 0);
  CHECK(u.q == 1);
  CHECK(u.members.size() == 2);

  // endpoints beyond the slice are refused, not guessed
  RootSlice tiny = RootSlice::enumerate(cd_fn(), 2);
  CHECK_THROWS_AS(root_string(tiny, unit_vec(3, 2), make_vec({1, 1, 0})), TruncatedError);
  // strings through multiples of alpha are not defined
  CHECK_THROWS_AS(root_string(a2, unit_vec(2, 0), unit_vec(2, 0)), KmError);
}

TEST_CASE("morita pairs") {
  CHECK(morita_pairs(cd_fn().gcm()).empty());
  IntMat m(2, 2);
  m << 2, -1, -4, 2;
  auto p = morita_pairs(Gcm::validate(m));
  REQUIRE(p.size() == 1);
  CHECK(p[0] == std::make_pair(Index(0), Index(1)));
  m << 2, -2, -2, 2;
  CHECK(morita_pairs(Gcm::validate(m)).empty());
}

TEST_CASE("reflection isometry and involution") {
  std::mt19937_64 rng = seeded(3);
  std::uniform_int_distribution<long> coeff(-4, 4);
  for (const CartanDatum& cd : {cd244(), cd_fn()}) {
    RootSlice slice = RootSlice::enumerate(cd, 8);
    std::vector<IntVec> reals(slice.pos_real().begin(), slice.pos_real().end());
    for (int it = 0; it < 60; ++it) {
      const IntVec& a = reals[rng() % reals.size()];
      IntVec x(cd.rank()), y(cd.rank());
      for (Index i = 0; i < cd.rank(); ++i) {
        x[i] = coeff(rng);
        y[i] = coeff(rng);
      }
      CHECK(cd.bilinear(cd.reflect(a, x), cd.reflect(a, y)) == cd.bilinear(x, y));
      CHECK(vec_eq(cd.reflect(a, cd.reflect(a, x)), x));
    }
  }
}

TEST_CASE("slice soundness and completeness witness") {
  for (const CartanDatum& cd : {cd244(), cd_fn(), cd_of({2, -2, -2, 2}, 2)}) {
    RootSlice slice = RootSlice::enumerate(cd, 9);
    for (const IntVec& b : slice.pos_real()) {
      CHECK(vec_sign(b) == Sign::Positive);
      CHECK(cd.norm(b) > 0);
      if (height(b) == 1) continue;
      // some simple reflection lowers the height and stays in the slice
      bool lowered = false;
      for (Index i = 0; i < cd.rank() && !lowered; ++i) {
        Int p = cd.pairing(b, unit_vec(cd.rank(), i));
        if (p > 0) {
          IntVec img = cd.reflect(unit_vec(cd.rank(), i), b);
          lowered = vec_sign(img) == Sign::Positive &&
                    slice.classify(img) != RootClass::NotARoot;
        }
      }
      CHECK(lowered);
    }
    for (const IntVec& b : slice.pos_imag()) CHECK(cd.norm(b) <= 0);
  }
}

TEST_CASE("string real count bound") {
  std::mt19937_64 rng = seeded(17);
  int checked = 0;
  for (int it = 0; it < 8; ++it) {
    Gcm g = random_symmetrizable_gcm(rng, 2 + (it % 2), 3);
    CartanDatum cd = CartanDatum::symmetrize(g);
    bool no_pairs = morita_pairs(g).empty();
    RootSlice slice = RootSlice::enumerate(cd, 8);
    std::vector<IntVec> reals(slice.pos_real().begin(), slice.pos_real().end());
    for (const IntVec& a : reals) {
      for (const IntVec& b : reals) {
        if (vec_eq(a, b)) continue;
        try {
          RootString s = root_string(slice, a, b);
          CHECK(s.real_count() <= (no_pairs ? 2 : 4));
          ++checked;
        } catch (const TruncatedError&) {
        }
      }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("sums of real roots are never real when all entries <= -2") {
  for (const CartanDatum& cd :
       {cd_of({2, -2, -2, 2}, 2), cd_of({2, -3, -3, 2}, 2),
        cd_of({2, -2, -2, -2, 2, -2, -2, -2, 2}, 3)}) {
    RootSlice slice = RootSlice::enumerate(cd, 8);
    for (const IntVec& a : slice.pos_real())
      for (const IntVec& b : slice.pos_real()) {
        IntVec sum = a + b;
        if (height(sum) <= 8) CHECK(slice.classify(sum) != RootClass::Real);
      }
  }
}

TEST_CASE("resource cap") {
  CHECK_THROWS_AS(RootSlice::enumerate(cd_of({2, -3, -3, 2}, 2), 60, 10), ResourceCapError);
}
