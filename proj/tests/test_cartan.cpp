#include "kmroots/cartan.hpp"

#include <doctest.h>

#include <random>

using namespace kmroots;

namespace {

Gcm g244() {
  IntMat m(2, 2);
  m << 2, -4, -1, 2;
  return Gcm::validate(m);
}

Gcm fn_matrix() {
  IntMat m(3, 3);
  m << 2, -1, 0, -1, 2, -2, 0, -2, 2;
  return Gcm::validate(m);
}

}  // namespace

TEST_CASE("validate_gcm") {
  CHECK(g244().rank() == 2);
  IntMat one(1, 1);
  one << 2;
  CHECK(Gcm::validate(one).rank() == 1);

  IntMat bad(2, 2);
  bad << 2, -1, 0, 2;  // zero pattern not symmetric
  CHECK_THROWS_AS(Gcm::validate(bad), NotGcmError);
  try {
    Gcm::validate(bad);
  } catch (const NotGcmError& e) {
    CHECK(((e.i == 1 && e.j == 0) || (e.i == 0 && e.j == 1)));
  }
  bad << 2, 1, 1, 2;
  CHECK_THROWS_AS(Gcm::validate(bad), NotGcmError);
  bad << 3, -1, -1, 2;
  CHECK_THROWS_AS(Gcm::validate(bad), NotGcmError);
}

TEST_CASE("symmetrize") {
  CartanDatum cd = CartanDatum::symmetrize(g244());
  CHECK(cd.d() == std::vector<Int>{1, 4});
  RatMat expect(2, 2);
  expect << 2, -4, -4, 8;
  CHECK(cd.gram() == expect);

  CartanDatum fn = CartanDatum::symmetrize(fn_matrix());
  CHECK(fn.d() == std::vector<Int>{1, 1, 1});
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) CHECK(fn.gram()(i, j) == Rat(fn_matrix().a(i, j)));

  IntMat sym(2, 2);
  sym << 2, -3, -3, 2;
  CHECK(CartanDatum::symmetrize(Gcm::validate(sym)).d() == std::vector<Int>{1, 1});

  // symmetrizable iff products around cycles agree
  IntMat cyc(3, 3);
  cyc << 2, -1, -2, -2, 2, -1, -1, -2, 2;
  CHECK_THROWS_AS(CartanDatum::symmetrize(Gcm::validate(cyc)), NotSymmetrizableError);
}

TEST_CASE("bilinear and pairing") {
  CartanDatum cd = CartanDatum::symmetrize(g244());
  CHECK(cd.norm(make_vec({1, 1})) == 2);
  for (Index i = 0; i < 2; ++i) CHECK(cd.norm(unit_vec(2, i)) == 2 * Rat(cd.d()[i]));

  CartanDatum fn = CartanDatum::symmetrize(fn_matrix());
  CHECK(fn.norm(make_vec({1, 1, 0})) == 2);
  CHECK(fn.pairing(make_vec({1, 1, 0}), unit_vec(3, 2)) == -2);

  // (alpha_j, alpha_i^vee) = a_ij for every GCM
  for (const Gcm& g : {g244(), fn_matrix(), named_gcm("G2"), named_gcm("B3")}) {
    CartanDatum c = CartanDatum::symmetrize(g);
    for (Index i = 0; i < g.rank(); ++i)
      for (Index j = 0; j < g.rank(); ++j)
        CHECK(c.pairing(unit_vec(g.rank(), j), unit_vec(g.rank(), i)) == g.a(i, j));
  }

  CHECK_THROWS_AS(cd.pairing(make_vec({1, 0}), make_vec({0, 0})), ZeroNormError);
  IntVec x(3);
  CHECK_THROWS_AS(cd.bilinear(x, x), RankMismatchError);
}

TEST_CASE("components") {
  IntMat m = IntMat::Zero(2, 2);
  m(0, 0) = m(1, 1) = 2;
  auto comps = components(Gcm::validate(m));
  CHECK(comps.size() == 2);
  CHECK(components(fn_matrix()).size() == 1);

  IntMat blk = IntMat::Zero(3, 3);
  blk(0, 0) = 2;
  blk.block(1, 1, 2, 2) << 2, -4, -1, 2;
  CHECK(components(Gcm::validate(blk)).size() == 2);
}

TEST_CASE("kind detection") {
  auto kind_of = [](const Gcm& g) {
    return kind_indecomposable(CartanDatum::symmetrize(g));
  };
  IntMat a2(2, 2);
  a2 << 2, -1, -1, 2;
  CHECK(kind_of(Gcm::validate(a2)) == MatrixKind::Finite);
  IntMat aff(2, 2);
  aff << 2, -2, -2, 2;
  CHECK(kind_of(Gcm::validate(aff)) == MatrixKind::Affine);
  IntMat hyp(2, 2);
  hyp << 2, -3, -3, 2;
  CHECK(kind_of(Gcm::validate(hyp)) == MatrixKind::Indefinite);
  CHECK(kind_of(named_gcm("G2")) == MatrixKind::Finite);
  CHECK(kind_of(named_gcm("A3~")) == MatrixKind::Affine);
  CHECK(kind_of(named_gcm("C2~")) == MatrixKind::Affine);
  CHECK(kind_of(fn_matrix()) == MatrixKind::Indefinite);
}

TEST_CASE("symmetrize is deterministic and gram symmetric") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(0, 3);
  for (int it = 0; it < 40; ++it) {
    const Index n = 2 + (it % 3);
    IntMat m = IntMat::Zero(n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = 2;
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j) {
        int a = entry(rng), b = entry(rng);
        if (a == 0 || b == 0) a = b = 0;
        m(i, j) = -a;
        m(j, i) = -b;
      }
    Gcm g = Gcm::validate(m);
    try {
      CartanDatum c1(CartanDatum::symmetrize(g)), c2(CartanDatum::symmetrize(g));
      CHECK(c1 == c2);
      for (Index i = 0; i < n; ++i) {
        CHECK(c1.gram()(i, i) == 2 * Rat(c1.d()[i]));
        for (Index j = 0; j < n; ++j) CHECK(c1.gram()(i, j) == c1.gram()(j, i));
      }
    } catch (const NotSymmetrizableError&) {
      // fine: the sample has an inconsistent cycle
    }
  }
}
