#include "kmroots/finite.hpp"

#include <doctest.h>

using namespace kmroots;

namespace {

FiniteRootSystem build(const std::string& label) {
  return FiniteRootSystem::build(CartanDatum::symmetrize(named_gcm(label)));
}

}  // namespace

TEST_CASE("root counts") {
  CHECK(build("A2").count() == 6);
  CHECK(build("A5").count() == 30);
  CHECK(build("B2").count() == 8);
  CHECK(build("D4").count() == 24);
  FiniteRootSystem g2 = build("G2");
  CHECK(g2.count() == 12);
  int shorts = 0;
  for (Index i = 0; i < g2.count(); ++i) shorts += g2.norm(i) == 2;
  CHECK(shorts == 6);
  CHECK_THROWS_AS(build("A2~"), KmError);
}

TEST_CASE("tables") {
  FiniteRootSystem a2 = build("A2");
  Index a1 = a2.index_of(make_vec({1, 0})), th = a2.index_of(make_vec({1, 1}));
  CHECK(a2.sum(a1, a2.index_of(make_vec({0, 1}))) == th);
  CHECK(a2.sum(a1, a1) == -1);
  CHECK(a2.neg(a2.neg(a1)) == a1);
  CHECK(a2.pairing(th, a1) == 1);
  CHECK(a2.reflect(a1, th) == a2.index_of(make_vec({0, 1})));
  CHECK(a2.string_down(a1, th) == 1);
  CHECK(a2.highest_roots() == std::vector<Index>{th});

  FiniteRootSystem g2 = build("G2");
  Index s = g2.index_of(make_vec({0, 1}));
  Index l = g2.index_of(make_vec({1, 0}));
  CHECK(g2.string_down(s, l) == 0);
  CHECK(g2.sum(l, s) >= 0);
  // the alpha2-string through alpha1 has length 4 in G2
  Index cur = l;
  int len = 1;
  while (g2.sum(cur, s) >= 0) {
    cur = g2.sum(cur, s);
    ++len;
  }
  CHECK(len == 4);
}

TEST_CASE("coroots") {
  FiniteRootSystem g2 = build("G2");
  // long root coroots are primitive: alpha1^vee has coordinates (1, 0)
  Index l = g2.index_of(make_vec({1, 0}));
  CHECK(g2.coroot(l)[0] == 1);
  CHECK(g2.coroot(l)[1] == 0);
  Index th = g2.highest_roots()[0];
  CHECK(vec_eq(g2.root(th), make_vec({2, 3})));
}

TEST_CASE("finite_closure") {
  FiniteRootSystem a2 = build("A2");
  Index th = a2.index_of(make_vec({1, 1}));
  RootIdSet theta{th, a2.neg(th)};
  CHECK(finite_closure(a2, theta) == theta);

  Index a1 = a2.index_of(make_vec({1, 0})), b1 = a2.index_of(make_vec({0, 1}));
  RootIdSet both{a1, a2.neg(a1), b1, a2.neg(b1)};
  CHECK(static_cast<Index>(finite_closure(a2, both).size()) == 6);
  CHECK(finite_closure(a2, a2.all_ids()) == a2.all_ids());
}

TEST_CASE("simple systems and components of subsets") {
  FiniteRootSystem a3 = build("A3");
  Index a1 = a3.index_of(make_vec({1, 0, 0})), a3r = a3.index_of(make_vec({0, 0, 1}));
  RootIdSet two{a1, a3.neg(a1), a3r, a3.neg(a3r)};
  CHECK(is_closed_subroot_system(a3, two));
  auto comps = irreducible_components(a3, two);
  CHECK(comps.size() == 2);
  auto simples = simple_system(a3, two);
  CHECK(simples.size() == 2);

  // positive span of the full system recovers the simple roots
  auto all_simressed = simple_system(a3, a3.all_ids());
  CHECK(all_simressed.size() == 3);
}

TEST_CASE("maximal closed oracle") {
  FiniteRootSystem a1 = build("A1");
  CHECK(maximal_closed(a1).empty());

  FiniteRootSystem a2 = build("A2");
  std::vector<RootIdSet> maxima = maximal_closed(a2);
  CHECK(maxima.size() == 3);
  for (const RootIdSet& m : maxima) CHECK(m.size() == 2);

  FiniteRootSystem b2 = build("B2");
  // the long-root A1 x A1 subsystem is maximal closed
  RootIdSet longs;
  for (Index i = 0; i < b2.count(); ++i)
    if (b2.norm(i) == 4) longs.insert(i);
  CHECK(longs.size() == 4);
  CHECK(is_maximal_closed(b2, longs));
  bool found = false;
  for (const RootIdSet& m : maximal_closed(b2)) found = found || m == longs;
  CHECK(found);

  CHECK_THROWS_AS(is_maximal_closed(a2, a2.all_ids()), NotProperError);

  // every reported maximal system certifies, every one-pair extension closes up
  for (const RootIdSet& m : maximal_closed(build("G2"))) {
    CHECK(is_closed_subroot_system(build("G2"), m));
    CHECK(is_maximal_closed(build("G2"), m));
  }
}
