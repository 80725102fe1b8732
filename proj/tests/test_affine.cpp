#include "kmroots/affine.hpp"
#include "kmroots/subroot.hpp"

#include <doctest.h>

using namespace kmroots;

namespace {

FiniteRootSystem build(const std::string& label) {
  return FiniteRootSystem::build(CartanDatum::symmetrize(named_gcm(label)));
}

PeriodicComponent comp_of(const FiniteRootSystem& fr, const std::vector<IntVec>& pos, long k,
                          const std::vector<Int>& fvals = {}) {
  PeriodicComponent c;
  for (const IntVec& v : pos) {
    Index id = fr.index_of(v);
    REQUIRE(id >= 0);
    c.roots.insert(id);
    c.roots.insert(fr.neg(id));
  }
  c.k = k;
  c.f = fvals.empty() ? ZLinearFn::zero(fr, c.roots)
                      : ZLinearFn::on_base(fr, c.roots, simple_system(fr, c.roots), fvals);
  return c;
}

PeriodicRootSet full_system(const FiniteRootSystem& fr, long k,
                            const std::vector<Int>& fvals = {}) {
  std::vector<IntVec> pos;
  for (Index i = 0; i < fr.num_positive(); ++i) pos.push_back(fr.root(i));
  return PeriodicRootSet::validate(fr, {comp_of(fr, pos, k, fvals)});
}

}  // namespace

TEST_CASE("membership") {
  FiniteRootSystem a2 = build("A2");
  PeriodicRootSet all = full_system(a2, 1);
  for (Index id = 0; id < a2.count(); ++id)
    for (long m = -4; m <= 4; ++m) CHECK(all.membership(id, m));

  PeriodicRootSet even = full_system(a2, 2);
  Index a1 = a2.index_of(make_vec({1, 0}));
  CHECK(even.membership(a1, 0));
  CHECK(!even.membership(a1, 1));

  // the period-2 A2 block inside A5
  FiniteRootSystem a5 = build("A5");
  PeriodicRootSet s1 = PeriodicRootSet::validate(
      a5, {comp_of(a5, {make_vec({1, 0, 0, 0, 0}), make_vec({0, 1, 0, 0, 0}),
                        make_vec({1, 1, 0, 0, 0})},
                   2)});
  Index al1 = a5.index_of(make_vec({1, 0, 0, 0, 0}));
  CHECK(s1.membership(al1, 2));
  CHECK(!s1.membership(al1, 1));
  CHECK(!s1.membership(a5.index_of(make_vec({0, 0, 0, 1, 0})), 0));
}

TEST_CASE("validate_periodic") {
  FiniteRootSystem a2 = build("A2");
  Index th = a2.index_of(make_vec({1, 1}));
  CHECK_NOTHROW(PeriodicRootSet::validate(a2, {comp_of(a2, {make_vec({1, 1})}, 1)}));

  // Z-linearity forces f(-alpha) = -f(alpha)
  PeriodicRootSet shifted =
      PeriodicRootSet::validate(a2, {comp_of(a2, {make_vec({1, 0})}, 0, {Int(1)})});
  Index a1 = a2.index_of(make_vec({1, 0}));
  CHECK(shifted.membership(a1, 1));
  CHECK(shifted.membership(a2.neg(a1), -1));
  CHECK(!shifted.membership(a1, 0));

  // short roots of G2 are not closed
  FiniteRootSystem g2 = build("G2");
  PeriodicComponent bad;
  for (Index i = 0; i < g2.count(); ++i)
    if (g2.norm(i) == 2) bad.roots.insert(i);
  bad.k = 1;
  bad.f = ZLinearFn::zero(g2, bad.roots);
  CHECK_THROWS_AS(PeriodicRootSet::validate(g2, {bad}), ValidationError);

  // asymmetric component
  PeriodicComponent asym;
  asym.roots = {th};
  asym.k = 1;
  CHECK_THROWS_AS(PeriodicRootSet::validate(a2, {asym}), ValidationError);
}

TEST_CASE("pi_exact") {
  FiniteRootSystem a1 = build("A1");
  PeriodicRootSet full = full_system(a1, 1);
  std::vector<AffineRoot> pi = pi_exact(full);
  REQUIRE(pi.size() == 2);
  CHECK(vec_eq(pi[0].fin, make_vec({1})));
  CHECK(pi[0].level == 0);
  CHECK(vec_eq(pi[1].fin, make_vec({-1})));
  CHECK(pi[1].level == 1);

  PeriodicRootSet single = full_system(a1, 0);
  pi = pi_exact(single);
  REQUIRE(pi.size() == 1);
  CHECK(pi[0].level == 0);

  FiniteRootSystem a2 = build("A2");
  PeriodicRootSet even = full_system(a2, 2);
  pi = pi_exact(even);
  REQUIRE(pi.size() == 3);
  CHECK(vec_eq(pi[0].fin, make_vec({0, 1})));
  CHECK(vec_eq(pi[1].fin, make_vec({1, 0})));
  CHECK(pi[2].level == 2);
  CHECK(vec_eq(pi[2].fin, make_vec({-1, -1})));
}

TEST_CASE("pi_exact orbit closure reproduces the set in a band") {
  FiniteRootSystem a2 = build("A2");
  for (const PeriodicRootSet& psi :
       {full_system(a2, 2), full_system(a2, 3, {Int(1), Int(0)}),
        PeriodicRootSet::validate(a2, {comp_of(a2, {make_vec({1, 1})}, 2, {Int(1)})})}) {
    std::vector<AffineRoot> pi = pi_exact(psi);
    const long band = 9;
    // close the generators under their own reflections within the band
    std::set<std::pair<Index, long>> orbit;
    std::vector<std::pair<Index, long>> work;
    auto push = [&](Index id, long m) {
      if (std::labs(m) > band) return;
      if (orbit.emplace(id, m).second) work.emplace_back(id, m);
    };
    for (const AffineRoot& r : pi) {
      Index id = a2.index_of(r.fin);
      push(id, r.level);
      push(a2.neg(id), -r.level);
    }
    while (!work.empty()) {
      auto [aid, am] = work.back();
      work.pop_back();
      for (auto [bid, bm] : std::vector<std::pair<Index, long>>(orbit.begin(), orbit.end())) {
        long c = a2.pairing(bid, aid);
        push(a2.reflect(aid, bid), bm - c * am);
        long c2 = a2.pairing(aid, bid);
        push(a2.reflect(bid, aid), am - c2 * bm);
      }
    }
    // soundness: the orbit stays inside the set; completeness on a margin
    for (auto [id, m] : orbit) CHECK(psi.membership(id, m));
    for (Index id = 0; id < a2.count(); ++id)
      for (long m = -3; m <= 3; ++m)
        if (psi.membership(id, m)) CHECK(orbit.count({id, m}));
  }
}

TEST_CASE("pi_exact with two components of different periods") {
  FiniteRootSystem a3 = build("A3");
  PeriodicRootSet psi = PeriodicRootSet::validate(
      a3, {comp_of(a3, {make_vec({1, 0, 0})}, 2, {Int(1)}),
           comp_of(a3, {make_vec({0, 0, 1})}, 3)});
  std::vector<AffineRoot> pi = pi_exact(psi);
  REQUIRE(pi.size() == 4);
  CHECK(vec_eq(pi[0].fin, make_vec({0, 0, 1})));
  CHECK(pi[0].level == 0);
  CHECK(vec_eq(pi[1].fin, make_vec({-1, 0, 0})));
  CHECK(pi[1].level == 1);
  CHECK(vec_eq(pi[2].fin, make_vec({1, 0, 0})));
  CHECK(pi[2].level == 1);
  CHECK(vec_eq(pi[3].fin, make_vec({0, 0, -1})));
  CHECK(pi[3].level == 3);
  // the generators lie in the set and generate it back within a band
  for (const AffineRoot& r : pi) CHECK(psi.membership(r));
}

TEST_CASE("maximal_real_closed cases") {
  FiniteRootSystem a2 = build("A2");
  MaximalRealClosed c1 = maximal_real_closed(a2, Case1{2, ZLinearFn::zero(a2, a2.all_ids())});
  CHECK(c1.gradient == Gradient::Full);
  CHECK(c1.psi.components().front().k == 2);
  CHECK_THROWS_AS(maximal_real_closed(a2, Case1{4, ZLinearFn::zero(a2, a2.all_ids())}),
                  NotPrimeError);

  Index th = a2.index_of(make_vec({1, 1}));
  MaximalRealClosed c2 = maximal_real_closed(a2, Case2{RootIdSet{th, a2.neg(th)}});
  CHECK(c2.gradient == Gradient::Proper);
  CHECK(c2.psi.membership(th, -3));
  Index a1 = a2.index_of(make_vec({1, 0}));
  RootIdSet not_max{a1, a2.neg(a1), th, a2.neg(th)};
  CHECK_THROWS_AS(maximal_real_closed(a2, Case2{not_max}), ValidationError);
}

TEST_CASE("periodic integer sets") {
  PeriodicIntSet odd = PeriodicIntSet::make(2, {1});
  CHECK(odd.contains(3));
  CHECK(odd.contains(-5));
  CHECK(!odd.contains(4));
  CHECK(!odd.contains(0));
  CHECK(odd.meets_multiples_of(3));
  CHECK(!odd.meets_multiples_of(2));

  PeriodicIntSet pm1 = PeriodicIntSet::make(1, {}, {1, -1});
  CHECK(pm1.contains(1));
  CHECK(!pm1.contains(2));
  CHECK(!pm1.meets_multiples_of(2));
  CHECK(pm1.meets_multiples_of(1));

  CHECK_THROWS_AS(PeriodicIntSet::make(1, {}, {2}), ValidationError);     // not symmetric
  CHECK_THROWS_AS(PeriodicIntSet::make(1, {0}), ValidationError);        // contains 0
  PeriodicIntSet punctured = PeriodicIntSet::make(2, {0}, {}, {0});
  CHECK(punctured.contains(2));
  CHECK(!punctured.contains(0));
}

TEST_CASE("validate_tuple") {
  FiniteRootSystem a3 = build("A3");
  PeriodicRootSet psi = PeriodicRootSet::validate(a3, {comp_of(a3, {make_vec({1, 1, 1})}, 0)});
  PeriodicIntSet pm1 = PeriodicIntSet::make(1, {}, {1, -1});
  RatMat h(1, 3);
  h << 1, 0, -1;  // orthogonal to theta^vee
  CHECK_NOTHROW(SymRegTuple::validate(psi, pm1, {{0, Subspace(3, h)}}));

  RatMat bad(1, 3);
  bad << 1, 0, 0;
  CHECK_THROWS_AS(SymRegTuple::validate(psi, pm1, {{0, Subspace(3, bad)}}), ValidationError);

  // Lambda meeting k_i Z is rejected
  PeriodicRootSet even = full_system(a3, 2);
  CHECK_THROWS_AS(SymRegTuple::validate(even, PeriodicIntSet::make(2, {0}, {}, {0}), {}),
                  ValidationError);
}

TEST_CASE("tuple_roots") {
  FiniteRootSystem a3 = build("A3");
  Index th = a3.index_of(make_vec({1, 1, 1}));
  PeriodicRootSet psi = PeriodicRootSet::validate(a3, {comp_of(a3, {make_vec({1, 1, 1})}, 0)});
  PeriodicIntSet pm1 = PeriodicIntSet::make(1, {}, {1, -1});
  RatMat h(1, 3);
  h << 1, 0, -1;
  SymRegTuple t = SymRegTuple::validate(psi, pm1, {{0, Subspace(3, h)}});
  TupleRoots r = tuple_roots(t, 3);
  CHECK(r.real == std::set<std::pair<Index, long>>{{th, 0}, {a3.neg(th), 0}});
  CHECK(r.imaginary_levels == std::set<long>{-1, 1});
  CHECK(r.has_central);  // [h t, h t^-1] = (h,h) c with (h,h) > 0

  SymRegTuple derived = derived_algebra_tuple(a3);
  TupleRoots rd = tuple_roots(derived, 2);
  CHECK(rd.real.size() == static_cast<size_t>(a3.count()) * 5);
  CHECK(rd.imaginary_levels == std::set<long>{-2, -1, 1, 2});

  SymRegTuple fg = full_gradient_tuple(a3, 2, ZLinearFn::zero(a3, a3.all_ids()));
  TupleRoots rf = tuple_roots(fg, 4);
  CHECK(rf.imaginary_levels == std::set<long>{-4, -2, 2, 4});
}

TEST_CASE("tuple root sets are symmetric") {
  FiniteRootSystem a3 = build("A3");
  Index th = a3.index_of(make_vec({1, 1, 1}));
  RatMat h(1, 3);
  h << 1, 0, -1;
  for (const SymRegTuple& t :
       {derived_algebra_tuple(a3), full_gradient_tuple(a3, 3, ZLinearFn::zero(a3, a3.all_ids())),
        SymRegTuple::validate(
            PeriodicRootSet::validate(a3, {comp_of(a3, {make_vec({1, 1, 1})}, 0, {Int(2)})}),
            PeriodicIntSet::make(1, {}, {1, -1}), {{0, Subspace(3, h)}})}) {
    TupleRoots r = tuple_roots(t, 5);
    for (const auto& [id, m] : r.real) CHECK(r.real.count({a3.neg(id), -m}));
    for (long x : r.imaginary_levels) CHECK(r.imaginary_levels.count(-x));
  }
}

TEST_CASE("tuple_leq") {
  FiniteRootSystem a2 = build("A2");
  SymRegTuple derived = derived_algebra_tuple(a2);
  SymRegTuple k2 = full_gradient_tuple(a2, 2, ZLinearFn::zero(a2, a2.all_ids()));
  SymRegTuple k3 = full_gradient_tuple(a2, 3, ZLinearFn::zero(a2, a2.all_ids()));
  PeriodicComponent c4;
  c4.roots = a2.all_ids();
  c4.k = 4;
  c4.f = ZLinearFn::zero(a2, c4.roots);
  SymRegTuple k4 = SymRegTuple::validate(PeriodicRootSet::validate(a2, {c4}),
                                         PeriodicIntSet::empty(), {});
  CHECK(tuple_leq(k2, derived));
  CHECK(tuple_leq(k4, k2));
  CHECK(!tuple_leq(k2, k4));
  CHECK(!tuple_leq(k4, k3));
  CHECK(!tuple_leq(k3, k4));

  // distinct proper-gradient tuples are incomparable
  std::vector<RootIdSet> maxima = maximal_closed(a2);
  SymRegTuple p0 = proper_gradient_tuple(a2, maxima[0]);
  SymRegTuple p1 = proper_gradient_tuple(a2, maxima[1]);
  CHECK(!tuple_leq(p0, p1));
  CHECK(!tuple_leq(p1, p0));
  CHECK(tuple_leq(p0, p0));
}

TEST_CASE("is_maximal_tuple and envelope") {
  FiniteRootSystem a2 = build("A2");
  SymRegTuple derived = derived_algebra_tuple(a2);
  CHECK(is_maximal_tuple(derived, false).maximal);
  CHECK_THROWS_AS(is_maximal_tuple(derived, true), NotProperError);

  std::vector<RootIdSet> maxima = maximal_closed(a2);
  for (const RootIdSet& m : maxima) {
    MaximalVerdict v = is_maximal_tuple(proper_gradient_tuple(a2, m), true);
    CHECK(v.maximal);
    CHECK(v.shape == "proper-gradient");
  }
  // the correspondence psi0 -> tuple is injective and tuples are pairwise
  // non-contained
  for (size_t i = 0; i < maxima.size(); ++i)
    for (size_t j = 0; j < maxima.size(); ++j) {
      if (i == j) continue;
      CHECK(!tuple_leq(proper_gradient_tuple(a2, maxima[i]),
                       proper_gradient_tuple(a2, maxima[j])));
    }

  SymRegTuple k2f = full_gradient_tuple(a2, 2, ZLinearFn::on_base(
      a2, a2.all_ids(), simple_system(a2, a2.all_ids()), {Int(1), Int(0)}));
  CHECK(is_maximal_tuple(k2f, true).shape == "full-gradient");

  // a k = 0 full-finite tuple embeds into a full-gradient envelope
  PeriodicComponent c0;
  c0.roots = a2.all_ids();
  c0.k = 0;
  c0.f = ZLinearFn::zero(a2, c0.roots);
  SymRegTuple t0 = SymRegTuple::validate(PeriodicRootSet::validate(a2, {c0}),
                                         PeriodicIntSet::empty(), {});
  CHECK(!is_maximal_tuple(t0, true).maximal);
  SymRegTuple env = maximal_envelope(t0);
  CHECK(tuple_leq(t0, env));
  CHECK(is_maximal_tuple(env, true).maximal);

  // a small subsystem's envelope is a proper-gradient tuple above it
  Index a1 = a2.index_of(make_vec({1, 0}));
  PeriodicComponent small;
  small.roots = {a1, a2.neg(a1)};
  small.k = 2;
  small.f = ZLinearFn::zero(a2, small.roots);
  SymRegTuple ts = SymRegTuple::validate(PeriodicRootSet::validate(a2, {small}),
                                         PeriodicIntSet::empty(), {});
  SymRegTuple env2 = maximal_envelope(ts);
  CHECK(tuple_leq(ts, env2));
  CHECK(is_maximal_tuple(env2, true).shape == "proper-gradient");
}

TEST_CASE("pi_exact agrees with the slice route through the coordinate change") {
  // two independent routes to the canonical generators: exact residue
  // arithmetic on the periodic data vs minimal_elements over the affine
  // root slice, glued by alpha + m delta <-> affine simple coordinates
  FiniteRootSystem a2 = build("A2");
  CartanDatum aff = CartanDatum::symmetrize(named_gcm("A2~"));
  RootSlice slice = RootSlice::enumerate(aff, 10);
  auto to_pair = [&](const IntVec& v) {
    // delta = (1,1,1); finite part = (v1 - v0, v2 - v0), level = v0
    long m = v[0].get_si();
    IntVec fin = make_vec({Int(v[1] - v[0]).get_si(), Int(v[2] - v[0]).get_si()});
    return std::make_pair(fin, m);
  };
  for (const PeriodicRootSet& psi :
       {full_system(a2, 1), full_system(a2, 2), full_system(a2, 3, {Int(1), Int(0)}),
        PeriodicRootSet::validate(a2, {comp_of(a2, {make_vec({1, 1})}, 2, {Int(1)})})}) {
    RootSet materialized(slice);
    for (const IntVec& v : slice.pos_real()) {
      for (const IntVec& w : {IntVec(v), IntVec(-v)}) {
        auto [fin, m] = to_pair(w);
        Index id = a2.index_of(fin);
        if (id >= 0 && psi.membership(id, m)) materialized.insert_checked(w);
      }
    }
    MinimalityReport rep = minimal_elements(materialized);
    CHECK(rep.undecided.empty());
    std::set<std::pair<IntVec, long>, std::less<>> via_slice;
    std::vector<std::pair<IntVec, long>> vs;
    for (const IntVec& v : rep.certified_minimal) {
      auto [fin, m] = to_pair(v);
      vs.emplace_back(fin, m);
    }
    std::vector<AffineRoot> pi = pi_exact(psi);
    REQUIRE(pi.size() == vs.size());
    for (const AffineRoot& r : pi) {
      bool found = false;
      for (auto& [fin, m] : vs) found = found || (vec_eq(fin, r.fin) && m == r.level);
      CHECK(found);
    }
  }
}

TEST_CASE("near-miss shapes are rejected or recognized semantically") {
  // every level full but the finite part is not maximal closed (a single
  // A1 line inside A3 extends to A1 x A1 while staying proper)
  FiniteRootSystem a3 = build("A3");
  Index b1 = a3.index_of(make_vec({1, 0, 0}));
  RatMat rows3(1, 3);
  rows3.row(0) = a3.coroot(b1).transpose();
  Subspace perp3 = Subspace(3, rows3).orthogonal_complement(a3.cartan().coroot_gram());
  PeriodicComponent line3;
  line3.roots = {b1, a3.neg(b1)};
  line3.k = 1;
  line3.f = ZLinearFn::zero(a3, line3.roots);
  SymRegTuple not_max = SymRegTuple::validate(PeriodicRootSet::validate(a3, {line3}),
                                              PeriodicIntSet::empty(), {{0, perp3}});
  CHECK(!is_maximal_closed(a3, line3.roots));
  CHECK(!is_maximal_tuple(not_max, true).maximal);
  SymRegTuple env = maximal_envelope(not_max);
  CHECK(tuple_leq(not_max, env));
  CHECK(!tuple_leq(env, not_max));
  CHECK(is_maximal_tuple(env, true).maximal);

  // maximal closed finite part but odd Cartan levels not filled
  FiniteRootSystem a2 = build("A2");
  Index th = a2.index_of(make_vec({1, 1}));
  PeriodicComponent tline;
  tline.roots = {th, a2.neg(th)};
  tline.k = 1;
  tline.f = ZLinearFn::zero(a2, tline.roots);
  RatMat trows(1, 2);
  trows.row(0) = a2.coroot(th).transpose();
  Subspace tperp = Subspace(2, trows).orthogonal_complement(a2.cartan().coroot_gram());
  std::map<long, Subspace> half{{0, tperp}};  // modulus-2 presentation: only even levels
  SymRegTuple gaps = SymRegTuple::validate(PeriodicRootSet::validate(a2, {tline}),
                                           PeriodicIntSet::make(2, {}), half);
  CHECK(!is_maximal_tuple(gaps, true).maximal);
  CHECK(tuple_leq(gaps, proper_gradient_tuple(a2, tline.roots)));

  // a full-gradient datum presented with a redundant empty Lambda modulus
  // is still recognized as maximal
  PeriodicComponent full;
  full.roots = a2.all_ids();
  full.k = 2;
  full.f = ZLinearFn::zero(a2, full.roots);
  SymRegTuple fg = SymRegTuple::validate(PeriodicRootSet::validate(a2, {full}),
                                         PeriodicIntSet::make(6, {}), {});
  CHECK(is_maximal_tuple(fg, true).maximal);
  CHECK(fg == full_gradient_tuple(a2, 2, ZLinearFn::zero(a2, a2.all_ids())));
}

TEST_CASE("membership agrees with independently generated level sets") {
  FiniteRootSystem a2 = build("A2");
  std::vector<PeriodicRootSet> fixtures{
      full_system(a2, 2), full_system(a2, 3, {Int(1), Int(0)}),
      PeriodicRootSet::validate(a2, {comp_of(a2, {make_vec({1, 1})}, 0, {Int(2)})})};
  for (const PeriodicRootSet& psi : fixtures) {
    long maxk = 1;
    for (const auto& c : psi.components()) maxk = std::max(maxk, c.k);
    const long band = 3 * maxk;
    for (const auto& c : psi.components()) {
      for (Index id : c.roots) {
        std::set<long> levels;
        Int f = c.f(id);
        if (c.k == 0) {
          if (abs(f) <= band) levels.insert(f.get_si());
        } else {
          for (long r = -band; r <= band; ++r) {
            Int lvl = f + c.k * r;
            if (abs(lvl) <= band) levels.insert(lvl.get_si());
          }
        }
        for (long m = -band; m <= band; ++m)
          CHECK(psi.membership(id, m) == static_cast<bool>(levels.count(m)));
      }
    }
  }
}
