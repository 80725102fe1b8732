#include "kmroots/json_io.hpp"

#include <doctest.h>

using namespace kmroots;

TEST_CASE("gcm json round trip") {
  Json j = Json::parse(R"({"rank": 2, "a": [[2, -4], [-1, 2]]})");
  Gcm g = load_gcm(j);
  CHECK(g.a(0, 1) == -4);
  CHECK(load_gcm(gcm_to_json(g)) == g);
  CHECK_THROWS_AS(load_gcm(Json::parse(R"({"rank": 2, "a": [[2, 1], [1, 2]]})")), NotGcmError);
  CHECK_THROWS_AS(load_gcm(Json::parse(R"({"rank": 2})")), KmError);
}

TEST_CASE("big integers survive the round trip") {
  Int big("123456789012345678901234567890");
  Json j = int_to_json(big);
  CHECK(j.is_string());
  CHECK(json_to_int(j) == big);
  CHECK(json_to_int(int_to_json(Int(-7))) == -7);
  CHECK(json_to_rat(rat_to_json(make_rat(22, -8))) == make_rat(-11, 4));
}

TEST_CASE("root sets and pi systems") {
  Json j = Json::parse(R"({"rank": 2, "roots": [[1, 0], [0, 1], [1, 1]]})");
  std::vector<IntVec> roots = load_roots(j);
  CHECK(roots.size() == 3);
  Json back = roots_to_json(2, roots);
  CHECK(load_roots(back).size() == 3);
  CHECK(load_pi_gens(Json::parse(R"({"gens": [[1, 0]]})")).size() == 1);
}

TEST_CASE("affine datum round trip") {
  Json j = Json::parse(R"({
    "finite_type": "A3",
    "components": [{"roots": [[1, 1, 1]], "k": 0, "f_base": [[1, 1, 1]], "f_values": [0]}],
    "lambda": {"modulus": 1, "residues": [], "add": [1, -1], "remove": []},
    "v": [{"residue": 0, "basis": [[1, 0, -1]]}]
  })");
  AffineDatum d = load_affine_datum(j);
  CHECK(d.psi.components().size() == 1);
  CHECK(d.tuple.lambda().contains(1));
  CHECK(d.tuple.v_at(1).dim() == 1);
  TupleRoots r = tuple_roots(d.tuple, 2);
  CHECK(r.imaginary_levels == std::set<long>{-1, 1});

  Json back = affine_datum_to_json(d);
  AffineDatum d2 = load_affine_datum(back);
  CHECK(tuple_roots(d2.tuple, 2).imaginary_levels == r.imaginary_levels);
  // identical dumps across a reload: reports must be byte-stable
  CHECK(affine_datum_to_json(d2).dump() == back.dump());
}

TEST_CASE("loop element json") {
  FiniteRootSystem fr = FiniteRootSystem::build(CartanDatum::symmetrize(named_gcm("A2")));
  Json j = Json::parse(R"({"terms": [
    {"kind": "X", "root": [1, 1], "r": 2, "coef": "3/2"},
    {"kind": "H", "i": 0, "r": -2},
    {"kind": "C"},
    {"kind": "D", "coef": -1}
  ]})");
  LoopElement e = load_loop_element(j, fr);
  CHECK(e.terms().size() == 4);
  LoopElement e2 = load_loop_element(loop_element_to_json(e, fr), fr);
  CHECK(e == e2);
  CHECK_THROWS_AS(load_loop_element(Json::parse(R"({"terms": [{"kind": "X", "root": [2, 0]}]})"),
                                    fr),
                  KmError);
}
