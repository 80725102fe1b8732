// JSON schemas shared by the library and the CLI:
//   GCM           {"rank": n, "a": [[...]]}
//   root set      {"rank": n, "roots": [[c1,...,cn], ...]}
//   pi-system     {"gens": [[...], ...]}
//   report        {"status": "pass|fail|undecided", "witnesses": [...]}
//   affine datum  {"finite_type": "A2", "components": [{"roots": [...],
//                  "k": 2, "f_base": [...], "f_values": [...]}],
//                  "lambda": {"modulus": L, "residues": [...],
//                             "add": [...], "remove": [...]},
//                  "v": [{"residue": r, "basis": [[rationals]]}]}
//   loop element  {"terms": [{"kind": "X|H|C|D", "root": [...], "i": idx,
//                  "r": level, "coef": "p/q"}]}

#pragma once

#include "kmroots/affine.hpp"
#include "kmroots/loop.hpp"
#include "kmroots/subroot.hpp"

#include <json.hpp>

#include <memory>

namespace kmroots {

using Json = nlohmann::json;

Json int_to_json(const Int& v);
Int json_to_int(const Json& j);
Json rat_to_json(const Rat& v);
Rat json_to_rat(const Json& j);

Json vec_to_json(const IntVec& v);
IntVec json_to_vec(const Json& j);

Gcm load_gcm(const Json& j);
Json gcm_to_json(const Gcm& g);

std::vector<IntVec> load_roots(const Json& j, Index expected_rank = -1);
Json roots_to_json(Index rank, const std::vector<IntVec>& roots);

std::vector<IntVec> load_pi_gens(const Json& j);

Json report_json(const std::string& status, const std::vector<std::string>& witnesses);

/// Owns the finite root system the loaded structures point into.
struct AffineDatum {
  std::shared_ptr<const FiniteRootSystem> fr;
  PeriodicRootSet psi;
  SymRegTuple tuple;  // lambda and v default to empty when absent
};

AffineDatum load_affine_datum(const Json& j);
Json affine_datum_to_json(const AffineDatum& d);

LoopElement load_loop_element(const Json& j, const FiniteRootSystem& fr);
Json loop_element_to_json(const LoopElement& e, const FiniteRootSystem& fr);

}  // namespace kmroots
