#include "kmroots/json_io.hpp"

namespace kmroots {

namespace {

constexpr long kJsonIntLimit = 1L << 53;

}  // namespace

Json int_to_json(const Int& v) {
  if (v.fits_slong_p()) {
    long l = v.get_si();
    if (l < kJsonIntLimit && l > -kJsonIntLimit) return Json(l);
  }
  return Json(v.get_str());
}

Int json_to_int(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw KmError("expected an integer (number or decimal string)");
}

Json rat_to_json(const Rat& v) {
  if (v.get_den() == 1) return int_to_json(v.get_num());
  return Json(v.get_str());
}

Rat json_to_rat(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    Rat r(j.get<std::string>());
    r.canonicalize();
    return r;
  }
  throw KmError("expected a rational (integer or \"p/q\" string)");
}

Json vec_to_json(const IntVec& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(int_to_json(v[i]));
  return a;
}

IntVec json_to_vec(const Json& j) {
  if (!j.is_array()) throw KmError("expected a coefficient array");
  IntVec v(static_cast<Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v[static_cast<Index>(i)] = json_to_int(j[i]);
  return v;
}

Gcm load_gcm(const Json& j) {
  if (!j.contains("rank") || !j.contains("a")) throw KmError("GCM JSON needs \"rank\" and \"a\"");
  const Index n = j.at("rank").get<Index>();
  const Json& rows = j.at("a");
  if (!rows.is_array() || static_cast<Index>(rows.size()) != n)
    throw KmError("GCM JSON: \"a\" must be a rank x rank array");
  IntMat m(n, n);
  for (Index i = 0; i < n; ++i) {
    if (static_cast<Index>(rows[i].size()) != n) throw KmError("GCM JSON: ragged matrix");
    for (Index k = 0; k < n; ++k) m(i, k) = json_to_int(rows[i][k]);
  }
  return Gcm::validate(m);
}

Json gcm_to_json(const Gcm& g) {
  Json rows = Json::array();
  for (Index i = 0; i < g.rank(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < g.rank(); ++j) row.push_back(int_to_json(g.a(i, j)));
    rows.push_back(row);
  }
  return Json{{"rank", g.rank()}, {"a", rows}};
}

std::vector<IntVec> load_roots(const Json& j, Index expected_rank) {
  if (!j.contains("roots")) throw KmError("root set JSON needs \"roots\"");
  Index rank = j.contains("rank") ? j.at("rank").get<Index>() : expected_rank;
  std::vector<IntVec> out;
  for (const Json& r : j.at("roots")) {
    IntVec v = json_to_vec(r);
    if (rank >= 0 && v.size() != rank) throw KmError("root set JSON: rank mismatch");
    out.push_back(v);
  }
  return out;
}

Json roots_to_json(Index rank, const std::vector<IntVec>& roots) {
  Json arr = Json::array();
  for (const IntVec& r : roots) arr.push_back(vec_to_json(r));
  return Json{{"rank", rank}, {"roots", arr}};
}

std::vector<IntVec> load_pi_gens(const Json& j) {
  if (!j.contains("gens")) throw KmError("pi-system JSON needs \"gens\"");
  std::vector<IntVec> out;
  for (const Json& g : j.at("gens")) out.push_back(json_to_vec(g));
  return out;
}

Json report_json(const std::string& status, const std::vector<std::string>& witnesses) {
  Json w = Json::array();
  for (const std::string& s : witnesses) w.push_back(s);
  return Json{{"status", status}, {"witnesses", w}};
}

AffineDatum load_affine_datum(const Json& j) {
  Gcm g = j.contains("finite_type") ? named_gcm(j.at("finite_type").get<std::string>())
                                    : load_gcm(j.at("gcm"));
  auto fr = std::make_shared<const FiniteRootSystem>(
      FiniteRootSystem::build(CartanDatum::symmetrize(g)));

  std::vector<PeriodicComponent> comps;
  for (const Json& cj : j.value("components", Json::array())) {
    PeriodicComponent c;
    RootIdSet ids;
    for (const Json& r : cj.at("roots")) {
      IntVec v = json_to_vec(r);
      Index id = fr->index_of(v);
      if (id < 0) throw KmError("affine datum: " + to_string(v) + " is not a finite root");
      ids.insert(id);
      ids.insert(fr->neg(id));
    }
    c.roots = ids;
    c.k = cj.at("k").get<long>();
    std::vector<Index> base;
    std::vector<Int> values;
    if (cj.contains("f_base")) {
      for (const Json& b : cj.at("f_base")) {
        Index id = fr->index_of(json_to_vec(b));
        if (id < 0) throw KmError("affine datum: f base entry is not a root");
        base.push_back(id);
      }
      for (const Json& v : cj.at("f_values")) values.push_back(json_to_int(v));
      c.f = ZLinearFn::on_base(*fr, ids, base, values);
    } else {
      c.f = ZLinearFn::zero(*fr, ids);
    }
    comps.push_back(std::move(c));
  }
  PeriodicRootSet psi = PeriodicRootSet::validate(*fr, std::move(comps));

  PeriodicIntSet lambda = PeriodicIntSet::empty();
  if (j.contains("lambda")) {
    const Json& lj = j.at("lambda");
    std::set<long> residues, add, remove;
    for (const Json& r : lj.value("residues", Json::array())) residues.insert(r.get<long>());
    for (const Json& r : lj.value("add", Json::array())) add.insert(r.get<long>());
    for (const Json& r : lj.value("remove", Json::array())) remove.insert(r.get<long>());
    lambda = PeriodicIntSet::make(lj.value("modulus", 1L), residues, add, remove);
  }
  std::map<long, Subspace> v;
  for (const Json& vj : j.value("v", Json::array())) {
    RatMat rows(static_cast<Index>(vj.at("basis").size()), fr->rank());
    Index r = 0;
    for (const Json& row : vj.at("basis")) {
      for (Index i = 0; i < fr->rank(); ++i) rows(r, i) = json_to_rat(row[i]);
      ++r;
    }
    long residue = vj.at("residue").get<long>();
    Subspace sub(fr->rank(), rows);
    auto [it, fresh] = v.emplace(residue, sub);
    if (!fresh) it->second = it->second.sum(sub);
  }
  SymRegTuple tuple = SymRegTuple::validate(psi, lambda, std::move(v));
  return AffineDatum{std::move(fr), std::move(psi), std::move(tuple)};
}

Json affine_datum_to_json(const AffineDatum& d) {
  const FiniteRootSystem& fr = *d.fr;
  Json comps = Json::array();
  for (const PeriodicComponent& c : d.psi.components()) {
    Json roots = Json::array();
    for (Index id : c.roots) roots.push_back(vec_to_json(fr.root(id)));
    Json base = Json::array(), values = Json::array();
    for (Index id : c.f.base()) base.push_back(vec_to_json(fr.root(id)));
    for (const Int& v : c.f.base_values()) values.push_back(int_to_json(v));
    comps.push_back(Json{
        {"roots", roots}, {"k", c.k}, {"f_base", base}, {"f_values", values}});
  }
  const PeriodicIntSet& l = d.tuple.lambda();
  Json lambda{{"modulus", l.modulus()},
              {"residues", Json(l.residues())},
              {"add", Json(l.added())},
              {"remove", Json(l.removed())}};
  Json v = Json::array();
  for (const auto& [residue, sub] : d.tuple.v_map()) {
    Json basis = Json::array();
    for (Index r = 0; r < sub.basis().rows(); ++r) {
      Json row = Json::array();
      for (Index i = 0; i < sub.ambient_dim(); ++i) row.push_back(rat_to_json(sub.basis()(r, i)));
      basis.push_back(row);
    }
    v.push_back(Json{{"residue", residue}, {"basis", basis}});
  }
  return Json{{"gcm", gcm_to_json(fr.cartan().gcm())},
              {"components", comps},
              {"lambda", lambda},
              {"v", v}};
}

LoopElement load_loop_element(const Json& j, const FiniteRootSystem& fr) {
  LoopElement e;
  for (const Json& t : j.at("terms")) {
    std::string kind = t.at("kind").get<std::string>();
    Rat coef = t.contains("coef") ? json_to_rat(t.at("coef")) : Rat(1);
    long r = t.value("r", 0L);
    if (kind == "X") {
      Index id = fr.index_of(json_to_vec(t.at("root")));
      if (id < 0) throw KmError("loop element: X term root is not a root");
      e += LoopElement::x(id, r, coef);
    } else if (kind == "H") {
      e += LoopElement::h(t.at("i").get<Index>(), r, coef);
    } else if (kind == "C") {
      e += LoopElement::c(coef);
    } else if (kind == "D") {
      e += LoopElement::d(coef);
    } else {
      throw KmError("loop element: unknown term kind " + kind);
    }
  }
  return e;
}

Json loop_element_to_json(const LoopElement& e, const FiniteRootSystem& fr) {
  Json terms = Json::array();
  for (const auto& [k, c] : e.terms()) {
    Json t{{"coef", rat_to_json(c)}};
    switch (k.kind) {
      case LoopKey::Kind::X:
        t["kind"] = "X";
        t["root"] = vec_to_json(fr.root(k.idx));
        t["r"] = k.r;
        break;
      case LoopKey::Kind::H:
        t["kind"] = "H";
        t["i"] = k.idx;
        t["r"] = k.r;
        break;
      case LoopKey::Kind::C:
        t["kind"] = "C";
        break;
      case LoopKey::Kind::D:
        t["kind"] = "D";
        break;
    }
    terms.push_back(t);
  }
  return Json{{"terms", terms}};
}

}  // namespace kmroots
