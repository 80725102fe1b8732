// kmroots command-line front end.
//
// Exit codes: 0 success/pass, 1 mathematical refutation or failed check,
// 2 input error, 3 truncation/undecided under --strict.

#include "kmroots/examples_suite.hpp"
#include "kmroots/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace kmroots;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInput = 2;
constexpr int kExitUndecided = 3;

struct Options {
  long height = 20;
  long band = 6;
  bool strict = false;
  std::size_t max_gens = 6;
  unsigned long seed = 0;  // reserved for sampled searches
  bool json = false;
  bool pretty = false;

  bool want_json() const { return json && !pretty; }
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw KmError("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

Gcm gcm_from_flags(const std::string& file, const std::string& type) {
  if (!type.empty()) return named_gcm(type);
  if (file.empty()) throw KmError("one of --gcm or --type is required");
  return load_gcm(read_json_file(file));
}

IntVec parse_vec(const std::string& s, Index rank) {
  IntVec v = IntVec::Zero(rank);
  std::stringstream ss(s);
  std::string tok;
  Index i = 0;
  while (std::getline(ss, tok, ',')) {
    if (i >= rank) throw KmError("coefficient list longer than the rank");
    v[i++] = Int(tok);
  }
  if (i != rank) throw KmError("coefficient list shorter than the rank");
  return v;
}

void emit(const Options& opt, const Json& j, const std::string& pretty_text) {
  if (opt.want_json())
    std::cout << j.dump() << "\n";
  else
    std::cout << pretty_text << "\n";
}

int undecided_exit(const Options& opt) { return opt.strict ? kExitUndecided : kExitOk; }

int cmd_roots(const Options& opt, const std::string& gcm_file, const std::string& type) {
  CartanDatum cd = CartanDatum::symmetrize(gcm_from_flags(gcm_file, type));
  RootSlice slice = RootSlice::enumerate(cd, opt.height);
  Json real = Json::array(), imag = Json::array();
  std::ostringstream text;
  text << "positive real roots (height <= " << opt.height << "):\n";
  for (const IntVec& v : slice.pos_real()) {
    real.push_back(vec_to_json(v));
    text << "  " << to_string(v) << "\n";
  }
  text << "positive imaginary roots: " << slice.pos_imag().size() << "\n";
  for (const IntVec& v : slice.pos_imag()) imag.push_back(vec_to_json(v));
  emit(opt,
       Json{{"rank", cd.rank()}, {"height", opt.height}, {"real", real}, {"imaginary", imag}},
       text.str());
  return kExitOk;
}

int cmd_classify(const Options& opt, const std::string& gcm_file, const std::string& type,
                 const std::string& root) {
  CartanDatum cd = CartanDatum::symmetrize(gcm_from_flags(gcm_file, type));
  RootSlice slice = RootSlice::enumerate(cd, opt.height);
  IntVec v = parse_vec(root, cd.rank());
  RootClass c = slice.classify(v);
  emit(opt, Json{{"root", vec_to_json(v)}, {"class", to_string(c)}},
       to_string(v) + ": " + to_string(c));
  return c == RootClass::Unknown ? undecided_exit(opt) : kExitOk;
}

int cmd_string(const Options& opt, const std::string& gcm_file, const std::string& type,
               const std::string& alpha, const std::string& beta) {
  CartanDatum cd = CartanDatum::symmetrize(gcm_from_flags(gcm_file, type));
  RootSlice slice = RootSlice::enumerate(cd, opt.height);
  try {
    RootString s = root_string(slice, parse_vec(alpha, cd.rank()), parse_vec(beta, cd.rank()));
    Json members = Json::array();
    std::ostringstream text;
    text << "p=" << s.p << " q=" << s.q << "\n";
    for (size_t i = 0; i < s.members.size(); ++i) {
      members.push_back(Json{{"root", vec_to_json(s.members[i])},
                             {"real", static_cast<bool>(s.real_flags[i])}});
      text << "  " << to_string(s.members[i]) << (s.real_flags[i] ? "  real" : "  imaginary")
           << "\n";
    }
    emit(opt, Json{{"p", s.p}, {"q", s.q}, {"members", members}}, text.str());
    return kExitOk;
  } catch (const TruncatedError& e) {
    emit(opt, report_json("undecided", {e.what()}), std::string("undecided: ") + e.what());
    return undecided_exit(opt);
  }
}

int cmd_pi_of(const Options& opt, const std::string& gcm_file, const std::string& type,
              const std::string& psi_file) {
  CartanDatum cd = CartanDatum::symmetrize(gcm_from_flags(gcm_file, type));
  RootSlice slice = RootSlice::enumerate(cd, opt.height);
  RootSet psi = RootSet::of(slice, load_roots(read_json_file(psi_file), cd.rank()));
  BijectionReport rep = verify_bijection(psi, opt.max_gens);
  Json mins = Json::array(), und = Json::array(), alts = Json::array();
  std::ostringstream text;
  text << "canonical generators:\n";
  for (const IntVec& v : rep.pi) {
    mins.push_back(vec_to_json(v));
    text << "  " << to_string(v) << "\n";
  }
  for (const IntVec& v : rep.minimality.undecided) und.push_back(vec_to_json(v));
  if (!rep.minimality.undecided.empty())
    text << "undecided candidates: " << rep.minimality.undecided.size() << "\n";
  for (const auto& gens : rep.generating_pi_systems) {
    Json g = Json::array();
    for (const IntVec& v : gens) g.push_back(vec_to_json(v));
    alts.push_back(g);
  }
  text << "round trip: " << rep.status << "; generating systems found within the slice: "
       << rep.generating_pi_systems.size();
  for (const std::string& n : rep.notes) text << "\n  note: " << n;
  emit(opt,
       Json{{"minimal", mins},
            {"undecided", und},
            {"status", rep.status},
            {"generating_pi_systems", alts}},
       text.str());
  if (rep.status == "fail") return kExitRefuted;
  return rep.status == "pass" ? kExitOk : undecided_exit(opt);
}

int cmd_pisystem(const Options& opt, const std::string& gcm_file, const std::string& type,
                 const std::string& gens_file) {
  CartanDatum cd = CartanDatum::symmetrize(gcm_from_flags(gcm_file, type));
  RootSlice slice = RootSlice::enumerate(cd, opt.height);
  auto [ps, pc] = make_pi_system(load_pi_gens(read_json_file(gens_file)), slice);
  switch (pc.status) {
    case PiCheckResult::Status::Certified:
      emit(opt, report_json("pass", {}), "Certified");
      return kExitOk;
    case PiCheckResult::Status::Refuted: {
      std::string w = to_string(*pc.witness_a) + " - " + to_string(*pc.witness_b) + " = " +
                      to_string(*pc.witness_diff) + " is a root";
      emit(opt, report_json("fail", {w}), "Refuted: " + w);
      return kExitRefuted;
    }
    case PiCheckResult::Status::Undecided:
      emit(opt, report_json("undecided", {}), "Undecided");
      return undecided_exit(opt);
  }
  return kExitInput;
}

int cmd_bsigma(const Options& opt, const std::string& gcm_file, const std::string& type,
               const std::string& gens_file) {
  CartanDatum cd = CartanDatum::symmetrize(gcm_from_flags(gcm_file, type));
  RootSlice slice = RootSlice::enumerate(cd, opt.height);
  auto [ps, pc] = make_pi_system(load_pi_gens(read_json_file(gens_file)), slice);
  InducedGcm b = b_sigma(ps, cd);
  Json labels = Json::array();
  for (const IntVec& g : b.labels) labels.push_back(vec_to_json(g));
  std::ostringstream text;
  for (Index i = 0; i < b.gcm.rank(); ++i) {
    for (Index j = 0; j < b.gcm.rank(); ++j) text << b.gcm.a(i, j) << (j + 1 < b.gcm.rank() ? " " : "");
    text << "\n";
  }
  emit(opt, Json{{"gcm", gcm_to_json(b.gcm)}, {"labels", labels}}, text.str());
  return kExitOk;
}

int cmd_orbit(const Options& opt, const std::string& gcm_file, const std::string& type,
              const std::string& gens_file) {
  CartanDatum cd = CartanDatum::symmetrize(gcm_from_flags(gcm_file, type));
  RootSlice slice = RootSlice::enumerate(cd, opt.height);
  auto [ps, pc] = make_pi_system(load_pi_gens(read_json_file(gens_file)), slice);
  OrbitResult orb = orbit(ps, slice);
  std::vector<IntVec> members(orb.set.members().begin(), orb.set.members().end());
  Json j = roots_to_json(cd.rank(), members);
  j["truncated"] = orb.truncated;
  std::ostringstream text;
  text << "orbit size " << members.size() << (orb.truncated ? " (truncated)" : "") << "\n";
  for (const IntVec& v : members) text << "  " << to_string(v) << "\n";
  emit(opt, j, text.str());
  return orb.truncated ? undecided_exit(opt) : kExitOk;
}

int cmd_affine_validate(const Options& opt, const std::string& datum_file) {
  try {
    AffineDatum d = load_affine_datum(read_json_file(datum_file));
    emit(opt, report_json("pass", {}), "valid periodic datum");
    return kExitOk;
  } catch (const ValidationError& e) {
    emit(opt, report_json("fail", {e.condition}), std::string("invalid: ") + e.condition);
    return kExitRefuted;
  }
}

int cmd_affine_pi(const Options& opt, const std::string& datum_file) {
  AffineDatum d = load_affine_datum(read_json_file(datum_file));
  std::vector<AffineRoot> pi = pi_exact(d.psi);
  Json arr = Json::array();
  std::ostringstream text;
  text << "canonical generators (exact):\n";
  for (const AffineRoot& r : pi) {
    arr.push_back(Json{{"fin", vec_to_json(r.fin)}, {"level", r.level}});
    text << "  " << to_string(r) << "\n";
  }
  emit(opt, Json{{"pi", arr}}, text.str());
  return kExitOk;
}

int cmd_affine_maximal(const Options& opt, const std::string& gcm_file, const std::string& type,
                       long case1_k, const std::string& case1_f, const std::string& case2_file) {
  CartanDatum cd = CartanDatum::symmetrize(gcm_from_flags(gcm_file, type));
  FiniteRootSystem fr = FiniteRootSystem::build(cd);
  auto psi_to_json = [&](const PeriodicRootSet& psi, Gradient g) {
    AffineDatum d{nullptr, psi,
                  SymRegTuple::validate(psi, PeriodicIntSet::empty(), {})};
    Json j = Json{{"components", Json::array()}};
    for (const PeriodicComponent& c : psi.components()) {
      Json roots = Json::array();
      for (Index id : c.roots) roots.push_back(vec_to_json(fr.root(id)));
      Json base = Json::array(), values = Json::array();
      for (Index id : c.f.base()) base.push_back(vec_to_json(fr.root(id)));
      for (const Int& v : c.f.base_values()) values.push_back(int_to_json(v));
      j["components"].push_back(
          Json{{"roots", roots}, {"k", c.k}, {"f_base", base}, {"f_values", values}});
    }
    j["gradient"] = g == Gradient::Full ? "full" : "proper";
    return j;
  };
  if (case1_k > 0) {
    std::vector<Index> base;
    std::vector<Int> values;
    for (Index i = 0; i < fr.rank(); ++i) base.push_back(fr.index_of(unit_vec(fr.rank(), i)));
    if (!case1_f.empty()) {
      IntVec v = parse_vec(case1_f, fr.rank());
      for (Index i = 0; i < fr.rank(); ++i) values.push_back(v[i]);
    } else {
      values.assign(fr.rank(), Int(0));
    }
    MaximalRealClosed m = maximal_real_closed(
        fr, Case1{case1_k, ZLinearFn::on_base(fr, fr.all_ids(), base, values)});
    emit(opt, psi_to_json(m.psi, m.gradient), "full-gradient maximal real closed subroot system");
    return kExitOk;
  }
  if (!case2_file.empty()) {
    RootIdSet psi0 = fr.ids_of(load_roots(read_json_file(case2_file), fr.rank()));
    RootIdSet sym = psi0;
    for (Index id : psi0) sym.insert(fr.neg(id));
    MaximalRealClosed m = maximal_real_closed(fr, Case2{sym});
    emit(opt, psi_to_json(m.psi, m.gradient), "proper-gradient maximal real closed subroot system");
    return kExitOk;
  }
  // no case flags: list the maximal closed subroot systems of the finite part
  std::vector<RootIdSet> maxima = maximal_closed(fr);
  Json arr = Json::array();
  std::ostringstream text;
  text << maxima.size() << " maximal closed subroot systems:\n";
  for (const RootIdSet& s : maxima) {
    Json roots = Json::array();
    text << "  {";
    bool first = true;
    for (Index id : s) {
      roots.push_back(vec_to_json(fr.root(id)));
      if (fr.is_positive(id)) {
        text << (first ? "" : ", ") << to_string(fr.root(id));
        first = false;
      }
    }
    text << "} (with negatives)\n";
    arr.push_back(Json{{"roots", roots}});
  }
  emit(opt, Json{{"maximal_closed", arr}}, text.str());
  return kExitOk;
}

int cmd_tuple_validate(const Options& opt, const std::string& datum_file) {
  try {
    AffineDatum d = load_affine_datum(read_json_file(datum_file));
    emit(opt, report_json("pass", {}), "valid tuple");
    return kExitOk;
  } catch (const ValidationError& e) {
    emit(opt, report_json("fail", {e.condition}), std::string("invalid: ") + e.condition);
    return kExitRefuted;
  }
}

int cmd_tuple_maximal(const Options& opt, const std::string& datum_file, bool with_d) {
  AffineDatum d = load_affine_datum(read_json_file(datum_file));
  try {
    MaximalVerdict v = is_maximal_tuple(d.tuple, with_d);
    Json j{{"maximal", v.maximal}, {"shape", v.shape}, {"reason", v.reason}};
    emit(opt, j,
         std::string(v.maximal ? "maximal" : "not maximal") +
             (v.shape.empty() ? "" : " (" + v.shape + ")") + ": " + v.reason);
    return kExitOk;
  } catch (const NotProperError& e) {
    emit(opt, report_json("fail", {e.what()}), e.what());
    return kExitRefuted;
  }
}

int cmd_loop_generate(const Options& opt, const std::string& gcm_file, const std::string& type,
                      const std::string& gens_file) {
  CartanDatum cd = CartanDatum::symmetrize(gcm_from_flags(gcm_file, type));
  FiniteRootSystem fr = FiniteRootSystem::build(cd);
  ChevalleyBasis cb = ChevalleyBasis::build(fr);
  Json gj = read_json_file(gens_file);
  std::vector<LoopElement> gens;
  for (const Json& g : gj.at("elements")) gens.push_back(load_loop_element(g, fr));
  SubalgebraSlice s = generate(cb, gens, opt.band);
  SupportReport sup = root_support(s);
  Json real = Json::array();
  std::ostringstream text;
  text << "real support:\n";
  for (const auto& [id, lvl] : sup.real) {
    real.push_back(Json{{"fin", vec_to_json(fr.root(id))}, {"level", lvl}});
    text << "  " << to_string(fr.root(id)) << " @ " << lvl << "\n";
  }
  text << "imaginary levels:";
  Json imag = Json::array();
  for (long x : sup.imaginary_levels) {
    imag.push_back(x);
    text << " " << x;
  }
  text << "\ncentral element: " << (sup.has_central ? "yes" : "no");
  if (sup.boundary_hit) text << "\n(products were discarded at the band boundary)";
  emit(opt,
       Json{{"real", real},
            {"imaginary_levels", imag},
            {"central", sup.has_central},
            {"boundary_hit", sup.boundary_hit}},
       text.str());
  return kExitOk;
}

int cmd_loop_verify(const Options& opt, const std::string& datum_file, bool as_tuple) {
  AffineDatum d = load_affine_datum(read_json_file(datum_file));
  ChevalleyBasis cb = ChevalleyBasis::build(*d.fr);
  if (as_tuple) {
    TupleSubalgebraReport rep = verify_tuple_subalgebra(cb, d.tuple, opt.band);
    emit(opt, report_json(rep.pass ? "pass" : "fail", rep.violations),
         rep.pass ? "bracket-closed within the band"
                  : "violations:\n  " + (rep.violations.empty() ? "" : rep.violations.front()));
    return rep.pass ? kExitOk : kExitRefuted;
  }
  RootGeneratedReport rep = verify_root_generated(cb, d.psi, opt.band);
  Json j{{"status", rep.pass ? "pass" : (rep.band_sufficient ? "fail" : "undecided")},
         {"witnesses", rep.mismatches},
         {"central_expected", rep.central_expected},
         {"central_actual", rep.central_actual},
         {"central_display_rule", rep.central_display_rule}};
  std::ostringstream text;
  text << (rep.pass ? "pass" : (rep.band_sufficient ? "fail" : "undecided (band too small)"));
  for (const std::string& m : rep.mismatches) text << "\n  " << m;
  emit(opt, j, text.str());
  if (!rep.band_sufficient) return undecided_exit(opt);
  return rep.pass ? kExitOk : kExitRefuted;
}

int cmd_verify_examples(const Options& opt) {
  std::vector<ExampleCheck> checks = run_example_checks();
  bool all = true;
  Json arr = Json::array();
  for (const ExampleCheck& c : checks) {
    all = all && c.pass;
    arr.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    if (!opt.want_json())
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  }
  if (opt.want_json()) std::cout << Json{{"checks", arr}, {"all_pass", all}}.dump() << "\n";
  return all ? kExitOk : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kmroots: exact root-system combinatorics of symmetrizable Kac-Moody algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--height", opt.height, "height cutoff for slices")->capture_default_str();
  app.add_option("--band", opt.band, "t-degree band for the bracket engine")
      ->capture_default_str();
  app.add_flag("--strict", opt.strict, "exit 3 on truncated/undecided answers");
  app.add_option("--max-gens", opt.max_gens, "generator-count cap for uniqueness probes")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for sampled searches (reserved)");
  app.add_flag("--json", opt.json, "machine-readable JSON output");
  app.add_flag("--pretty", opt.pretty, "human-readable output (default)");

  std::string gcm_file, type, root, alpha, beta, psi_file, gens_file, datum_file, case2_file,
      case1_f;
  long case1_k = 0;
  bool with_d = false, as_tuple = false;

  auto add_gcm_flags = [&](CLI::App* cmd) {
    cmd->add_option("--gcm", gcm_file, "GCM JSON file: {\"rank\": n, \"a\": [[...]]}");
    cmd->add_option("--type", type, "named type, e.g. A2, G2, A2~");
  };

  CLI::App* roots = app.add_subcommand("roots", "enumerate the root slice");
  add_gcm_flags(roots);
  CLI::App* classify = app.add_subcommand("classify", "classify one lattice vector");
  add_gcm_flags(classify);
  classify->add_option("--root", root, "comma-separated coefficients")->required();
  CLI::App* stringc = app.add_subcommand("string", "root string through beta");
  add_gcm_flags(stringc);
  stringc->add_option("--alpha", alpha)->required();
  stringc->add_option("--beta", beta)->required();
  CLI::App* piof = app.add_subcommand("pi-of", "canonical generators of a subroot system");
  add_gcm_flags(piof);
  piof->add_option("--psi", psi_file, "root set JSON")->required();
  CLI::App* pisystem = app.add_subcommand("pisystem", "certify or refute a pi-system");
  add_gcm_flags(pisystem);
  pisystem->add_option("--gens", gens_file, "pi-system JSON")->required();
  CLI::App* bsigma = app.add_subcommand("bsigma", "induced GCM of a pi-system");
  add_gcm_flags(bsigma);
  bsigma->add_option("--gens", gens_file)->required();
  CLI::App* orbit = app.add_subcommand("orbit", "reflection orbit of a pi-system");
  add_gcm_flags(orbit);
  orbit->add_option("--gens", gens_file)->required();
  CLI::App* avalid = app.add_subcommand("affine-validate", "validate a periodic datum");
  avalid->add_option("--datum", datum_file)->required();
  CLI::App* api = app.add_subcommand("affine-pi", "exact canonical generators");
  api->add_option("--datum", datum_file)->required();
  CLI::App* amax = app.add_subcommand("affine-maximal", "maximal closed / maximal real closed");
  add_gcm_flags(amax);
  amax->add_option("--case1-k", case1_k, "prime period for the full-gradient case");
  amax->add_option("--case1-f", case1_f, "f values on the simple roots, comma-separated");
  amax->add_option("--case2", case2_file, "root set JSON of a maximal closed subsystem");
  CLI::App* tvalid = app.add_subcommand("tuple-validate", "validate a subalgebra tuple");
  tvalid->add_option("--datum", datum_file)->required();
  CLI::App* tmax = app.add_subcommand("tuple-maximal", "maximality verdict for a tuple");
  tmax->add_option("--datum", datum_file)->required();
  tmax->add_flag("--with-d", with_d, "the degree derivation is adjoined");
  CLI::App* lgen = app.add_subcommand("loop-generate", "bracket closure of loop elements");
  add_gcm_flags(lgen);
  lgen->add_option("--gens", gens_file, "JSON {\"elements\": [loop elements]}")->required();
  CLI::App* lverify = app.add_subcommand("loop-verify", "verify a datum against the engine");
  lverify->add_option("--datum", datum_file)->required();
  lverify->add_flag("--tuple", as_tuple, "check tuple bracket-closure instead");
  CLI::App* vpe = app.add_subcommand("verify-paper-examples", "re-run the bundled worked examples");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (roots->parsed()) return cmd_roots(opt, gcm_file, type);
    if (classify->parsed()) return cmd_classify(opt, gcm_file, type, root);
    if (stringc->parsed()) return cmd_string(opt, gcm_file, type, alpha, beta);
    if (piof->parsed()) return cmd_pi_of(opt, gcm_file, type, psi_file);
    if (pisystem->parsed()) return cmd_pisystem(opt, gcm_file, type, gens_file);
    if (bsigma->parsed()) return cmd_bsigma(opt, gcm_file, type, gens_file);
    if (orbit->parsed()) return cmd_orbit(opt, gcm_file, type, gens_file);
    if (avalid->parsed()) return cmd_affine_validate(opt, datum_file);
    if (api->parsed()) return cmd_affine_pi(opt, datum_file);
    if (amax->parsed())
      return cmd_affine_maximal(opt, gcm_file, type, case1_k, case1_f, case2_file);
    if (tvalid->parsed()) return cmd_tuple_validate(opt, datum_file);
    if (tmax->parsed()) return cmd_tuple_maximal(opt, datum_file, with_d);
    if (lgen->parsed()) return cmd_loop_generate(opt, gcm_file, type, gens_file);
    if (lverify->parsed()) return cmd_loop_verify(opt, datum_file, as_tuple);
    if (vpe->parsed()) return cmd_verify_examples(opt);
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const KmError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
