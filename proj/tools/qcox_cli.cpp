#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "qcox/errors.hpp"
#include "qcox/io.hpp"
#include "qcox/monodromy.hpp"
#include "qcox/twist.hpp"

using namespace qcox;

namespace {

struct Options {
  std::string format = "json";
  int bound = kDefaultEnumerationBound;
  std::string diagram, phi, gcm;
  bool mns = false;
  std::string type = "A2", rep = "fund", elements = "s", reps = "f,f", sub, convention = "coroots";
  int order = 0, vertex = 1, depth = 0;
  bool matrices = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

DiagramPtr load_diagram(const Options& o) {
  Json j;
  try {
    j = Json::parse(read_file(o.diagram));
  } catch (const Json::exception& e) {
    throw UsageError("cannot parse " + o.diagram + ": " + e.what());
  }
  return make_diagram(diagram_from_json(j));
}

std::string label_text(const NestedSet& h) { return face_label(h); }

int nested_enum(const Options& o) {
  auto d = load_diagram(o);
  auto ctx = make_context(d);
  auto sets = o.mns ? enumerate_mns(ctx, o.bound) : enumerate_nested_sets(ctx, o.bound);
  Json arr = Json::array();
  std::ostringstream text;
  for (const auto& h : sets) {
    arr.push_back(nested_set_to_json(h));
    text << label_text(h) << "\n";
  }
  emit(o, {{"count", sets.size()}, {o.mns ? "mns" : "nested_sets", arr}}, text.str());
  return 0;
}

int assoc_export(const Options& o) {
  auto d = load_diagram(o);
  if (o.format == "dot") {
    std::cout << skeleton_dot(one_skeleton(d, o.bound));
    return 0;
  }
  FacePoset p = build_face_poset(d, o.bound);
  std::ostringstream text;
  text << "f-vector:";
  for (auto [k, c] : p.f_vector) text << " " << c;
  text << "\neuler characteristic: " << p.euler_characteristic() << "\n";
  emit(o, face_poset_to_json(p), text.str());
  return 0;
}

int assoc_coherence(const Options& o) {
  auto d = load_diagram(o);
  Json j;
  try {
    j = Json::parse(read_file(o.phi));
  } catch (const Json::exception& e) {
    throw UsageError("cannot parse " + o.phi + ": " + e.what());
  }
  PhiAssignment phi = phi_from_json(j, make_context(d));
  CoherenceReport r = check_coherence(phi, o.bound);
  std::ostringstream text;
  text << (r.pass ? "coherent" : "not coherent") << " (" << r.faces_checked << " 2-faces)\n";
  if (r.failure)
    text << "face " << face_label(r.failure->face) << ": " << r.failure->product1 << " vs " << r.failure->product2 << "\n";
  emit(o, coherence_to_json(r), text.str());
  return r.pass ? 0 : 1;
}

int cartan_analyze(const Options& o) {
  Gcm a = parse_gcm(read_file(o.gcm));
  DStructureAnalysis r = analyze_dstructure(a, o.bound);
  Json j = analysis_to_json(r);
  if (auto sym = try_symmetrizer(a); sym.d) j["symmetrizer"] = vec_to_json(*sym.d);
  std::ostringstream text;
  text << verdict_name(r.verdict) << ": " << r.explanation << "\n";
  emit(o, j, text.str());
  if (r.structure && !verify_dstructure(*r.structure).empty()) return 1;
  return 0;
}

WeightModule module_named(const AlgebraPtr& alg, const std::string& name) {
  if (name == "fund" || name == "f") return fundamental(alg, 0);
  if (name == "adjoint" || name == "adj") return adjoint(alg);
  if (name == "trivial") return trivial_module(alg);
  if (name.size() > 1 && name[0] == 'f') {
    int i = std::stoi(name.substr(1)) - 1;
    if (i < 0 || i >= alg->rank()) throw UsageError("no fundamental weight " + name);
    return fundamental(alg, i);
  }
  // comma-free highest weight like "1.0.2"
  std::vector<int> w;
  std::istringstream in(name);
  std::string tok;
  while (std::getline(in, tok, '.')) w.push_back(std::stoi(tok));
  if (int(w.size()) != alg->rank()) throw UsageError("bad representation " + name);
  return irrep(alg, w);
}

Json residual_json(const PlacementResidual& p, bool matrices) {
  Json orders = Json::array();
  for (size_t k = 0; k < p.residual.size(); ++k) {
    Json e = {{"order", k}, {"zero", p.residual[k].is_zero()}};
    if (matrices) e["residual"] = matrix_to_json(p.residual[k]);
    orders.push_back(e);
  }
  return {{"placement", p.name}, {"orders", orders}};
}

int verify_braid(const Options& o) {
  auto alg = build_algebra(o.type);
  WeightModule v = module_named(alg, o.rep);
  BraidElements which = o.elements == "sic" ? BraidElements::SIC : BraidElements::TildeS;
  Json pairs = Json::array();
  std::ostringstream text;
  bool pass = true;
  for (int i = 0; i < alg->rank(); ++i)
    for (int j = i + 1; j < alg->rank(); ++j) {
      if (coxeter_label(alg->gcm, i, j) == kInfinity) continue;
      BraidReport r = check_braid(v, i, j, which, o.order);
      pass &= r.pass;
      pairs.push_back({{"i", i + 1}, {"j", j + 1}, {"m", r.m}, {"pass", r.pass},
                       {"first_failing_order", r.first_failing_order}});
      text << "s" << i + 1 << ", s" << j + 1 << " (m=" << r.m << "): " << (r.pass ? "pass" : "FAIL") << "\n";
    }
  emit(o, {{"type", o.type}, {"dim", v.dim()}, {"elements", o.elements}, {"pass", pass}, {"pairs", pairs}},
       text.str());
  return pass ? 0 : 1;
}

int verify_monodromy(const Options& o) {
  if (o.order > 2) throw UsageError("monodromy order must be at most 2");
  auto alg = build_algebra(o.type);
  int i = o.vertex - 1;
  if (i < 0 || i >= alg->rank()) throw UsageError("vertex out of range");
  WeightModule v = module_named(alg, o.rep);
  std::optional<Matrix> jet;
  std::string jet_source = "r_i/2";
  if (alg->rank() == 1) {
    TriplePtr t = double_triple(alg);
    jet = one_jet(t, parabolic_split(*t, 0), v, v);
    jet_source = "relative twist";
  }
  CoproductReport r = check_coproduct_identity(v, v, i, o.order, jet);
  const auto& outside = r.placement("twist_outside");
  bool pass = r.group_like && r.untwisted_ok && outside.zero_at(0) && (o.order < 1 || outside.zero_at(1));
  Json places = Json::array();
  for (const auto& p : r.placements) places.push_back(residual_json(p, o.matrices));
  Json j = {{"type", o.type}, {"vertex", o.vertex}, {"dim", v.dim()}, {"order", o.order},
            {"group_like", r.group_like}, {"untwisted", r.untwisted_ok},
            {"adjoint_flips_r", r.adjoint_flips_r}, {"jet_source", jet_source},
            {"placements", places}, {"pass", pass}};
  if (o.matrices) j["jet"] = matrix_to_json(r.jet);
  std::ostringstream text;
  text << "group-like at order 0: " << (r.group_like ? "yes" : "no") << "\n";
  for (const auto& p : r.placements) {
    text << p.name << ":";
    for (size_t k = 0; k < p.residual.size(); ++k) text << " " << (p.residual[k].is_zero() ? "0" : "nonzero");
    text << "\n";
  }
  emit(o, j, text.str());
  return pass ? 0 : 1;
}

int verify_twist(const Options& o) {
  auto alg = build_algebra(o.type);
  Mask d = 0;
  for (char c : o.sub) {
    if (c == ',' || c == ' ') continue;
    int k = c - '1';
    if (k < 0 || k >= alg->rank()) throw UsageError("bad vertex in --sub");
    d |= bit(k);
  }
  auto comma = o.reps.find(',');
  if (comma == std::string::npos) throw UsageError("--reps takes two comma-separated modules");
  WeightModule v = module_named(alg, o.reps.substr(0, comma)), w = module_named(alg, o.reps.substr(comma + 1));
  CartanConvention conv = o.convention == "full" ? CartanConvention::Full : CartanConvention::Coroots;
  TriplePtr t = double_triple(alg, d);
  ParabolicSplit s = parabolic_split(*t, d, conv);
  JetReport r = verify_one_jet(t, s, v, w, o.depth);
  bool same = v.highest == w.highest;
  bool pass = r.matches && r.stable && (!same || r.alt_matches);
  Json j = {{"type", o.type}, {"sub", mask_label(d)}, {"depth", r.depth}, {"jet_matches", r.matches},
            {"stable", r.stable}, {"pass", pass}};
  if (same) j["alt2_matches"] = r.alt_matches;
  if (o.matrices || !pass) {
    j["jet"] = matrix_to_json(r.jet);
    j["expected"] = matrix_to_json(r.expected);
    if (same) {
      j["alt2"] = matrix_to_json(r.alt);
      j["alt2_expected"] = matrix_to_json(r.alt_expected);
    }
  }
  std::ostringstream text;
  text << "depth " << r.depth << ": jet " << (r.matches ? "matches" : "differs") << ", "
       << (r.stable ? "stable" : "unstable");
  if (same) text << ", Alt2 " << (r.alt_matches ? "matches" : "differs");
  text << "\n";
  emit(o, j, text.str());
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nested sets, D-structures and quasi-Coxeter identity checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "json, text or dot")->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--bound", o.bound, "enumeration bound on the number of vertices")->check(CLI::PositiveNumber);

  auto nested = app.add_subcommand("nested", "nested sets")->require_subcommand(1);
  auto nenum = nested->add_subcommand("enum", "enumerate nested sets");
  nenum->add_option("--diagram", o.diagram, "diagram JSON")->required();
  nenum->add_flag("--mns", o.mns, "only maximal nested sets");

  auto assoc = app.add_subcommand("assoc", "associahedron")->require_subcommand(1);
  auto aexp = assoc->add_subcommand("export", "face poset as JSON or 1-skeleton as DOT");
  aexp->add_option("--diagram", o.diagram, "diagram JSON")->required();
  auto acoh = assoc->add_subcommand("coherence", "check an assignment on elementary pairs");
  acoh->add_option("--diagram", o.diagram, "diagram JSON")->required();
  acoh->add_option("--phi", o.phi, "assignment JSON")->required();

  auto cartan = app.add_subcommand("cartan", "generalized Cartan matrices")->require_subcommand(1);
  auto can = cartan->add_subcommand("analyze", "decide D-structure feasibility");
  can->add_option("--gcm", o.gcm, "matrix file (text or JSON)")->required();

  auto verify = app.add_subcommand("verify", "Lie-theoretic identities")->require_subcommand(1);
  auto vb = verify->add_subcommand("braid", "braid relations of s~ or S_{i,C}");
  vb->add_option("--type", o.type, "Cartan type, e.g. A2, B2, A1xA1");
  vb->add_option("--rep", o.rep, "fund, fN, adjoint, trivial or a highest weight like 1.1");
  vb->add_option("--elements", o.elements, "s or sic")->check(CLI::IsMember({"s", "sic"}));
  vb->add_option("--order", o.order, "truncation order")->check(CLI::Range(0, 4));
  auto vm = verify->add_subcommand("monodromy", "coproduct identity for S_{i,C} on V⊗V");
  vm->add_option("--type", o.type, "Cartan type")->default_val("A1");
  vm->add_option("--vertex", o.vertex, "vertex i (1-based)");
  vm->add_option("--rep", o.rep, "module V");
  vm->add_option("--order", o.order, "truncation order")->check(CLI::Range(0, 4));
  vm->add_flag("--matrices", o.matrices, "include matrices in the report");
  auto vt = verify->add_subcommand("twist", "1-jet of the relative twist");
  vt->add_option("--type", o.type, "Cartan type");
  vt->add_option("--sub", o.sub, "vertices of D, e.g. 1 or 12; empty for none");
  vt->add_option("--reps", o.reps, "two modules, e.g. f,f or f1,f2");
  vt->add_option("--depth", o.depth, "truncation depth (0 = automatic)");
  vt->add_option("--convention", o.convention, "coroots or full")->check(CLI::IsMember({"coroots", "full"}));
  vt->add_flag("--matrices", o.matrices, "include matrices in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (nenum->parsed()) return nested_enum(o);
    if (aexp->parsed()) return assoc_export(o);
    if (o.format == "dot") throw UsageError("dot output is only available for assoc export");
    if (acoh->parsed()) return assoc_coherence(o);
    if (can->parsed()) return cartan_analyze(o);
    if (vb->parsed()) return verify_braid(o);
    if (vm->parsed()) return verify_monodromy(o);
    if (vt->parsed()) return verify_twist(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
