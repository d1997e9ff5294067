#include "qcox/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qcox/errors.hpp"

namespace qcox {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    Rational r(j.get<std::string>());
    r.canonicalize();
    return r;
  }
  bad("expected an integer or a rational string");
}

}  // namespace

Diagram diagram_from_json(const Json& j) try {
  if (!j.is_object() || !j.contains("vertices")) bad("diagram JSON needs \"vertices\"");
  std::vector<std::string> verts = j.at("vertices").get<std::vector<std::string>>();
  std::vector<Diagram::Edge> edges;
  if (j.contains("edges"))
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) bad("edges must be pairs");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  std::map<Diagram::Edge, int> labels;
  if (j.contains("labels"))
    for (auto& [key, val] : j.at("labels").items()) {
      auto comma = key.find(',');
      if (comma == std::string::npos) bad("label keys look like \"a,b\"");
      int m = val.is_string() && (val == "inf" || val == "infinity") ? kInfinity : val.get<int>();
      labels[{key.substr(0, comma), key.substr(comma + 1)}] = m;
    }
  return Diagram(verts, edges, labels);
} catch (const Json::exception& e) {
  bad(std::string("malformed JSON: ") + e.what());
}

Json diagram_to_json(const Diagram& d) {
  Json j;
  j["vertices"] = d.vertices();
  Json edges = Json::array(), labels = Json::object();
  for (auto [a, b] : d.edges()) {
    edges.push_back({d.id(a), d.id(b)});
    int m = d.label(a, b);
    if (m != 3) labels[d.id(a) + "," + d.id(b)] = m == kInfinity ? Json("inf") : Json(m);
  }
  j["edges"] = edges;
  if (!labels.empty()) j["labels"] = labels;
  return j;
}

Gcm parse_gcm(const std::string& text) {
  std::vector<std::vector<long>> rows;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
    try {
      Json j = Json::parse(text);
      if (j.is_object()) j = j.at("matrix");
      rows = j.get<std::vector<std::vector<long>>>();
    } catch (const Json::exception& e) {
      bad(std::string("GCM JSON: ") + e.what());
    }
  } else {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      std::istringstream ls(line);
      std::vector<long> row;
      std::string tok;
      while (ls >> tok) {
        try {
          size_t used = 0;
          row.push_back(std::stol(tok, &used));
          if (used != tok.size()) bad("not an integer: " + tok);
        } catch (const std::logic_error&) {
          bad("not an integer: " + tok);
        }
      }
      if (!row.empty()) rows.push_back(row);
    }
  }
  if (rows.empty()) bad("empty GCM");
  for (const auto& r : rows)
    if (r.size() != rows.size()) bad("GCM must be square");
  return Gcm(rows);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json vec_to_json(const Vec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(x.get_str());
  return j;
}

Json matrix_to_json(const Matrix& m) {
  Json j = Json::array();
  for (int i = 0; i < m.rows(); ++i) j.push_back(vec_to_json(m.row(i)));
  return j;
}

Json nested_set_to_json(const NestedSet& h) { return Json(h.ids()); }

Json face_poset_to_json(const FacePoset& p) {
  Json j;
  Json faces = Json::array();
  for (size_t k = 0; k < p.faces.size(); ++k)
    faces.push_back({{"members", nested_set_to_json(p.faces[k])}, {"dim", p.dims[k]}});
  j["faces"] = faces;
  Json covers = Json::array();
  for (auto [a, b] : p.covers) covers.push_back({a, b});
  j["covers"] = covers;
  Json f = Json::array();
  for (auto [d, c] : p.f_vector) f.push_back(c);
  j["f_vector"] = f;
  j["euler_characteristic"] = p.euler_characteristic();
  return j;
}

GroupElement element_from_json(const Carrier& c, const Json& j) try {
  GroupElement g;
  switch (c.kind()) {
    case Carrier::Kind::Permutation:
      g = Permutation{j.get<std::vector<int>>()};
      break;
    case Carrier::Kind::Free: {
      FreeWord w;
      std::istringstream in(j.get<std::string>());
      std::string tok;
      while (in >> tok) {
        if (tok == "1") continue;
        int e = 1;
        if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
          e = -1;
          tok.resize(tok.size() - 3);
        }
        const auto& gens = c.generators();
        auto it = std::find(gens.begin(), gens.end(), tok);
        if (it == gens.end()) bad("unknown generator " + tok);
        w.letters.emplace_back(int(it - gens.begin()), e);
      }
      g = reduce(w);
      break;
    }
    case Carrier::Kind::Matrix: {
      int n = c.degree();
      if (!j.is_array() || int(j.size()) != n) bad("matrix value has the wrong size");
      Matrix m(n, n);
      for (int r = 0; r < n; ++r) {
        if (!j[r].is_array() || int(j[r].size()) != n) bad("matrix value has the wrong size");
        for (int s = 0; s < n; ++s) m(r, s) = rational_from_json(j[r][s]);
      }
      g = m;
      break;
    }
  }
  c.validate(g);
  return g;
} catch (const Json::exception& e) {
  bad(std::string("malformed JSON: ") + e.what());
}

PhiAssignment phi_from_json(const Json& j, const ContextPtr& ctx) try {
  const Json& cj = j.at("carrier");
  std::string kind = cj.at("kind").get<std::string>();
  Carrier c = kind == "permutation" ? Carrier::permutations(cj.at("degree").get<int>())
              : kind == "free"      ? Carrier::free_group(cj.at("generators").get<std::vector<std::string>>())
              : kind == "matrix"    ? Carrier::matrices(cj.at("dim").get<int>())
                                    : (bad("unknown carrier kind " + kind), Carrier());
  PhiAssignment phi(c, ctx);
  auto to_set = [&](const Json& s) {
    std::vector<Mask> members;
    for (const auto& m : s) members.push_back(ctx->base->mask_of(m.get<std::vector<std::string>>()));
    NestedSet h{ctx, sorted_members(members)};
    if (!is_nested_set(*ctx, h.members) || !is_maximal(h)) bad("not a maximal nested set: " + s.dump());
    return h;
  };
  for (const auto& v : j.at("values")) phi.set(to_set(v.at("from")), to_set(v.at("to")), element_from_json(c, v.at("value")));
  return phi;
} catch (const Json::exception& e) {
  bad(std::string("malformed JSON: ") + e.what());
}

Json coherence_to_json(const CoherenceReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["faces_checked"] = r.faces_checked;
  if (r.failure) {
    auto path = [](const std::vector<NestedSet>& p) {
      Json a = Json::array();
      for (const auto& h : p) a.push_back(nested_set_to_json(h));
      return a;
    };
    j["failure"] = {{"face", nested_set_to_json(r.failure->face)},
                    {"path1", path(r.failure->path1)},
                    {"path2", path(r.failure->path2)},
                    {"product1", r.failure->product1},
                    {"product2", r.failure->product2}};
  }
  return j;
}

Json dstructure_to_json(const DStructure& s) {
  Json j = Json::object();
  for (const auto& [m, sub] : s.subspaces) {
    Json basis = Json::array();
    for (const auto& v : sub.basis()) basis.push_back(vec_to_json(v));
    j[mask_label(m)] = basis;
  }
  return j;
}

Json analysis_to_json(const DStructureAnalysis& a) {
  Json j;
  j["verdict"] = verdict_name(a.verdict);
  j["explanation"] = a.explanation;
  if (a.corank)
    j["corank_violation"] = {{"first", mask_label(a.corank->first)},
                             {"second", mask_label(a.corank->second)},
                             {"corank_first", a.corank->corank_first},
                             {"corank_second", a.corank->corank_second},
                             {"corank_meet", a.corank->corank_meet}};
  if (a.obstruction)
    j["dimension_obstruction"] = {{"j", mask_label(a.obstruction->j)},
                                  {"available", a.obstruction->available},
                                  {"required", a.obstruction->required},
                                  {"image_rank", a.obstruction->image_rank}};
  if (a.structure) {
    j["realization_dim"] = a.structure->realization.dim;
    j["subspaces"] = dstructure_to_json(*a.structure);
    j["verified"] = verify_dstructure(*a.structure).empty();
  }
  return j;
}

}  // namespace qcox
