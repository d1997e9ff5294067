#include <doctest.h>

#include "qcox/io.hpp"
#include "test_util.hpp"

using namespace qcox;

#ifndef QCOX_TEST_DATA
#error "QCOX_TEST_DATA must point at tests/data"
#endif

namespace {

std::string data(const std::string& name) { return std::string(QCOX_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("diagram JSON round trip") {
  auto j = Json::parse(read_file(data("a3.json")));
  Diagram d = diagram_from_json(j);
  CHECK(d.vertices() == std::vector<std::string>{"1", "2", "3"});
  CHECK(d.edges().size() == 2);
  CHECK(d.label(0, 1) == 3);
  CHECK(diagram_from_json(diagram_to_json(d)) == d);

  auto labelled = Json::parse(R"({"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]],
                                  "labels": {"a,b": 4, "b,c": "inf"}})");
  Diagram l = diagram_from_json(labelled);
  CHECK(l.label(0, 1) == 4);
  CHECK(l.label(1, 2) == kInfinity);
  auto back = diagram_to_json(l);
  CHECK(back["labels"]["a,b"] == 4);
  CHECK(back["labels"]["b,c"] == "inf");
  CHECK(diagram_from_json(back) == l);

  CHECK(error_kind([] { diagram_from_json(Json::parse(R"({"edges": []})")); }) == ErrorKind::InvalidInput);
  CHECK(error_kind([] { diagram_from_json(Json::parse(R"({"vertices": [1, 2]})")); }) == ErrorKind::InvalidInput);
  CHECK(error_kind([] { diagram_from_json(Json::parse(R"({"vertices": ["a"], "edges": [["a", "z"]]})")); })
            .has_value());
}

TEST_CASE("GCM parsing") {
  Gcm m1 = parse_gcm(read_file(data("m1.txt")));
  CHECK(m1 == Gcm({{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}}));
  CHECK(parse_gcm("# B2\n2 -1  # row one\n-2 2\n") == cartan_matrix("B2"));
  CHECK(parse_gcm("[[2, -1], [-1, 2]]") == cartan_matrix("A2"));
  CHECK(parse_gcm(R"({"matrix": [[2]]})") == cartan_matrix("A1"));
  CHECK(error_kind([] { parse_gcm("2 -1\n-1"); }) == ErrorKind::InvalidInput);
  CHECK(error_kind([] { parse_gcm("2 x\n-1 2"); }) == ErrorKind::InvalidInput);
  CHECK(error_kind([] { parse_gcm("2 -1.5\n-1 2"); }) == ErrorKind::InvalidInput);
  CHECK(error_kind([] { parse_gcm("[[2, -1], [-1"); }) == ErrorKind::InvalidInput);
  CHECK(error_kind([] { parse_gcm(R"({"rows": [[2]]})"); }) == ErrorKind::InvalidInput);
  CHECK(error_kind([] { parse_gcm(""); }) == ErrorKind::InvalidInput);
  CHECK(error_kind([] { parse_gcm("2 1\n1 2"); }) == ErrorKind::NotGcm);
  CHECK(error_kind([] { read_file(data("does-not-exist")); }) == ErrorKind::InvalidInput);
}

TEST_CASE("group elements") {
  auto perm = Carrier::permutations(3);
  CHECK(std::get<Permutation>(element_from_json(perm, Json::parse("[1, 0, 2]"))).images == std::vector<int>{1, 0, 2});
  CHECK(error_kind([&] { element_from_json(perm, Json::parse("[0, 0, 2]")); }).has_value());
  CHECK(error_kind([&] { element_from_json(perm, Json::parse("\"a\"")); }) == ErrorKind::InvalidInput);
  auto free = Carrier::free_group({"a", "b"});
  auto w = element_from_json(free, Json::parse("\"a b^-1 b a\""));
  CHECK(free.equal(w, free.multiply(free.generator(0), free.generator(0))));
  CHECK(error_kind([&] { element_from_json(free, Json::parse("\"c\"")); }).has_value());
  auto mat = Carrier::matrices(2);
  auto m = element_from_json(mat, Json::parse(R"([[1, "1/2"], [0, 1]])"));
  CHECK(std::get<Matrix>(m)(0, 1) == Rational(1, 2));
}

TEST_CASE("Phi assignments from files") {
  auto d = make_diagram(diagram_from_json(Json::parse(read_file(data("a3.json")))));
  auto ctx = make_context(d);
  auto good = phi_from_json(Json::parse(read_file(data("phi_good.json"))), ctx);
  CHECK(check_coherence(good).pass);
  auto bad = phi_from_json(Json::parse(read_file(data("phi_bad.json"))), ctx);
  auto rep = check_coherence(bad);
  CHECK_FALSE(rep.pass);
  auto j = coherence_to_json(rep);
  CHECK(j["pass"] == false);
  CHECK(j.contains("failure"));
  CHECK(coherence_to_json(check_coherence(good))["pass"] == true);

  CHECK(error_kind([&] { phi_from_json(Json::parse(R"({"carrier": {"kind": "weird"}, "values": []})"), ctx); }) ==
        ErrorKind::InvalidInput);
  CHECK(error_kind([&] { phi_from_json(Json::parse(R"({"values": []})"), ctx); }) == ErrorKind::InvalidInput);
  CHECK(error_kind([&] {
          phi_from_json(Json::parse(R"({"carrier": {"kind": "permutation", "degree": 2},
                                        "values": [{"from": [["1"]], "to": [["2"]], "value": [0, 1]}]})"),
                        ctx);
        }) == ErrorKind::InvalidInput);
}

TEST_CASE("exports") {
  auto a3 = make_diagram(Diagram::path(3));
  auto poset = build_face_poset(make_context(a3));
  auto j = face_poset_to_json(poset);
  CHECK(j["f_vector"] == Json::array({5, 5, 1}));
  CHECK(j["euler_characteristic"] == 1);
  CHECK(j["faces"].size() == 11);
  CHECK(j["covers"].size() == poset.covers.size());

  auto m1 = analysis_to_json(analyze_dstructure(parse_gcm(read_file(data("m1.txt")))));
  CHECK(m1["verdict"] == "Infeasible");
  CHECK(m1["corank_violation"]["first"] == "123");
  CHECK(m1["corank_violation"]["second"] == "234");
  auto m2 = analysis_to_json(analyze_dstructure(parse_gcm(read_file(data("m2.txt")))));
  CHECK(m2["verdict"] == "Infeasible");
  CHECK(m2["dimension_obstruction"]["j"] == "12");
  auto a2 = analysis_to_json(analyze_dstructure(cartan_matrix("A2")));
  CHECK(a2["verdict"] == "Feasible");
  CHECK(a2["verified"] == true);
  CHECK(a2["subspaces"].contains("1"));
  CHECK(a2["subspaces"].contains("12"));

  CHECK(matrix_to_json(Matrix{{1, 0}, {0, 1}} * Rational(1, 3)) == Json::parse(R"([["1/3", "0"], ["0", "1/3"]])"));
  CHECK(vec_to_json(Vec{Rational(3, 4) - Rational(5, 4)}) == Json::parse(R"(["-1/2"])"));
}
