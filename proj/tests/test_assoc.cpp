#include <doctest.h>

#include "oracles.hpp"
#include "qcox/assoc_complex.hpp"
#include "test_util.hpp"

using namespace qcox;

namespace {

DiagramPtr path(int n) { return make_diagram(Diagram::path(n)); }

Permutation random_perm(std::mt19937& rng, int n) {
  Permutation p{std::vector<int>(n)};
  std::iota(p.images.begin(), p.images.end(), 0);
  std::shuffle(p.images.begin(), p.images.end(), rng);
  return p;
}

FreeWord random_word(std::mt19937& rng, int gens, int len) {
  std::uniform_int_distribution<int> g(0, gens - 1), s(0, 1);
  FreeWord w;
  for (int k = 0; k < len; ++k) w.letters.emplace_back(g(rng), s(rng) ? 1 : -1);
  return reduce(w);
}

PhiAssignment copy_with(const PhiAssignment& phi, const OneSkeleton& sk, int edge, const GroupElement& v) {
  PhiAssignment out(phi.carrier(), phi.context());
  for (int k = 0; k < int(sk.edges.size()); ++k) {
    auto [a, b] = sk.edges[k];
    out.set(sk.vertices[a], sk.vertices[b], k == edge ? v : phi.get(sk.vertices[a], sk.vertices[b]));
  }
  return out;
}

}  // namespace

TEST_CASE("the A3 face poset is a pentagon") {
  FacePoset p = build_face_poset(path(3));
  CHECK(p.f_vector == std::map<int, int>{{0, 5}, {1, 5}, {2, 1}});
  CHECK(p.euler_characteristic() == 1);
  for (size_t k = 0; k < p.faces.size(); ++k) CHECK(p.faces[k].size() == 3 - p.dims[k]);
  // every edge covers two vertices, the 2-face covers every edge
  std::map<int, int> up;
  for (auto [lo, hi] : p.covers) {
    CHECK(p.dims[hi] == p.dims[lo] + 1);
    ++up[hi];
  }
  for (auto [face, count] : up) CHECK(count == (p.dims[face] == 1 ? 2 : 5));

  OneSkeleton sk = one_skeleton(path(3));
  CHECK(sk.vertices.size() == 5);
  CHECK(sk.edges.size() == 5);
  auto cycles = two_face_cycles(sk);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].boundary.size() == 5);
}

TEST_CASE("Euler characteristic is 1 on connected diagrams with at most 6 vertices") {
  for (const auto& adj : oracle::all_small_graphs(6)) {
    int n = int(adj.size());
    if (!oracle::connected(adj, (Mask(1) << n) - 1)) continue;
    FacePoset p = build_face_poset(make_diagram(oracle::to_diagram(adj)));
    CHECK(p.euler_characteristic() == 1);
    CHECK(p.f_vector.at(n - 1) == 1);
  }
}

TEST_CASE("f-vector of a product is the convolution of the factors") {
  auto d = make_diagram(Diagram({"1", "2", "3", "4", "5"}, {{"1", "2"}, {"2", "3"}, {"4", "5"}}));
  FacePoset whole = build_face_poset(d);
  FacePoset a = build_face_poset(make_context(d, d->mask_of({"1", "2", "3"})));
  FacePoset b = build_face_poset(make_context(d, d->mask_of({"4", "5"})));
  std::map<int, int> conv;
  for (auto [i, x] : a.f_vector)
    for (auto [j, y] : b.f_vector) conv[i + j] += x * y;
  CHECK(whole.f_vector == conv);
}

TEST_CASE("2-face boundaries are cycles of elementary moves") {
  // squares, pentagons (paths) and hexagons (triangles)
  for (const auto& adj : oracle::all_small_graphs(5)) {
    OneSkeleton sk = one_skeleton(make_diagram(oracle::to_diagram(adj)));
    auto nb = sk.neighbours();
    for (const auto& c : two_face_cycles(sk)) {
      int len = int(c.boundary.size());
      CHECK((len == 4 || len == 5 || len == 6));
      for (int k = 0; k < len; ++k) {
        int a = c.boundary[k], b = c.boundary[(k + 1) % len];
        CHECK(std::find(nb[a].begin(), nb[a].end(), b) != nb[a].end());
        for (Mask m : c.face.members) CHECK(sk.vertices[a].contains(m));
      }
    }
  }
}

TEST_CASE("coherence accepts telescoping assignments") {
  std::mt19937 rng(11);
  for (const auto& adj : oracle::all_small_graphs(5)) {
    int n = int(adj.size());
    if (n < 3) continue;
    OneSkeleton sk = one_skeleton(make_diagram(oracle::to_diagram(adj)));
    Carrier perms = Carrier::permutations(4);
    std::vector<GroupElement> rho;
    for (size_t k = 0; k < sk.vertices.size(); ++k) rho.push_back(random_perm(rng, 4));
    CHECK(check_coherence(PhiAssignment::telescoping(perms, sk, rho)).pass);

    Carrier free = Carrier::free_group({"a", "b"});
    std::vector<GroupElement> words;
    for (size_t k = 0; k < sk.vertices.size(); ++k) words.push_back(random_word(rng, 2, 4));
    CHECK(check_coherence(PhiAssignment::telescoping(free, sk, words)).pass);
  }
}

TEST_CASE("coherence rejects a single-edge defect on the pentagon") {
  auto ctx = make_context(path(3));
  OneSkeleton sk = one_skeleton(ctx);
  Carrier c = Carrier::permutations(3);
  PhiAssignment id = PhiAssignment::identity(c, ctx);
  CHECK(check_coherence(id).pass);
  for (int e = 0; e < 5; ++e) {
    PhiAssignment bad = copy_with(id, sk, e, Permutation{{1, 0, 2}});
    CoherenceReport r = check_coherence(bad);
    CHECK_FALSE(r.pass);
    REQUIRE(r.failure.has_value());
    CHECK(r.failure->face.members == std::vector<Mask>{Mask(7)});
    CHECK(r.failure->product1 != r.failure->product2);
    CHECK_FALSE(walk_products_agree(bad, 5));
  }
  CHECK(walk_products_agree(id, 5));
}

TEST_CASE("planted defects are caught on every edge of larger associahedra") {
  std::mt19937 rng(5);
  for (const auto& adj : oracle::graphs_up_to_iso(4)) {
    if (!oracle::connected(adj, 15)) continue;
    auto ctx = make_context(make_diagram(oracle::to_diagram(adj)));
    OneSkeleton sk = one_skeleton(ctx);
    Carrier c = Carrier::free_group({"x", "y"});
    std::vector<GroupElement> rho;
    for (size_t k = 0; k < sk.vertices.size(); ++k) rho.push_back(random_word(rng, 2, 3));
    PhiAssignment good = PhiAssignment::telescoping(c, sk, rho);
    CHECK(walk_products_agree(good, 4));
    for (int e = 0; e < int(sk.edges.size()); ++e) {
      auto [a, b] = sk.edges[e];
      GroupElement twisted = c.multiply(good.get(sk.vertices[a], sk.vertices[b]), c.generator(0));
      CHECK_FALSE(check_coherence(copy_with(good, sk, e, twisted)).pass);
    }
  }
}

TEST_CASE("orientation is structural") {
  auto ctx = make_context(path(2));
  OneSkeleton sk = one_skeleton(ctx);
  Carrier c = Carrier::permutations(3);
  PhiAssignment phi(c, ctx);
  phi.set(sk.vertices[0], sk.vertices[1], Permutation{{1, 2, 0}});
  CHECK(c.equal(phi.get(sk.vertices[1], sk.vertices[0]), Permutation{{2, 0, 1}}));
  CHECK(phi.path_product({sk.vertices[0], sk.vertices[1], sk.vertices[0]}) == GroupElement(c.identity()));
  PhiAssignment empty(c, ctx);
  CHECK(error_kind([&] { empty.get(sk.vertices[0], sk.vertices[1]); }) == ErrorKind::MissingPair);
  CHECK(error_kind([&] { phi.set(sk.vertices[0], sk.vertices[1], Permutation{{0, 1}}); }) ==
        ErrorKind::CarrierMismatch);
}

TEST_CASE("matrix carriers") {
  auto ctx = make_context(path(3));
  OneSkeleton sk = one_skeleton(ctx);
  Carrier c = Carrier::matrices(2);
  std::vector<GroupElement> rho;
  for (size_t k = 0; k < sk.vertices.size(); ++k) {
    Matrix m = Matrix::identity(2);
    m(0, 1) = Rational(int(k), 3);
    m(1, 1) = int(k) + 1;
    rho.push_back(m);
  }
  PhiAssignment phi = PhiAssignment::telescoping(c, sk, rho);
  CHECK(check_coherence(phi).pass);
  Matrix shear = Matrix::identity(2);
  shear(1, 0) = 1;
  auto [a, b] = sk.edges[2];
  CHECK_FALSE(check_coherence(copy_with(phi, sk, 2, c.multiply(phi.get(sk.vertices[a], sk.vertices[b]), shear))).pass);
}

TEST_CASE("factorization, support and forgetfulness") {
  auto d = path(3);
  Mask full = d->all();
  Carrier c = Carrier::permutations(3);
  PhiFamily fam;
  for (Mask outer = 1; outer <= full; ++outer)
    for (Mask inner = outer; ; inner = (inner - 1) & outer) {
      if (inner != outer) {
        auto ctx = make_context(d, outer, inner);
        fam.emplace(std::make_pair(outer, inner), PhiAssignment::identity(c, ctx));
      }
      if (!inner) break;
    }
  FactorizationReport ok = check_factorization(fam);
  CHECK(ok.pass());
  CHECK(ok.factorization_checks > 0);
  CHECK(ok.support_checks > 0);

  // a defect on the top layer breaks factorization and support
  auto top = make_context(d, full, 0);
  OneSkeleton sk = one_skeleton(top);
  PhiFamily bad = fam;
  bad.erase({full, 0});
  bad.emplace(std::make_pair(full, Mask(0)), copy_with(fam.at({full, 0}), sk, 0, Permutation{{1, 0, 2}}));
  FactorizationReport r = check_factorization(bad);
  CHECK_FALSE(r.pass());
  CHECK_FALSE(r.failures.empty());
}

TEST_CASE("forgetfulness compares equivalent pairs") {
  auto d = path(4);
  auto ctx = make_context(d);
  OneSkeleton sk = one_skeleton(ctx);
  Carrier c = Carrier::permutations(2);
  PhiAssignment id = PhiAssignment::identity(c, ctx);
  // find the pair {1},{12},{4},{1234} -> {2},{12},{4},{1234}
  auto target = [&](const NestedSet& h, const std::string& first) {
    return h.contains(d->mask_of({first})) && h.contains(d->mask_of({"1", "2"})) && h.contains(d->mask_of({"4"}));
  };
  int edge = -1;
  for (int k = 0; k < int(sk.edges.size()); ++k) {
    auto [a, b] = sk.edges[k];
    if ((target(sk.vertices[a], "1") && target(sk.vertices[b], "2")) ||
        (target(sk.vertices[a], "2") && target(sk.vertices[b], "1")))
      edge = k;
  }
  REQUIRE(edge >= 0);
  PhiFamily fam;
  fam.emplace(std::make_pair(d->all(), Mask(0)), copy_with(id, sk, edge, Permutation{{1, 0}}));
  CHECK(check_factorization({{{d->all(), Mask(0)}, id}}).forgetfulness_checks > 0);
  FactorizationReport r = check_factorization(fam);
  CHECK_FALSE(r.forgetfulness);
}

TEST_CASE("braid words") {
  auto d = make_diagram(Diagram({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"3", "4"}},
                                {{{"2", "3"}, 4}, {{"3", "4"}, kInfinity}}));
  LabeledDiagramGroup g{d};
  CHECK(braid_words(g, 0, 2) == std::make_pair(Word{0, 2}, Word{2, 0}));
  CHECK(braid_words(g, 0, 1) == std::make_pair(Word{0, 1, 0}, Word{1, 0, 1}));
  CHECK(braid_words(g, 1, 2) == std::make_pair(Word{1, 2, 1, 2}, Word{2, 1, 2, 1}));
  CHECK(error_kind([&] { braid_words(g, 2, 3); }) == ErrorKind::NoRelation);
}

TEST_CASE("labels and DOT export") {
  OneSkeleton sk = one_skeleton(path(3));
  CHECK(face_label(sk.vertices[0]) == "{1} {3} {1,2,3}");
  std::string dot = skeleton_dot(sk);
  CHECK(dot.rfind("graph skeleton {", 0) == 0);
  size_t edges = 0;
  for (size_t p = dot.find(" -- "); p != std::string::npos; p = dot.find(" -- ", p + 1)) ++edges;
  CHECK(edges == 5);
}
