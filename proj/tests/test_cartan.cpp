#include <doctest.h>

#include "oracles.hpp"
#include "qcox/cartan.hpp"
#include "test_util.hpp"

using namespace qcox;

namespace {

Gcm counterexample1() { return Gcm({{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}}); }
Gcm counterexample2() { return Gcm({{2, -2, 0, 0}, {-2, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}); }

// Plain fraction Gaussian elimination, kept separate from the library rank.
int oracle_rank(const Gcm& a, Mask j) {
  std::vector<int> idx;
  for (int i = 0; i < a.size(); ++i)
    if ((j >> i) & 1) idx.push_back(i);
  int n = int(idx.size());
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m[r][c] = Rational(a(idx[r], idx[c]));
  int rank = 0;
  for (int c = 0; c < n && rank < n; ++c) {
    int p = rank;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(m[p], m[rank]);
    for (int r = 0; r < n; ++r)
      if (r != rank && m[r][c] != 0) {
        Rational f = m[r][c] / m[rank][c];
        for (int k = c; k < n; ++k) m[r][k] -= f * m[rank][k];
      }
    ++rank;
  }
  return rank;
}

int oracle_corank(const Gcm& a, Mask j) { return std::popcount(j) - oracle_rank(a, j); }

bool oracle_lemma_violated(const Gcm& a) {
  Mask full = a.all();
  for (Mask j1 = 1; j1 <= full; ++j1)
    for (Mask j2 = 1; j2 <= full; ++j2) {
      Mask m = j1 & j2;
      if (m && oracle_corank(a, m) > oracle_corank(a, j1) + oracle_corank(a, j2)) return true;
    }
  return false;
}

std::vector<std::string> finite_types_up_to_rank4() {
  const std::vector<std::pair<std::string, int>> irreducible = {
      {"A1", 1}, {"A2", 2}, {"B2", 2}, {"G2", 2}, {"A3", 3}, {"B3", 3}, {"C3", 3},
      {"A4", 4}, {"B4", 4}, {"C4", 4}, {"D4", 4}, {"F4", 4}};
  std::vector<std::string> out;
  auto rec = [&](auto& self, size_t from, int left, std::string acc) -> void {
    if (!acc.empty()) out.push_back(acc);
    for (size_t k = from; k < irreducible.size(); ++k)
      if (irreducible[k].second <= left)
        self(self, k, left - irreducible[k].second, acc.empty() ? irreducible[k].first : acc + "x" + irreducible[k].first);
  };
  rec(rec, 0, 4, "");
  return out;
}

bool connected_subset(const Gcm& a, Mask j) {
  std::vector<Mask> adj(a.size(), 0);
  for (int i = 0; i < a.size(); ++i)
    for (int k = 0; k < a.size(); ++k)
      if (i != k && a(i, k) != 0) adj[i] |= Mask(1) << k;
  return oracle::connected(adj, j);
}

Subspace coroot_span(const Realization& re, std::vector<int> js) {
  std::vector<Vec> v;
  for (int j : js) v.push_back(re.coroots[j]);
  return Subspace::span(re.dim, v);
}

}  // namespace

TEST_CASE("symmetrizers") {
  CHECK(find_symmetrizer(cartan_matrix("A2")) == std::vector<Rational>{1, 1});
  auto d = find_symmetrizer(Gcm({{2, -2}, {-1, 2}}));
  CHECK(d == std::vector<Rational>{1, 2});
  CHECK(find_symmetrizer(counterexample1()) == std::vector<Rational>{1, 1, 1, 1});
  CHECK(find_symmetrizer(counterexample2()) == std::vector<Rational>{1, 1, 1, 1});
  for (const auto& t : finite_types_up_to_rank4()) {
    Gcm a = cartan_matrix(t);
    auto s = find_symmetrizer(a);
    for (int i = 0; i < a.size(); ++i) {
      CHECK(s[i] > 0);
      for (int j = 0; j < a.size(); ++j) CHECK(s[i] * a(i, j) == s[j] * a(j, i));
    }
  }
  // a_12 a_23 a_31 != a_21 a_32 a_13
  Gcm cyc({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}});
  auto r = try_symmetrizer(cyc);
  CHECK_FALSE(r.d);
  CHECK(r.cycle.size() >= 3);
  CHECK(error_kind([&] { find_symmetrizer(cyc); }) == ErrorKind::NotSymmetrizable);
  CHECK(error_kind([&] { analyze_dstructure(cyc); }) == ErrorKind::NotSymmetrizable);
}

TEST_CASE("corank") {
  Gcm a3 = cartan_matrix("A3");
  for (Mask j = 1; j <= a3.all(); ++j) CHECK(corank(a3, j) == 0);
  CHECK(corank(Gcm({{2, -2}, {-2, 2}}), 3) == 1);
  CHECK(corank(counterexample1(), 0b0110) == 1);
  CHECK(error_kind([&] { corank(a3, 0); }) == ErrorKind::InvalidInput);
  for (Gcm g : {counterexample1(), counterexample2(), cartan_matrix("F4")})
    for (Mask j = 1; j <= g.all(); ++j) CHECK(corank(g, j) == oracle_corank(g, j));
}

TEST_CASE("corank lemma") {
  for (const auto& t : finite_types_up_to_rank4()) CHECK_FALSE(check_corank_lemma(cartan_matrix(t)));
  auto v = check_corank_lemma(counterexample1());
  REQUIRE(v);
  CHECK(v->first == 0b0111);
  CHECK(v->second == 0b1110);
  CHECK(v->corank_meet == 1);
  CHECK(v->corank_first == 0);
  CHECK(v->corank_second == 0);
  CHECK_FALSE(check_corank_lemma(counterexample2()));
  CHECK(error_kind([] { check_corank_lemma(cartan_matrix("A4"), 3); }) == ErrorKind::TooLarge);
}

TEST_CASE("realization") {
  for (std::string t : {"A1", "A2", "B2", "G2", "A3", "C3", "D4", "F4", "A1xB2"}) {
    Gcm a = cartan_matrix(t);
    a.symmetrizer = find_symmetrizer(a);
    Realization re = build_realization(a);
    int n = a.size();
    CHECK(re.dim == 2 * n - oracle_rank(a, a.all()));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(dot(re.alpha.row(i), re.coroots[j]) == Rational(a(j, i)));
    CHECK(re.form == re.form.transpose());
    CHECK(determinant(re.form) != 0);
    // <h, h_i> = alpha_i(h) / d_i on every basis vector
    for (int k = 0; k < re.dim; ++k) {
      Vec e(re.dim, 0);
      e[k] = 1;
      for (int i = 0; i < n; ++i) CHECK(re.pair(e, re.coroots[i]) == re.alpha(i, k) / (*a.symmetrizer)[i]);
    }
  }
  Gcm a1 = cartan_matrix("A1");
  a1.symmetrizer = find_symmetrizer(a1);
  auto r1 = build_realization(a1);
  CHECK(r1.dim == 1);
  CHECK(r1.pair(r1.coroots[0], r1.coroots[0]) == 2);

  // Coroot Gram matrix from (alpha_i, alpha_j) = d_i a_ij and h_i <-> alpha_i / d_i.
  Gcm b2 = Gcm({{2, -2}, {-1, 2}});
  b2.symmetrizer = find_symmetrizer(b2);
  auto rb = build_realization(b2);
  const auto& d = *b2.symmetrizer;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(rb.pair(rb.coroots[i], rb.coroots[j]) == d[i] * b2(i, j) / (d[i] * d[j]));

  Gcm aff({{2, -2}, {-2, 2}});
  aff.symmetrizer = find_symmetrizer(aff);
  auto ra = build_realization(aff);
  CHECK(ra.dim == 3);
  CHECK(determinant(ra.form) != 0);
  Subspace span = coroot_span(ra, {0, 1});
  CHECK(span.dim() == 2);
  CHECK_FALSE(ra.nondegenerate_on(span));
  Matrix gram(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) gram(i, j) = ra.pair(span.basis()[i], span.basis()[j]);
  CHECK(rank(gram) == 1);
}

TEST_CASE("finite types of rank at most 4 are feasible with the coroot structure") {
  auto types = finite_types_up_to_rank4();
  CHECK(types.size() == 30);
  for (const auto& t : types) {
    Gcm a = cartan_matrix(t);
    auto res = analyze_dstructure(a);
    INFO(t);
    REQUIRE(res.verdict == Verdict::Feasible);
    REQUIRE(res.structure);
    CHECK(verify_dstructure(*res.structure).empty());
    const auto& s = *res.structure;
    for (Mask j = 1; j < a.all(); ++j) {
      if (!connected_subset(a, j)) continue;
      REQUIRE(s.subspaces.count(j));
      CHECK(s.subspaces.at(j) == s.realization.coroot_span(j));
      CHECK(s.realization.nondegenerate_on(s.subspaces.at(j)));
    }
  }
}

TEST_CASE("both counterexample matrices are infeasible") {
  auto r1 = analyze_dstructure(counterexample1());
  CHECK(r1.verdict == Verdict::Infeasible);
  REQUIRE(r1.corank);
  CHECK(r1.corank->corank_meet == 1);
  CHECK_FALSE(r1.structure);

  auto r2 = analyze_dstructure(counterexample2());
  CHECK(r2.verdict == Verdict::Infeasible);
  CHECK_FALSE(r2.corank);
  REQUIRE(r2.obstruction);
  CHECK(r2.obstruction->j == 0b0011);
  CHECK(r2.obstruction->required == 3);
  CHECK(r2.obstruction->available < r2.obstruction->required);
}

TEST_CASE("affine structures") {
  for (Gcm a : {Gcm({{2, -2}, {-2, 2}}), Gcm({{2, -1}, {-4, 2}}), Gcm({{2, -4}, {-1, 2}})}) {
    CHECK(is_affine_type(a));
    DStructure s = affine_dstructure(a);
    CHECK(verify_dstructure(s).empty());
    CHECK(s.realization.dim == 3);
    CHECK(s.subspaces.at(0b01) == coroot_span(s.realization, {0}));
    CHECK(s.subspaces.at(0b10) == coroot_span(s.realization, {1}));
    CHECK(s.subspaces.at(0b11).dim() == 3);
    auto res = analyze_dstructure(a);
    CHECK(res.verdict == Verdict::Feasible);
  }
  Gcm a2aff({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
  DStructure s = affine_dstructure(a2aff);
  CHECK(verify_dstructure(s).empty());
  CHECK(s.realization.dim == 4);
  for (Mask j : {Mask(0b011), Mask(0b101), Mask(0b110)}) {
    CHECK(s.subspaces.at(j).dim() == 2);
    CHECK(s.subspaces.at(j) == s.realization.coroot_span(j));
  }
  CHECK(s.subspaces.at(0b111).dim() == 4);
  CHECK(error_kind([] { affine_dstructure(cartan_matrix("A2")); }) == ErrorKind::NotAffine);
  CHECK(error_kind([] { affine_dstructure(counterexample1()); }) == ErrorKind::NotAffine);
}

TEST_CASE("verification rejects planted defects") {
  auto res = analyze_dstructure(cartan_matrix("A3"));
  REQUIRE(res.structure);
  const DStructure good = *res.structure;
  const auto& re = good.realization;

  DStructure s = good;
  s.subspaces[0b011] = coroot_span(re, {1, 2});
  CHECK_FALSE(verify_dstructure(s).empty());

  s = good;
  s.subspaces.erase(0b110);
  CHECK_FALSE(verify_dstructure(s).empty());

  s = good;
  s.subspaces[0b001] = coroot_span(re, {0, 2});
  CHECK_FALSE(verify_dstructure(s).empty());

  // on A1xA1, h_1 has to sit in the kernel of alpha_2
  auto two = analyze_dstructure(cartan_matrix("A1xA1"));
  REQUIRE(two.structure);
  s = *two.structure;
  s.subspaces[0b01] = coroot_span(s.realization, {0, 1});
  auto bad = verify_dstructure(s);
  CHECK(std::any_of(bad.begin(), bad.end(), [](const std::string& m) { return m.find("orthogonal") != std::string::npos; }));
}

TEST_CASE("corank violations never coexist with Feasible (1000 random symmetrizable matrices)") {
  std::mt19937 rng(20261015);
  std::uniform_int_distribution<int> size(1, 5);
  int violations = 0, feasible = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Gcm a = oracle::random_symmetrizable_gcm(rng, size(rng));
    bool violated = oracle_lemma_violated(a);
    CHECK(bool(check_corank_lemma(a)) == violated);
    auto res = analyze_dstructure(a);
    if (violated) {
      ++violations;
      CHECK(res.verdict != Verdict::Feasible);
    }
    if (res.verdict == Verdict::Feasible) {
      ++feasible;
      REQUIRE(res.structure);
      CHECK(verify_dstructure(*res.structure).empty());
    }
  }
  CHECK(violations > 50);
  CHECK(feasible > 50);
}
