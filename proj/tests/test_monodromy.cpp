#include <doctest.h>

#include "qcox/monodromy.hpp"
#include "qcox/twist.hpp"
#include "test_util.hpp"

using namespace qcox;

namespace {

void check_expected_pattern(const CoproductReport& rep) {
  CHECK(rep.group_like);
  CHECK(rep.untwisted_ok);
  CHECK(rep.adjoint_flips_r);
  for (int k = 0; k <= rep.order; ++k) CHECK(rep.placement("untwisted").zero_at(k));
  CHECK(rep.placement("single_braid").zero_at(0));
  CHECK_FALSE(rep.placement("single_braid").zero_at(1));
  CHECK(rep.placement("twist_outside").zero_at(0));
  CHECK(rep.placement("twist_outside").zero_at(1));
  CHECK(rep.placement("twist_inside").zero_at(0));
  CHECK_FALSE(rep.placement("twist_inside").zero_at(1));
}

}  // namespace

TEST_CASE("local Casimir tensors agree with the Manin triple on sl2") {
  auto g = build_algebra("A1");
  auto t = double_triple(g);
  for (int a : {0, 1, 2})
    for (int b : {1, 2}) {
      auto v = irrep(g, {a}), w = irrep(g, {b});
      auto om = omega_and_r(*t, v, w);
      CHECK(omega_i(v, w, 0) == om.omega);
      CHECK(r_i(v, w, 0) == om.r);
    }
  auto b2 = build_algebra("B2");
  auto v = fundamental(b2, 0);
  for (int i = 0; i < 2; ++i) {
    Matrix expect = (kron(v.e(i), v.f(i)) + kron(v.f(i), v.e(i)) + kron(v.h(i), v.h(i)) * Rational(1, 2)) * b2->d[i];
    CHECK(omega_i(v, v, i) == expect);
    CHECK(omega_i(v, v, i) == r_i(v, v, i) + flip_operator(v.dim(), v.dim()) * r_i(v, v, i) * flip_operator(v.dim(), v.dim()));
  }
}

TEST_CASE("untwisted identity from first principles on sl2") {
  auto g = build_algebra("A1");
  auto v = irrep(g, {1}), w = irrep(g, {2});
  int order = 3;
  // Δ(S) = (s~⊗s~) exp((ħ/2) Δ(C)) with Δ(C) = C⊗1 + 1⊗C + 2Ω
  Matrix dc = kron(casimir(v, 0), Matrix::identity(w.dim())) + kron(Matrix::identity(v.dim()), casimir(w, 0)) +
              omega_i(v, w, 0) * Rational(2);
  Matrix ss = kron(tilde_s(v, 0), tilde_s(w, 0));
  SeriesMatrix lhs = SeriesMatrix::constant(ss, order) * series_exp(SeriesMatrix::monomial(dc * Rational(1, 2), 1, order));
  SeriesMatrix rhs = series_exp(SeriesMatrix::monomial(omega_i(v, w, 0), 1, order)) * kron(s_ic(v, 0, order), s_ic(w, 0, order));
  CHECK(lhs == rhs);
  auto rep = check_coproduct_identity(v, w, 0, 2);
  CHECK(rep.group_like);
  CHECK(rep.untwisted_ok);
}

TEST_CASE("sl2 V1⊗V1 with the computed twist") {
  auto g = build_algebra("A1");
  auto t = double_triple(g);
  auto s = parabolic_split(*t, 0);
  for (int hw : {1, 2}) {
    auto v = irrep(g, {hw});
    Matrix jet = one_jet(t, s, v, v);
    auto rep = check_coproduct_identity(v, v, 0, 2, jet);
    CHECK(rep.order == 2);
    CHECK(rep.jet == jet);
    check_expected_pattern(rep);
  }
}

TEST_CASE("higher rank with the default jet r_i/2") {
  for (std::string type : {"A2", "B2"}) {
    auto g = build_algebra(type);
    for (int i = 0; i < g->rank(); ++i) {
      auto v = fundamental(g, 0);
      auto rep = check_coproduct_identity(v, v, i, 2);
      CHECK(rep.jet == r_i(v, v, i) * Rational(1, 2));
      check_expected_pattern(rep);
    }
  }
}

TEST_CASE("trivial factors") {
  auto g = build_algebra("A1");
  auto triv = trivial_module(g);
  auto rep = check_coproduct_identity(triv, irrep(g, {2}), 0, 2);
  CHECK(rep.group_like);
  CHECK(rep.untwisted_ok);
  auto tt = check_coproduct_identity(triv, triv, 0, 2);
  for (const auto& p : tt.placements)
    for (size_t k = 0; k < p.residual.size(); ++k) CHECK(p.zero_at(int(k)));
  CHECK(error_kind([&] { tt.placement("nonexistent"); }).has_value());
}
