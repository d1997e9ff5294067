#include <doctest.h>

#include "qcox/manin.hpp"
#include "test_util.hpp"

using namespace qcox;

namespace {

std::vector<Mask> all_subsets(int n) {
  std::vector<Mask> out;
  for (Mask d = 0; d < (Mask(1) << n); ++d) out.push_back(d);
  return out;
}

int g_rank(const ManinTriple& t, const std::vector<int>& idx) {
  std::vector<Vec> rows;
  for (int x : idx) {
    Vec v(t.alg->dim(), 0);
    for (auto& [k, c] : t.to_g[x]) v[k] = c;
    rows.push_back(v);
  }
  return rows.empty() ? 0 : rank(Matrix::from_rows(rows, t.alg->dim()));
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

TEST_CASE("the double is a Manin triple") {
  for (std::string type : {"A1", "A2", "B2", "G2", "A3"}) {
    auto g = build_algebra(type);
    for (Mask adapt : {Mask(0), g->gcm.all()}) {
      auto t = double_triple(g, adapt);
      CHECK(t->dim() == 2 * g->num_pos() + 2 * g->rank());
      CHECK(t->plus.size() == t->minus.size());
      CHECK(int(t->plus.size() + t->minus.size()) == t->dim());
      CHECK(t->lie.jacobi_failure() == std::array<int, 3>{-1, -1, -1});
      for (int x : t->plus)
        for (int y : t->plus) CHECK(t->form(x, y) == 0);
      for (int x : t->minus)
        for (int y : t->minus) CHECK(t->form(x, y) == 0);
      Matrix pairing(int(t->minus.size()), int(t->plus.size()));
      for (size_t a = 0; a < t->minus.size(); ++a)
        for (size_t b = 0; b < t->plus.size(); ++b) pairing(int(a), int(b)) = t->form(t->minus[a], t->plus[b]);
      CHECK(determinant(pairing) != 0);
      for (int x = 0; x < t->dim(); ++x)
        for (int y = 0; y < t->dim(); ++y)
          for (int z = 0; z < t->dim(); ++z) {
            SparseVec xy = t->lie.bracket(x, y), yz = t->lie.bracket(y, z);
            CHECK(t->inner(xy, {{z, 1}}) == t->inner({{x, 1}}, yz));
          }
      // to_g is a Lie map
      for (int x = 0; x < t->dim(); ++x)
        for (int y = 0; y < t->dim(); ++y) {
          SparseVec img;
          for (auto& [k, c] : t->lie.bracket(x, y)) axpy(img, c, t->to_g[k]);
          CHECK(img == g->lie.bracket(t->to_g[x], t->to_g[y]));
        }
      for (int x : t->plus) CHECK(t->grade[x] > 0);
      auto dual = dual_basis(*t, t->minus, t->plus);
      for (size_t k = 0; k < t->minus.size(); ++k)
        for (size_t l = 0; l < t->plus.size(); ++l)
          CHECK(t->inner({{t->minus[k], 1}}, dual[l]) == (k == l ? 1 : 0));
    }
  }
}

TEST_CASE("adapted Cartan basis") {
  auto g = build_algebra("A2");
  auto basis = adapted_cartan_basis(g, 0b01);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == Vec{1, 0});
  SparseVec h1{{g->h(0), 1}}, c{{g->h(0), basis[1][0]}, {g->h(1), basis[1][1]}};
  CHECK(g->inner(h1, c) == 0);
  CHECK_FALSE(is_zero(basis[1]));
}

TEST_CASE("parabolic splits satisfy every invariant") {
  for (std::string type : {"A1", "A2", "A3", "B2", "G2"}) {
    auto g = build_algebra(type);
    for (Mask d : all_subsets(g->rank()))
      for (auto conv : {CartanConvention::Coroots, CartanConvention::Full}) {
        auto t = double_triple(g, d);
        auto s = parabolic_split(*t, d, conv);
        INFO(type << " D=" << d);
        CHECK(verify_split(*t, s).empty());
        CHECK(s.m_plus.size() == s.m_minus.size());
        CHECK(s.gd.size() + s.m_plus.size() + s.m_minus.size() == size_t(t->dim()));
        CHECK(s.p_plus.size() == s.gd.size() + s.m_plus.size());
      }
  }
}

TEST_CASE("split examples") {
  auto g = build_algebra("A2");
  int a1 = g->simple(0), a2 = g->simple(1), a12 = g->root_index({1, 1});
  auto t = double_triple(g, 0b01);

  auto full = parabolic_split(*t, 0b01, CartanConvention::Full);
  std::vector<int> expect{dbl_f(*t, a2), dbl_f(*t, a12)};
  auto mm = full.m_minus;
  std::sort(mm.begin(), mm.end());
  std::sort(expect.begin(), expect.end());
  CHECK(mm == expect);
  // in g, p_+ = b_+ + span(f_1)
  CHECK(g_rank(*t, full.p_plus) == g->num_pos() + g->rank() + 1);
  CHECK(contains(full.p_plus, dbl_f(*t, a1)));
  for (int x : t->plus) CHECK(contains(full.p_plus, x));

  // the coroot convention additionally puts η_-(h_D^⊥) into m_-
  auto co = parabolic_split(*t, 0b01);
  CHECK(co.m_minus.size() == 3);
  CHECK(contains(co.m_minus, dbl_hm(*t, 1)));
  CHECK(contains(co.m_plus, dbl_hp(*t, 1)));
  CHECK(contains(co.gd, dbl_e(*t, a1)));
  CHECK(contains(co.gd, dbl_f(*t, a1)));

  auto none = parabolic_split(*t, 0);
  CHECK(none.gd.empty());
  CHECK(none.m_plus.size() == t->plus.size());
  auto all = parabolic_split(*t, 0b11);
  CHECK(all.m_plus.empty());
  CHECK(all.m_minus.empty());
  CHECK(int(all.gd.size()) == t->dim());

  // planted defects
  auto bad = co;
  bad.m_minus.erase(std::find(bad.m_minus.begin(), bad.m_minus.end(), dbl_f(*t, a12)));
  bad.gd.push_back(dbl_f(*t, a12));
  CHECK_FALSE(verify_split(*t, bad).empty());
  bad = co;
  bad.gd.erase(std::find(bad.gd.begin(), bad.gd.end(), dbl_f(*t, a1)));
  bad.gd_minus.erase(std::find(bad.gd_minus.begin(), bad.gd_minus.end(), dbl_f(*t, a1)));
  bad.m_minus.push_back(dbl_f(*t, a1));
  CHECK_FALSE(verify_split(*t, bad).empty());
}

TEST_CASE("cobracket on simple generators") {
  for (std::string type : {"A1", "A2", "B2", "G2"}) {
    auto g = build_algebra(type);
    auto t = double_triple(g, g->gcm.all());
    for (int i = 0; i < g->rank(); ++i) {
      REQUIRE(t->cartan[i] == [&] {
        Vec v(g->rank(), 0);
        v[i] = 1;
        return v;
      }());
      Rational half = g->d[i] / 2;
      int e = dbl_e(*t, g->simple(i)), hp = dbl_hp(*t, i), f = dbl_f(*t, g->simple(i)), hm = dbl_hm(*t, i);
      std::map<std::pair<int, int>, Rational> de{{{e, hp}, half}, {{hp, e}, -half}};
      std::map<std::pair<int, int>, Rational> df{{{f, hm}, half}, {{hm, f}, -half}};
      CHECK(cobracket(*t, e) == de);
      CHECK(cobracket(*t, f) == df);
    }
  }
}

TEST_CASE("r-matrix and Casimir tensor") {
  auto g = build_algebra("A1");
  auto t = double_triple(g);
  auto v = irrep(g, {1});
  auto o = omega_and_r(*t, v, v);
  CHECK(o.r == kron(v.f(0), v.e(0)) + kron(v.h(0), v.h(0)) * Rational(1, 4));
  CHECK(o.omega == o.r + o.r21);
  CHECK(o.omega == o.omega_direct);
  Matrix p = flip_operator(2, 2);
  CHECK(o.r21 == p * o.r * p);

  for (std::string type : {"A2", "B2"}) {
    auto alg = build_algebra(type);
    std::vector<WeightModule> mods{trivial_module(alg), fundamental(alg, 0), fundamental(alg, 1), adjoint(alg)};
    for (Mask d = 0; d <= alg->gcm.all(); ++d) {
      auto td = double_triple(alg, d);
      for (auto conv : {CartanConvention::Coroots, CartanConvention::Full}) {
        auto split = parabolic_split(*td, d, conv);
        for (size_t a = 0; a < mods.size(); ++a)
          for (size_t b = a; b < mods.size(); ++b) {
            if (mods[a].dim() * mods[b].dim() > 40) continue;
            auto om = omega_and_r(*td, mods[a], mods[b], &split);
            CHECK(om.omega == om.r + om.r21);
            CHECK(om.omega == om.omega_direct);
            CHECK(om.omega_d == om.r_d + om.r_d21);
            for (int x = 0; x < alg->dim(); ++x) {
              Matrix dx = coproduct(mods[a], mods[b], {{x, 1}});
              CHECK(commutator(om.omega, dx).is_zero());
            }
            for (int x : split.gd) CHECK(commutator(om.omega_d, coproduct(mods[a], mods[b], td->to_g[x])).is_zero());
            if (a == 0) CHECK(om.omega.is_zero());
            if (d == alg->gcm.all() && conv == CartanConvention::Full) {
              CHECK(om.omega_d == om.omega);
              CHECK(om.r_d == om.r);
            }
            if (d == 0 && conv == CartanConvention::Coroots) CHECK(om.omega_d.is_zero());
          }
      }
    }
  }
  auto v2 = irrep(g, {2});
  CHECK(coproduct(v, v2, {{g->h(0), 1}}) == kron(v.h(0), Matrix::identity(3)) + kron(Matrix::identity(2), v2.h(0)));
}
