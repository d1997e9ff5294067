#include "qcox/monodromy.hpp"

#include <algorithm>

#include "qcox/errors.hpp"

namespace qcox {

Matrix omega_i(const WeightModule& v, const WeightModule& w, int i) {
  Matrix m = kron(v.e(i), w.f(i)) + kron(v.f(i), w.e(i)) + kron(v.h(i), w.h(i)) * Rational(1, 2);
  return m * v.alg->d[i];
}

Matrix r_i(const WeightModule& v, const WeightModule& w, int i) {
  return (kron(v.f(i), w.e(i)) + kron(v.h(i), w.h(i)) * Rational(1, 4)) * v.alg->d[i];
}

const PlacementResidual& CoproductReport::placement(const std::string& name) const {
  for (const auto& p : placements)
    if (p.name == name) return p;
  throw Error(ErrorKind::InvalidInput, "no placement " + name);
}

namespace {

std::vector<Matrix> coeffs(const SeriesMatrix& m, int upto) {
  std::vector<Matrix> out;
  for (int k = 0; k <= upto; ++k) out.push_back(m.coeff(k));
  return out;
}

}  // namespace

CoproductReport check_coproduct_identity(const WeightModule& v, const WeightModule& w, int i, int order,
                                         const std::optional<Matrix>& jet) {
  if (order < 0) throw Error(ErrorKind::InvalidInput, "order must be nonnegative");
  CoproductReport rep;
  rep.order = order;
  int dv = v.dim(), dw = w.dim(), n = dv * dw;
  Matrix sv = tilde_s(v, i), sw = tilde_s(w, i);
  Matrix ss = kron(sv, sw);
  Matrix om = omega_i(v, w, i);
  Matrix ri = r_i(v, w, i);
  Matrix p = flip_operator(dv, dw);

  // Δ(x) = x⊗1 + 1⊗x on the Lie algebra, so Δ(s~) = exp(Δe) exp(-Δf) exp(Δe)
  Matrix de = kron(v.e(i), Matrix::identity(dw)) + kron(Matrix::identity(dv), w.e(i));
  Matrix df = kron(v.f(i), Matrix::identity(dw)) + kron(Matrix::identity(dv), w.f(i));
  Matrix ds = nilpotent_exp(de) * nilpotent_exp(-df) * nilpotent_exp(de);
  rep.group_like = ds == ss;

  auto inv_ss = inverse(ss);
  if (!inv_ss) throw Error(ErrorKind::SingularSystem, "s~⊗s~ is singular");
  if (v.highest == w.highest) rep.adjoint_flips_r = ss * ri * (*inv_ss) == p * ri * p;

  // Δ(C) = C⊗1 + 1⊗C + 2Ω_i
  Matrix dc = kron(casimir(v, i), Matrix::identity(dw)) + kron(Matrix::identity(dv), casimir(w, i)) + om * Rational(2);
  SeriesMatrix delta_s =
      SeriesMatrix::constant(ds, order) * series_exp(SeriesMatrix::monomial(dc * Rational(1, 2), 1, order));
  SeriesMatrix s_tensor = kron(s_ic(v, i, order), s_ic(w, i, order));
  SeriesMatrix mono = series_exp(SeriesMatrix::monomial(om, 1, order));
  SeriesMatrix half = series_exp(SeriesMatrix::monomial(om * Rational(1, 2), 1, order));
  SeriesMatrix untw = delta_s - mono * s_tensor;
  rep.untwisted_ok = untw.is_zero();
  rep.placements.push_back({"untwisted", coeffs(untw, order)});
  rep.placements.push_back({"single_braid", coeffs(delta_s - half * s_tensor, order)});

  rep.jet = jet ? *jet : ri * Rational(1, 2);
  if (rep.jet.rows() != n || rep.jet.cols() != n) throw Error(ErrorKind::InvalidInput, "jet has the wrong size");
  int tw = std::min(order, 1);
  SeriesMatrix one = SeriesMatrix::identity(n, tw);
  SeriesMatrix j = one + SeriesMatrix::monomial(rep.jet, 1, tw);
  SeriesMatrix jinv = one - SeriesMatrix::monomial(rep.jet, 1, tw);
  if (v.highest == w.highest) {
    SeriesMatrix j21inv = one - SeriesMatrix::monomial(p * rep.jet * p, 1, tw);
    SeriesMatrix ds_t = SeriesMatrix::constant(ds, tw) *
                        series_exp(SeriesMatrix::monomial(dc * Rational(1, 2), 1, tw));
    SeriesMatrix st = kron(s_ic(v, i, tw), s_ic(w, i, tw));
    SeriesMatrix m_t = series_exp(SeriesMatrix::monomial(om, 1, tw));
    SeriesMatrix lhs = j * ds_t * jinv;
    rep.placements.push_back({"twist_outside", coeffs(lhs - j * m_t * j21inv * st, tw)});
    rep.placements.push_back({"twist_inside", coeffs(lhs - j * m_t * jinv * st, tw)});
  }
  return rep;
}

}  // namespace qcox
