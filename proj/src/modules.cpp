#include "qcox/modules.hpp"

#include "qcox/assoc_complex.hpp"
#include "qcox/errors.hpp"

namespace qcox {

Matrix WeightModule::act(const SparseVec& x) const {
  Matrix m(dim(), dim());
  for (auto& [k, c] : x) m += rho[k] * c;
  return m;
}

WeightModule irrep(const AlgebraPtr& alg, const std::vector<int>& highest, int bound) {
  GeneratorModule g = highest_weight_generators(alg->gcm, highest, bound);
  WeightModule v;
  v.alg = alg;
  v.highest = highest;
  v.weights = g.weights;
  v.rho.resize(alg->dim());
  for (int k = 0; k < alg->num_pos(); ++k) {
    const auto& st = alg->steps[k];
    if (st.i < 0) {
      int i = 0;
      while (!alg->roots[k][i]) ++i;
      v.rho[alg->e(k)] = g.e[i];
      v.rho[alg->f(k)] = g.f[i];
    } else {
      v.rho[alg->e(k)] = commutator(g.e[st.i], v.rho[alg->e(st.beta)]) * Rational(1, st.p + 1);
      v.rho[alg->f(k)] = commutator(g.f[st.i], v.rho[alg->f(st.beta)]) * Rational(-1, st.p + 1);
    }
  }
  for (int i = 0; i < alg->rank(); ++i) v.rho[alg->h(i)] = g.h[i];
  return v;
}

WeightModule trivial_module(const AlgebraPtr& alg) { return irrep(alg, std::vector<int>(alg->rank(), 0)); }

WeightModule fundamental(const AlgebraPtr& alg, int i) {
  std::vector<int> w(alg->rank(), 0);
  w[i] = 1;
  return irrep(alg, w);
}

WeightModule adjoint(const AlgebraPtr& alg) {
  int top = alg->num_pos() - 1;
  std::vector<int> w(alg->rank());
  for (int i = 0; i < alg->rank(); ++i) w[i] = alg->pair(alg->roots[top], i);
  return irrep(alg, w);
}

Matrix nilpotent_exp(const Matrix& m) {
  int n = m.rows();
  Matrix out = Matrix::identity(n), term = out;
  for (long k = 1; k <= n; ++k) {
    term = term * m * Rational(1, k);
    if (term.is_zero()) return out;
    out += term;
  }
  if (!(term * m).is_zero()) throw Error(ErrorKind::NotExponentiable, "matrix is not nilpotent");
  return out;
}

Matrix tilde_s(const WeightModule& v, int i) {
  Matrix ee = nilpotent_exp(v.e(i));
  return ee * nilpotent_exp(-v.f(i)) * ee;
}

Matrix casimir(const WeightModule& v, int i) {
  const Matrix &e = v.e(i), &f = v.f(i), &h = v.h(i);
  return (e * f + f * e + h * h * Rational(1, 2)) * v.alg->d[i];
}

SeriesMatrix s_ic(const WeightModule& v, int i, int order) {
  SeriesMatrix c = SeriesMatrix::monomial(casimir(v, i) * Rational(1, 2), 1, order);
  return SeriesMatrix::constant(tilde_s(v, i), order) * series_exp(c);
}

int coxeter_label(const Gcm& a, int i, int j) {
  switch (a(i, j) * a(j, i)) {
    case 0:
      return 2;
    case 1:
      return 3;
    case 2:
      return 4;
    case 3:
      return 6;
    default:
      return kInfinity;
  }
}

BraidReport check_braid(const WeightModule& v, int i, int j, BraidElements which, int order) {
  BraidReport rep;
  rep.m = coxeter_label(v.alg->gcm, i, j);
  if (rep.m == kInfinity) throw Error(ErrorKind::NoRelation, "m_ij is infinite");
  if (which == BraidElements::TildeS) {
    auto [l, r] = braid_products(tilde_s(v, i), tilde_s(v, j), rep.m, Matrix::identity(v.dim()));
    rep.pass = l == r;
    rep.order_ok = {rep.pass};
    rep.first_failing_order = rep.pass ? -1 : 0;
    return rep;
  }
  auto [l, r] = braid_products(s_ic(v, i, order), s_ic(v, j, order), rep.m, SeriesMatrix::identity(v.dim(), order));
  for (int k = 0; k <= order; ++k) {
    bool ok = l.coeff(k) == r.coeff(k);
    rep.order_ok.push_back(ok);
    if (!ok && rep.first_failing_order < 0) rep.first_failing_order = k;
  }
  rep.pass = rep.first_failing_order < 0;
  return rep;
}

}  // namespace qcox
