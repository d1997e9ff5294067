#include "qcox/twist.hpp"

#include <algorithm>

#include "qcox/errors.hpp"

namespace qcox {

int lowest_weight_height(const WeightModule& v) {
  const Gcm& a = v.alg->gcm;
  int n = a.size();
  auto inv = inverse(a.matrix());
  if (!inv) throw Error(ErrorKind::NotFiniteType, "Cartan matrix is singular");
  Rational best = 0;
  for (const auto& mu : v.weights) {
    Rational h = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) h += (*inv)(i, j) * (v.highest[j] - mu[j]);
    best = std::max(best, h);
  }
  return int(best.get_num().get_si() / best.get_den().get_si());
}

int auto_depth(const ManinTriple& t, const WeightModule& v, const WeightModule& w) {
  return std::max(minimal_depth(t), lowest_weight_height(v) + lowest_weight_height(w) + 1);
}

Matrix one_jet(const TriplePtr& t, const ParabolicSplit& s, const WeightModule& v, const WeightModule& w, int depth) {
  if (depth <= 0) depth = auto_depth(*t, v, w);
  if (depth < minimal_depth(*t)) throw Error(ErrorKind::DepthInsufficient, "depth below the largest grade");
  int dv = v.dim(), dw = w.dim();
  InducedModule np = build_verma(t, s, VermaKind::NPlus, depth);
  std::vector<Intertwiner> g;
  for (int j = 0; j < dw; ++j) {
    Vec unit(dw, Rational(0));
    unit[j] = 1;
    g.push_back(solve_intertwiner(np, w, unit));
  }
  auto dual = dual_basis(*t, t->minus, t->plus);
  Matrix out(dv * dw, dv * dw);
  auto add = [&](const Matrix& xv, const SparseVec& y) {
    SparseVec y1 = np.act(y, np.generator());
    if (y1.empty()) return;
    for (int j = 0; j < dw; ++j) {
      Vec gy = g[j].apply(y1);
      for (int q = 0; q < dw; ++q) {
        if (gy[q] == 0) continue;
        for (int p = 0; p < dv; ++p)
          for (int i = 0; i < dv; ++i)
            if (xv(p, i) != 0) out(p * dw + q, i * dw + j) += Rational(1, 2) * xv(p, i) * gy[q];
      }
    }
  };
  for (size_t k = 0; k < t->minus.size(); ++k) {
    SparseVec ak{{t->minus[k], 1}};
    add(t->act(v, ak), dual[k]);
    add(t->act(v, dual[k]), ak);
  }
  return out;
}

SeriesMatrix one_jet_twist(const TriplePtr& t, const ParabolicSplit& s, const WeightModule& v, const WeightModule& w,
                           int depth) {
  int n = v.dim() * w.dim();
  return SeriesMatrix::identity(n, 1) + SeriesMatrix::monomial(one_jet(t, s, v, w, depth), 1, 1);
}

JetReport verify_one_jet(const TriplePtr& t, const ParabolicSplit& s, const WeightModule& v, const WeightModule& w,
                         int depth) {
  JetReport rep;
  rep.depth = depth <= 0 ? auto_depth(*t, v, w) : depth;
  rep.jet = one_jet(t, s, v, w, rep.depth);
  OmegaData o = omega_and_r(*t, v, w, &s);
  rep.expected = (o.r + o.r_d21) * Rational(1, 2);
  rep.matches = rep.jet == rep.expected;
  rep.stable = one_jet(t, s, v, w, rep.depth + 2) == rep.jet;
  if (v.highest == w.highest) {
    int d = v.dim();
    rep.alt = alt2(rep.jet, d, d);
    rep.alt_expected = ((o.r - o.r21) - (o.r_d - o.r_d21)) * Rational(1, 4);
    rep.alt_matches = rep.alt == rep.alt_expected;
  }
  return rep;
}

GaugeReport gauge_chain(const AlgebraPtr& alg, Mask d, const WeightModule& v, const WeightModule& w,
                        CartanConvention conv) {
  GaugeReport rep;
  TriplePtr t0 = double_triple(alg);
  rep.direct = one_jet(t0, parabolic_split(*t0, 0, conv), v, w);
  TriplePtr td = double_triple(alg, d);
  ParabolicSplit sd = parabolic_split(*td, d, conv);
  rep.outer = one_jet(td, sd, v, w);
  TriplePtr inner = sub_triple(*td, sd.gd);
  ParabolicSplit si = split_from(*inner, {});
  rep.inner = one_jet(inner, si, v, w, auto_depth(*td, v, w));
  rep.difference = rep.direct - (rep.outer + rep.inner);
  OmegaData o = omega_and_r(*td, v, w, &sd);
  rep.half_omega_d = o.omega_d * Rational(1, 2);
  if (v.highest == w.highest) {
    Matrix p = flip_operator(v.dim(), w.dim());
    rep.symmetric = p * rep.difference * p == rep.difference;
    rep.alt_zero = alt2(rep.difference, v.dim(), w.dim()).is_zero();
  }
  rep.equals_minus_half_omega_d = rep.difference == rep.half_omega_d * Rational(-1);
  return rep;
}

}  // namespace qcox
