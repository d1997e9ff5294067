#pragma once

#include "qcox/verma.hpp"

namespace qcox {

// Height of highest minus lowest weight, in simple roots.
int lowest_weight_height(const WeightModule& v);
// max(minimal_depth, ht_low(V) + ht_low(W) + 1)
int auto_depth(const ManinTriple& t, const WeightModule& v, const WeightModule& w);

// Order-1 coefficient of the relative twist on V⊗W, computed from the N_+ intertwiners:
// J_1(v⊗w) = 1/2 Σ_k (a_k v ⊗ G_w(b^k 1_+) + b^k v ⊗ G_w(a_k 1_+)).
// depth <= 0 picks auto_depth.
Matrix one_jet(const TriplePtr& t, const ParabolicSplit& s, const WeightModule& v, const WeightModule& w,
               int depth = 0);
// 1 + ħ J_1 modulo ħ^2
SeriesMatrix one_jet_twist(const TriplePtr& t, const ParabolicSplit& s, const WeightModule& v,
                           const WeightModule& w, int depth = 0);

struct JetReport {
  Matrix jet, expected;        // expected = (r + r_D^{21})/2
  Matrix alt, alt_expected;    // only for V = W: Alt_2 of jet against ((r - r^{21}) - (r_D - r_D^{21}))/4
  int depth = 0;
  bool matches = false, alt_matches = false;
  bool stable = false;         // same jet at depth + 2
};
JetReport verify_one_jet(const TriplePtr& t, const ParabolicSplit& s, const WeightModule& v, const WeightModule& w,
                         int depth = 0);

// Chain 0 ⊆ D ⊆ full: direct twist for D = ∅ against the outer twist for D composed with the
// twist of the Manin triple of g_D (split at ∅). At order 1 the difference is -Ω_D/2.
struct GaugeReport {
  Matrix direct, outer, inner, difference, half_omega_d;
  bool symmetric = false, alt_zero = false, equals_minus_half_omega_d = false;
};
GaugeReport gauge_chain(const AlgebraPtr& alg, Mask d, const WeightModule& v, const WeightModule& w,
                        CartanConvention conv = CartanConvention::Coroots);

}  // namespace qcox
