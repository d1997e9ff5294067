#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcox/modules.hpp"

namespace qcox {

// d_i (e⊗f + f⊗e + h⊗h/2) for the sl2-triple of vertex i
Matrix omega_i(const WeightModule& v, const WeightModule& w, int i);
// d_i (f⊗e + h⊗h/4)
Matrix r_i(const WeightModule& v, const WeightModule& w, int i);

struct PlacementResidual {
  std::string name;
  std::vector<Matrix> residual;  // one coefficient per checked order
  bool zero_at(int k) const { return k < int(residual.size()) && residual[k].is_zero(); }
};

struct CoproductReport {
  int order = 0;
  bool group_like = false;       // Δ(s~) = s~⊗s~ on V⊗W
  bool untwisted_ok = false;     // Δ(S) = exp(ħΩ_i)(S⊗S) at every order
  bool adjoint_flips_r = false;  // (s~⊗s~) r_i (s~⊗s~)^{-1} = r_i^{21}
  Matrix jet;                    // order-1 coefficient of J used
  // Δ_J(S) = J Δ(S) J^{-1} against
  //   twist_outside: J exp(ħΩ_i) (J^{21})^{-1} (S⊗S)
  //   twist_inside:  J exp(ħΩ_i) J^{-1} (S⊗S)
  //   single_braid:  exp((ħ/2)Ω_i) (S⊗S), untwisted
  std::vector<PlacementResidual> placements;
  const PlacementResidual& placement(const std::string& name) const;
};

// S = S_{i,C}. Twisted residuals need V = W; they are computed for orders <= min(order, 1),
// stop at order 1 since the twist is known only to first order. `jet` defaults to r_i/2.
CoproductReport check_coproduct_identity(const WeightModule& v, const WeightModule& w, int i, int order,
                                         const std::optional<Matrix>& jet = std::nullopt);

}  // namespace qcox
