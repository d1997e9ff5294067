#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qcox/modules.hpp"

namespace qcox {

// A finite-dimensional graded Manin triple acting on g-modules through `to_g`.
struct ManinTriple {
  AlgebraPtr alg;
  LieAlgebra lie;
  Matrix form;
  std::vector<int> plus, minus;  // bases of the isotropic halves
  std::vector<int> grade;        // positive degree of each basis element
  std::vector<SparseVec> to_g;   // image of each basis element in g
  std::vector<Vec> cartan;       // for the double: Cartan basis c_k over the h_i

  int dim() const { return lie.dim(); }
  Matrix act(const WeightModule& v, int x) const { return v.act(to_g[x]); }
  Matrix act(const WeightModule& v, const SparseVec& x) const;
  Rational inner(const SparseVec& x, const SparseVec& y) const;
};
using TriplePtr = std::shared_ptr<const ManinTriple>;

// {h_j : j in D} followed by a basis of the orthogonal complement of their span.
std::vector<Vec> adapted_cartan_basis(const AlgebraPtr& alg, Mask d);

// g ⊕ h with b_± = {(x, ±x_0)}; basis e_a, η_+(c_k), η_-(c_k), f_a. Form <,>_g - <,>_h, h central.
TriplePtr double_triple(const AlgebraPtr& alg, Mask adapted_to = 0);

// Index helpers for the double.
inline int dbl_e(const ManinTriple&, int a) { return a; }
inline int dbl_hp(const ManinTriple& t, int k) { return t.alg->num_pos() + k; }
inline int dbl_hm(const ManinTriple& t, int k) { return t.alg->num_pos() + t.alg->rank() + k; }
inline int dbl_f(const ManinTriple& t, int a) { return t.alg->num_pos() + 2 * t.alg->rank() + a; }

// Restriction to a subalgebra spanned by basis elements, keeping the module action.
TriplePtr sub_triple(const ManinTriple& t, const std::vector<int>& indices);

enum class CartanConvention {
  Coroots,  // g_D carries span{h_j : j in D}
  Full      // g_D carries the whole Cartan subalgebra
};

struct ParabolicSplit {
  Mask d = 0;
  std::vector<int> gd, gd_plus, gd_minus;
  std::vector<int> m_plus, m_minus;
  std::vector<int> p_plus, p_minus;
};

// Split from an explicit g_D basis (a subset of the triple's basis).
ParabolicSplit split_from(const ManinTriple& t, std::vector<int> gd);
ParabolicSplit parabolic_split(const ManinTriple& t, Mask d, CartanConvention conv = CartanConvention::Coroots);
// Empty list when every invariant holds.
std::vector<std::string> verify_split(const ManinTriple& t, const ParabolicSplit& s);

// Dual basis of `plus` to the basis `minus` under the pairing, both restricted to given index lists.
// Row k is b^k with <a_k, b^l> = δ_kl. Throws DegeneratePairing.
std::vector<SparseVec> dual_basis(const ManinTriple& t, const std::vector<int>& minus, const std::vector<int>& plus);

// δ(x) as coefficients on basis pairs: δ on b_+ dual to the bracket of b_-, on b_- minus the dual of b_+.
std::map<std::pair<int, int>, Rational> cobracket(const ManinTriple& t, int x);

struct OmegaData {
  Matrix omega;         // from r + r^{21}
  Matrix omega_direct;  // from the inverse Gram matrix of g
  Matrix r, r21;
  Matrix omega_d, r_d, r_d21;
};

// Operators on V⊗W. r = Σ a_k ⊗ b^k with a_k running over b_-.
OmegaData omega_and_r(const ManinTriple& t, const WeightModule& v, const WeightModule& w,
                      const ParabolicSplit* split = nullptr);

// Δ(x) on V⊗W for an element of g
Matrix coproduct(const WeightModule& v, const WeightModule& w, const SparseVec& x);

}  // namespace qcox
