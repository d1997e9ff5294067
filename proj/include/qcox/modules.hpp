#pragma once

#include <string>
#include <vector>

#include "qcox/lie_algebra.hpp"
#include "qcox/series.hpp"

namespace qcox {

struct WeightModule {
  AlgebraPtr alg;
  std::vector<int> highest;
  std::vector<std::vector<int>> weights;  // Dynkin labels per basis vector
  std::vector<Matrix> rho;                // one matrix per algebra basis element

  int dim() const { return int(weights.size()); }
  const Matrix& e(int i) const { return rho[alg->e(alg->simple(i))]; }
  const Matrix& f(int i) const { return rho[alg->f(alg->simple(i))]; }
  const Matrix& h(int i) const { return rho[alg->h(i)]; }
  Matrix act(const SparseVec& x) const;
};

constexpr int kDefaultModuleBound = 400;

// Irreducible module of dominant integral highest weight; throws BoundExceeded.
WeightModule irrep(const AlgebraPtr& alg, const std::vector<int>& highest, int bound = kDefaultModuleBound);
WeightModule trivial_module(const AlgebraPtr& alg);
WeightModule fundamental(const AlgebraPtr& alg, int i);
WeightModule adjoint(const AlgebraPtr& alg);

// exp of a nilpotent matrix; throws NotExponentiable
Matrix nilpotent_exp(const Matrix& m);

// exp(e_i) exp(-f_i) exp(e_i)
Matrix tilde_s(const WeightModule& v, int i);
// d_i (e_i f_i + f_i e_i + h_i^2/2)
Matrix casimir(const WeightModule& v, int i);
// s~_i exp((ħ/2) C_i) modulo ħ^{order+1}
SeriesMatrix s_ic(const WeightModule& v, int i, int order);

enum class BraidElements { TildeS, SIC };

struct BraidReport {
  int m = 0;
  bool pass = true;
  // for SIC: lowest order at which the two products differ, or -1
  int first_failing_order = -1;
  std::vector<bool> order_ok;
};

// Alternating m_ij-fold products of the chosen elements. Throws NoRelation for m_ij = infinity.
BraidReport check_braid(const WeightModule& v, int i, int j, BraidElements which = BraidElements::TildeS,
                        int order = 0);

// Coxeter exponent m_ij from a_ij a_ji
int coxeter_label(const Gcm& a, int i, int j);

}  // namespace qcox
