#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qcox/cartan.hpp"
#include "qcox/linalg.hpp"

namespace qcox {

using SparseVec = std::map<int, Rational>;

SparseVec& axpy(SparseVec& acc, const Rational& s, const SparseVec& x);
SparseVec scaled(const SparseVec& x, const Rational& s);

// A finite-dimensional Lie algebra given by structure constants on a basis.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(int dim) : dim_(dim), table_(size_t(dim) * dim) {}

  int dim() const { return dim_; }
  void set(int a, int b, const SparseVec& v);  // also sets [b,a] = -v
  const SparseVec& bracket(int a, int b) const { return table_[size_t(a) * dim_ + b]; }
  SparseVec bracket(const SparseVec& x, const SparseVec& y) const;
  // matrix of ad(x) in the basis
  Matrix ad(const SparseVec& x) const;
  bool antisymmetric() const;
  // first failing triple, or {-1,-1,-1}
  std::array<int, 3> jacobi_failure() const;

  std::vector<std::string> names;

 private:
  int dim_ = 0;
  std::vector<SparseVec> table_;
};

// Positive roots as coefficient vectors on the simple roots.
using Root = std::vector<int>;

// Split simple Lie algebra with a Chevalley basis.
// Basis order: e_alpha (positive roots), h_1..h_r, f_alpha.
struct ChevalleyAlgebra {
  Gcm gcm;
  std::vector<Rational> d;
  std::vector<Root> roots;        // by height, then lexicographically
  std::vector<Rational> root_d;   // d_alpha = (alpha,alpha)/2
  // non-simple alpha = alpha_i + beta with i minimal; e_alpha = [e_i, e_beta]/(p+1)
  struct Step {
    int i = -1, beta = -1, p = 0;
  };
  std::vector<Step> steps;
  LieAlgebra lie;
  Matrix form;  // Gram matrix of the invariant form

  int rank() const { return gcm.size(); }
  int num_pos() const { return int(roots.size()); }
  int dim() const { return 2 * num_pos() + rank(); }
  int e(int a) const { return a; }
  int h(int i) const { return num_pos() + i; }
  int f(int a) const { return num_pos() + rank() + a; }
  int simple(int i) const;  // root index of alpha_i
  int root_index(const Root& r) const;  // -1 if absent
  int height(int a) const;
  // weight of a basis element in simple-root coordinates
  std::vector<int> weight(int basis) const;
  // <alpha, h_i> for a root-lattice element
  int pair(const std::vector<int>& coeffs, int i) const;
  // h_alpha as a combination of h_i
  SparseVec coroot(int a) const;
  Rational inner(const SparseVec& x, const SparseVec& y) const;
};

using AlgebraPtr = std::shared_ptr<const ChevalleyAlgebra>;

std::vector<Root> positive_roots(const Gcm& a);

// Irreducible highest-weight module described by its Chevalley generators only.
// Weights are Dynkin labels <mu, h_i>. Throws BoundExceeded past `bound` dimensions.
struct GeneratorModule {
  std::vector<int> highest;
  std::vector<std::vector<int>> weights;
  std::vector<Matrix> e, f, h;
  int dim() const { return int(weights.size()); }
};
GeneratorModule highest_weight_generators(const Gcm& a, const std::vector<int>& highest, int bound);

// Throws NotFiniteType. Jacobi, integrality, [e_i,f_j] = δ_ij h_i, [e_a,f_a] = h_a and invariance of the form are
// verified during construction.
AlgebraPtr build_algebra(const Gcm& a);
AlgebraPtr build_algebra(const std::string& type);

}  // namespace qcox
