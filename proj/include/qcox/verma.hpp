#pragma once

#include <map>
#include <memory>
#include <vector>

#include "qcox/manin.hpp"

namespace qcox {

// Ind from the span of `sub` of the trivial module, truncated at total grade `depth`.
// Basis: ordered PBW monomials in the complement; complement indices come before sub indices.
class InducedModule {
 public:
  using Monomial = std::vector<int>;  // non-decreasing positions into order()

  InducedModule(TriplePtr t, std::vector<int> complement, std::vector<int> sub, int depth);

  const ManinTriple& triple() const { return *t_; }
  int depth() const { return depth_; }
  int dim() const { return int(basis_.size()); }
  const std::vector<Monomial>& basis() const { return basis_; }
  const std::vector<int>& order() const { return order_; }
  const std::vector<int>& complement() const { return complement_; }
  const std::vector<int>& sub() const { return sub_; }
  int grade(const Monomial& m) const;
  int grade_of(int basis_index) const { return grade(basis_[basis_index]); }
  int index(const Monomial& m) const;  // -1 if absent
  int element_grade(int x) const { return t_->grade[x]; }
  // largest grade of a vector in v
  int grade(const SparseVec& v) const;

  // x·v for a basis element x of the triple. Throws DepthInsufficient unless exact at this depth.
  SparseVec act(int x, const SparseVec& v) const;
  SparseVec act(const SparseVec& x, const SparseVec& v) const;
  // u·1 for the monomial u read in the triple basis; used for the right action
  SparseVec generator() const { return {{0, 1}}; }
  std::string name(int basis_index) const;

 private:
  SparseVec mul(int pos, const Monomial& m) const;

  TriplePtr t_;
  std::vector<int> complement_, sub_, order_;
  std::vector<int> pos_of_;  // triple basis index -> position in order_
  int depth_;
  std::vector<Monomial> basis_;
  std::map<Monomial, int> index_;
  mutable std::map<std::pair<int, Monomial>, SparseVec> memo_;
};

enum class VermaKind { MMinus, MPlus, LMinus, NPlus };

InducedModule build_verma(const TriplePtr& t, const ParabolicSplit& s, VermaKind kind, int depth);

// F: N_+ -> V with F(y n) = y F(n) for y in p_+ and F(1_+) = v, solved as one exact system
// over all monomials of grade <= depth. Throws SingularSystem if not unique.
struct Intertwiner {
  std::vector<Vec> values;  // F(basis monomial)
  int rank = 0, unknowns = 0;
  Vec apply(const SparseVec& n) const;
};
Intertwiner solve_intertwiner(const InducedModule& nplus, const WeightModule& v, const Vec& vec);

// Smallest depth at which every single basis element of the triple acts exactly on the generator.
int minimal_depth(const ManinTriple& t);

// (i_-⊗1)i_- = (1⊗i_-)i_- on the PBW basis of L_-, and i_- intertwines the action of `checked` elements.
struct CoalgebraReport {
  bool coassociative = true;
  bool equivariant = true;
  int monomials = 0;
};
CoalgebraReport check_coalgebra(const InducedModule& lminus);

// Right g_D action on N_+ commutes with the left action of every triple basis element, up to depth.
bool check_bimodule(const InducedModule& nplus, const ParabolicSplit& s);

}  // namespace qcox
