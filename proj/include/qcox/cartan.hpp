#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcox/diagram.hpp"
#include "qcox/linalg.hpp"

namespace qcox {

class Gcm {
 public:
  Gcm() = default;
  // throws NotGcm
  explicit Gcm(std::vector<std::vector<long>> entries);

  int size() const { return int(a_.size()); }
  long operator()(int i, int j) const { return a_[i][j]; }
  const std::vector<std::vector<long>>& entries() const { return a_; }
  Matrix matrix() const;
  Matrix submatrix(Mask j) const;
  Mask all() const { return size() == 64 ? ~Mask(0) : bit(size()) - 1; }
  // Vertices outside j joined to no vertex of j.
  Mask orthogonal_complement(Mask j) const;
  bool connected(Mask j) const;
  bool operator==(const Gcm& o) const { return a_ == o.a_; }

  std::optional<std::vector<Rational>> symmetrizer;

 private:
  std::vector<std::vector<long>> a_;
};

// Standard finite-type matrices: "A3", "B2", "C3", "D4", "G2", "F4"; products as "A1xA1".
// Convention a_ij = alpha_j(h_i); B_n has its short root last.
Gcm cartan_matrix(const std::string& type);

struct SymmetrizerResult {
  std::optional<std::vector<Rational>> d;
  std::vector<int> cycle;  // closed walk violating the product condition
};
SymmetrizerResult try_symmetrizer(const Gcm& a);
// Positive d with d_i a_ij = d_j a_ji, first entry of each component 1. Throws NotSymmetrizable.
std::vector<Rational> find_symmetrizer(const Gcm& a);

int corank(const Gcm& a, Mask j);

struct CorankViolation {
  Mask first = 0, second = 0;
  int corank_first = 0, corank_second = 0, corank_meet = 0;
};
std::optional<CorankViolation> check_corank_lemma(const Gcm& a, int bound = 8);

bool is_finite_type(const Gcm& a);
bool is_affine_type(const Gcm& a);

struct Realization {
  int n = 0;
  int dim = 0;
  Matrix alpha;                // row i is the covector alpha_i
  std::vector<Vec> coroots;    // h_i
  Matrix form;                 // Gram matrix on h
  std::vector<Rational> d;

  Subspace coroot_span(Mask j) const;
  // common kernel of alpha_j, j in J
  Subspace kernel(Mask j) const;
  Rational pair(const Vec& x, const Vec& y) const;
  bool nondegenerate_on(const Subspace& s) const;
  // rank of {alpha_j restricted to s}_{j in J}
  int restricted_rank(Mask j, const Subspace& s) const;
};

Realization build_realization(const Gcm& a);

struct DStructure {
  Gcm base;
  Realization realization;
  std::map<Mask, Subspace> subspaces;  // connected J, and the whole diagram
};

// Empty list means every invariant holds.
std::vector<std::string> verify_dstructure(const DStructure& s);

enum class Verdict { Feasible, Infeasible, Undecided };

struct DimensionObstruction {
  Mask j = 0;
  int available = 0;  // dim U_J
  int required = 0;   // 2|J| - rank A_J
  int image_rank = 0; // rank of alpha_J on U_J
};

struct DStructureAnalysis {
  Verdict verdict = Verdict::Undecided;
  std::optional<DStructure> structure;
  std::optional<CorankViolation> corank;
  std::optional<DimensionObstruction> obstruction;
  std::string explanation;
};

DStructureAnalysis analyze_dstructure(const Gcm& a, int bound = 8);
// throws NotAffine
DStructure affine_dstructure(const Gcm& a);

std::string verdict_name(Verdict v);
std::string mask_label(Mask m);  // "123" style, 1-based

}  // namespace qcox
