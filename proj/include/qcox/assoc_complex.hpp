#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcox/groups.hpp"
#include "qcox/nested_sets.hpp"

namespace qcox {

struct FacePoset {
  ContextPtr ctx;
  std::vector<NestedSet> faces;  // ordered by dimension, then by nested-set order
  std::vector<int> dims;
  std::vector<std::pair<int, int>> covers;  // (lower, upper): upper is obtained by dropping one member
  std::map<int, int> f_vector;
  int euler_characteristic() const;
};

FacePoset build_face_poset(const ContextPtr& ctx, int bound = kDefaultEnumerationBound);
inline FacePoset build_face_poset(const DiagramPtr& d, int bound = kDefaultEnumerationBound) {
  return build_face_poset(make_context(d), bound);
}

struct OneSkeleton {
  ContextPtr ctx;
  std::vector<NestedSet> vertices;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> neighbours() const;
  bool connected() const;
};

OneSkeleton one_skeleton(const ContextPtr& ctx, int bound = kDefaultEnumerationBound);
inline OneSkeleton one_skeleton(const DiagramPtr& d, int bound = kDefaultEnumerationBound) {
  return one_skeleton(make_context(d), bound);
}

struct TwoFaceCycle {
  NestedSet face;
  std::vector<int> boundary;  // indices into the skeleton vertices, cyclic
};
std::vector<TwoFaceCycle> two_face_cycles(const OneSkeleton& sk);

// Values on oriented elementary pairs; storing (F,G) fixes (G,F) to the inverse.
class PhiAssignment {
 public:
  PhiAssignment(Carrier carrier, ContextPtr ctx) : carrier_(std::move(carrier)), ctx_(std::move(ctx)) {}

  const Carrier& carrier() const { return carrier_; }
  const ContextPtr& context() const { return ctx_; }
  void set(const NestedSet& f, const NestedSet& g, const GroupElement& value);
  bool has(const NestedSet& f, const NestedSet& g) const;
  // throws MissingPair
  GroupElement get(const NestedSet& f, const NestedSet& g) const;
  // value(H1,H2) * value(H2,H3) * ... ; first step leftmost
  GroupElement path_product(const std::vector<NestedSet>& path) const;

  static PhiAssignment identity(const Carrier& c, const ContextPtr& ctx, int bound = kDefaultEnumerationBound);
  // value(F,G) = rho(F)^-1 rho(G)
  static PhiAssignment telescoping(const Carrier& c, const OneSkeleton& sk, const std::vector<GroupElement>& rho);

 private:
  Carrier carrier_;
  ContextPtr ctx_;
  std::map<std::pair<std::vector<Mask>, std::vector<Mask>>, GroupElement> values_;
};

struct CoherenceFailure {
  NestedSet face;
  std::vector<NestedSet> path1, path2;
  std::string product1, product2;
};

struct CoherenceReport {
  bool pass = true;
  int faces_checked = 0;
  std::optional<CoherenceFailure> failure;
};

CoherenceReport check_coherence(const PhiAssignment& phi, int bound = kDefaultEnumerationBound);

// Cross-check: products along all walks of length <= max_len with common endpoints agree.
bool walk_products_agree(const PhiAssignment& phi, int max_len, int bound = kDefaultEnumerationBound);

// A family of assignments over relative diagrams (outer, inner).
using PhiFamily = std::map<std::pair<Mask, Mask>, PhiAssignment>;

struct FactorizationReport {
  bool factorization = true;
  bool support = true;
  bool forgetfulness = true;
  int factorization_checks = 0;
  int support_checks = 0;
  int forgetfulness_checks = 0;
  std::vector<std::string> failures;
  bool pass() const { return factorization && support && forgetfulness; }
};

FactorizationReport check_factorization(const PhiFamily& family, int bound = kDefaultEnumerationBound);

struct LabeledDiagramGroup {
  DiagramPtr diagram;
};

using Word = std::vector<int>;
// The two alternating words of length m_ij; throws NoRelation for m_ij = infinity.
std::pair<Word, Word> braid_words(const LabeledDiagramGroup& g, int i, int j);

// Braid relation Ad(phi)(S_i) S_j ... = S_j Ad(phi)(S_i) ... with m factors, for any ring-like T.
template <class T>
std::pair<T, T> braid_products(const T& si, const T& sj, int m, const T& one) {
  T left = one, right = one;
  for (int k = 0; k < m; ++k) {
    left = left * ((k % 2 == 0) ? si : sj);
    right = right * ((k % 2 == 0) ? sj : si);
  }
  return {left, right};
}

std::string skeleton_dot(const OneSkeleton& sk);
std::string face_label(const NestedSet& h);

}  // namespace qcox
