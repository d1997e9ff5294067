#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "qcox/diagram.hpp"

namespace qcox {

constexpr int kDefaultEnumerationBound = 10;

// The relative diagram B'/B, kept in the index space of the base diagram D.
// inner == 0 means B' itself.
struct RelativeContext {
  DiagramPtr base;
  Mask outer = 0;
  Mask inner = 0;
  MaskGraph graph;

  Mask vertices() const { return graph.verts; }
  int size() const { return popcount(graph.verts); }
  bool operator==(const RelativeContext& o) const {
    return outer == o.outer && inner == o.inner && *base == *o.base;
  }
};
using ContextPtr = std::shared_ptr<const RelativeContext>;

ContextPtr make_context(const DiagramPtr& base, Mask outer, Mask inner = 0);
inline ContextPtr make_context(const DiagramPtr& base) { return make_context(base, base->all(), 0); }

// Members are kept sorted by size, then lexicographically.
struct NestedSet {
  ContextPtr ctx;
  std::vector<Mask> members;

  int size() const { return int(members.size()); }
  bool contains(Mask b) const;
  bool operator==(const NestedSet& o) const { return members == o.members && *ctx == *o.ctx; }
  bool operator<(const NestedSet& o) const;
  std::vector<std::vector<std::string>> ids() const;
};
using RelativeMns = NestedSet;

std::vector<Mask> sorted_members(std::vector<Mask> m);
bool is_nested_set(const RelativeContext& ctx, const std::vector<Mask>& members);
bool is_maximal(const NestedSet& h);

std::vector<NestedSet> enumerate_nested_sets(const ContextPtr& ctx, int bound = kDefaultEnumerationBound);
inline std::vector<NestedSet> enumerate_nested_sets(const DiagramPtr& d, int bound = kDefaultEnumerationBound) {
  return enumerate_nested_sets(make_context(d), bound);
}
std::vector<RelativeMns> enumerate_mns(const ContextPtr& ctx, int bound = kDefaultEnumerationBound);
// inner may be empty, meaning Mns(outer)
std::vector<RelativeMns> enumerate_mns(const Subdiagram& outer, const Subdiagram& inner,
                                       int bound = kDefaultEnumerationBound);

// i_H(B): union of the members of H properly contained in B.
Mask inner_part(const NestedSet& h, Mask b);
// alpha_H^B = B minus i_H(B)
inline Mask alpha(const NestedSet& h, Mask b) { return b & ~inner_part(h, b); }

struct RankData {
  std::vector<std::pair<Mask, int>> per_element;  // n(B;H)
  std::vector<Mask> unsaturated;                   // n(B;H) > 1
  int total = 0;                                   // n(H)
  int dim = 0;
};
RankData rank_data(const NestedSet& h);

RelativeMns cup(const RelativeMns& f, const RelativeMns& g);

struct ElementaryPair {
  NestedSet first, second;
};
bool is_elementary(const NestedSet& f, const NestedSet& g);

struct Support {
  Mask support = 0;
  Mask central = 0;
  Mask alpha_first = 0;   // alpha_F^{supp}
  Mask alpha_second = 0;  // alpha_G^{supp}
};
Support support_of(const ElementaryPair& p);
bool are_equivalent(const ElementaryPair& p1, const ElementaryPair& p2);

// Edges of the 1-skeleton on a list of Mns, as index pairs (i < j).
std::vector<std::pair<int, int>> elementary_edges(const std::vector<NestedSet>& mns);

}  // namespace qcox
