#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace qcox {

using Mask = std::uint64_t;

// Coxeter label standing for m_ij = infinity.
constexpr int kInfinity = 0;

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline int lowest(Mask m) { return __builtin_ctzll(m); }
inline Mask bit(int i) { return Mask(1) << i; }
std::vector<int> indices(Mask m);

// A simple graph on bit positions. Only vertices in `verts` are live; adj[i] ⊆ verts.
struct MaskGraph {
  int n = 0;
  Mask verts = 0;
  std::vector<Mask> adj;

  Mask neighbours(Mask s) const;  // vertices adjacent to some vertex of s, outside s
  bool connected(Mask s) const;
  std::vector<Mask> components(Mask s) const;  // ordered by lowest vertex
  bool orthogonal(Mask a, Mask b) const;
  bool compatible(Mask a, Mask b) const;
  // All nonempty connected subsets of `within`, ordered by size then lexicographically.
  std::vector<Mask> connected_subsets(Mask within) const;
  // B'/B with the adjacency rule through the components of B.
  MaskGraph quotient(Mask outer, Mask inner) const;
  Mask restrict_to(Mask s) const { return s & verts; }
  // a together with every component of `kernel` not orthogonal to a
  Mask lift(Mask kernel, Mask a) const;
};

// Lexicographic order on the sorted index lists of two masks.
bool lex_less(Mask a, Mask b);
// Size first, then lexicographic.
bool size_lex_less(Mask a, Mask b);

class Diagram {
 public:
  using Edge = std::pair<std::string, std::string>;

  Diagram() = default;
  Diagram(std::vector<std::string> vertices, const std::vector<Edge>& edges,
          const std::map<Edge, int>& labels = {});

  // Path 1-2-...-n with ids "1".."n".
  static Diagram path(int n);
  static Diagram from_adjacency(const std::vector<std::string>& ids, const std::vector<Mask>& adj);

  int size() const { return int(ids_.size()); }
  const std::vector<std::string>& vertices() const { return ids_; }
  const std::string& id(int i) const { return ids_[i]; }
  int index(const std::string& id) const;  // -1 if absent
  Mask all() const { return size() == 64 ? ~Mask(0) : bit(size()) - 1; }
  Mask adjacency(int i) const { return adj_[i]; }
  bool adjacent(int i, int j) const { return (adj_[i] >> j) & 1; }
  // m_ij; 2 for non-edges, kInfinity for infinity
  int label(int i, int j) const;
  std::vector<std::pair<int, int>> edges() const;
  MaskGraph graph() const;
  Mask mask_of(const std::vector<std::string>& ids) const;
  std::vector<std::string> ids_of(Mask m) const;

  bool operator==(const Diagram& o) const;
  bool operator!=(const Diagram& o) const { return !(*this == o); }

 private:
  std::vector<std::string> ids_;
  std::vector<Mask> adj_;
  std::map<std::pair<int, int>, int> labels_;  // i < j, edges only
};

using DiagramPtr = std::shared_ptr<const Diagram>;

inline DiagramPtr make_diagram(Diagram d) { return std::make_shared<const Diagram>(std::move(d)); }

struct Subdiagram {
  DiagramPtr parent;
  Mask mask = 0;

  Subdiagram() = default;
  Subdiagram(DiagramPtr p, Mask m);
  Subdiagram(DiagramPtr p, const std::vector<std::string>& ids);
  bool empty() const { return mask == 0; }
  int size() const { return popcount(mask); }
  std::vector<std::string> ids() const { return parent->ids_of(mask); }
  bool connected() const { return parent->graph().connected(mask); }
  bool operator==(const Subdiagram& o) const { return mask == o.mask && *parent == *o.parent; }
};

struct QuotientDiagram {
  DiagramPtr base;
  Subdiagram kernel;
  std::vector<Subdiagram> kernel_components;
  DiagramPtr quotient;  // on V(D) minus V(B), ids kept
};

std::vector<Subdiagram> connected_components(const DiagramPtr& d);
bool is_orthogonal(const Subdiagram& b1, const Subdiagram& b2);
bool is_compatible(const Subdiagram& b1, const Subdiagram& b2);
// Quotient edges carry `edge_label` (3 unless overridden).
QuotientDiagram quotient(const DiagramPtr& d, const Subdiagram& b, int edge_label = 3);
Subdiagram collapse(const Subdiagram& c, const QuotientDiagram& q);
Subdiagram lift(const Subdiagram& a, const QuotientDiagram& q);

class Gcm;
Diagram gcm_to_diagram(const Gcm& a);

}  // namespace qcox
