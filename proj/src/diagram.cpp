#include "qcox/diagram.hpp"

#include <algorithm>
#include <set>

#include "qcox/errors.hpp"

namespace qcox {

std::vector<int> indices(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(lowest(m));
    m &= m - 1;
  }
  return out;
}

bool lex_less(Mask a, Mask b) {
  while (a && b) {
    int x = lowest(a), y = lowest(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

bool size_lex_less(Mask a, Mask b) {
  int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  return lex_less(a, b);
}

Mask MaskGraph::neighbours(Mask s) const {
  Mask out = 0;
  for (Mask t = s; t; t &= t - 1) out |= adj[lowest(t)];
  return out & ~s & verts;
}

bool MaskGraph::connected(Mask s) const {
  if (!s) return false;
  Mask seen = s & (~s + 1), frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask t = frontier; t; t &= t - 1) next |= adj[lowest(t)];
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

std::vector<Mask> MaskGraph::components(Mask s) const {
  std::vector<Mask> out;
  Mask rest = s & verts;
  while (rest) {
    Mask seen = rest & (~rest + 1), frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask t = frontier; t; t &= t - 1) next |= adj[lowest(t)];
      next &= rest & ~seen;
      seen |= next;
      frontier = next;
    }
    out.push_back(seen);
    rest &= ~seen;
  }
  return out;
}

bool MaskGraph::orthogonal(Mask a, Mask b) const {
  if (a & b) return false;
  for (Mask t = a; t; t &= t - 1)
    if (adj[lowest(t)] & b) return false;
  return true;
}

bool MaskGraph::compatible(Mask a, Mask b) const {
  return (a & b) == a || (a & b) == b || orthogonal(a, b);
}

std::vector<Mask> MaskGraph::connected_subsets(Mask within) const {
  within &= verts;
  std::vector<Mask> out;
  // grow from each root using only larger-indexed vertices to avoid duplicates
  for (Mask r = within; r; r &= r - 1) {
    int root = lowest(r);
    Mask allowed = within & ~(bit(root + 1) - 1);
    std::vector<std::pair<Mask, Mask>> stack{{bit(root), 0}};
    // (current set, excluded vertices)
    while (!stack.empty()) {
      auto [cur, excl] = stack.back();
      stack.pop_back();
      out.push_back(cur);
      Mask cand = neighbours(cur) & allowed & ~excl;
      Mask newly_excluded = excl;
      for (Mask t = cand; t; t &= t - 1) {
        int v = lowest(t);
        stack.push_back({cur | bit(v), newly_excluded});
        newly_excluded |= bit(v);
      }
    }
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

MaskGraph MaskGraph::quotient(Mask outer, Mask inner) const {
  MaskGraph q;
  q.n = n;
  q.verts = outer & ~inner & verts;
  q.adj.assign(n, 0);
  for (Mask t = q.verts; t; t &= t - 1) {
    int i = lowest(t);
    q.adj[i] = adj[i] & q.verts;
  }
  for (Mask comp : components(inner & outer)) {
    Mask touching = neighbours(comp) & q.verts;
    for (Mask t = touching; t; t &= t - 1) {
      int i = lowest(t);
      q.adj[i] |= touching & ~bit(i);
    }
  }
  return q;
}

Mask MaskGraph::lift(Mask kernel, Mask a) const {
  Mask out = a;
  for (Mask comp : components(kernel))
    if (!orthogonal(comp, a)) out |= comp;
  return out;
}

Diagram::Diagram(std::vector<std::string> vertices, const std::vector<Edge>& edges,
                 const std::map<Edge, int>& labels) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw Error(ErrorKind::InvalidInput, "duplicate vertex id");
  if (vertices.size() > 64) throw Error(ErrorKind::TooLarge, "more than 64 vertices");
  ids_ = std::move(vertices);
  adj_.assign(ids_.size(), 0);
  for (auto& [a, b] : edges) {
    int i = index(a), j = index(b);
    if (i < 0 || j < 0) throw Error(ErrorKind::InvalidInput, "edge references unknown vertex");
    if (i == j) throw Error(ErrorKind::InvalidInput, "loop at vertex " + a);
    adj_[i] |= bit(j);
    adj_[j] |= bit(i);
  }
  for (auto& [e, m] : labels) {
    int i = index(e.first), j = index(e.second);
    if (i < 0 || j < 0) throw Error(ErrorKind::InvalidInput, "label references unknown vertex");
    if (i > j) std::swap(i, j);
    if (!adjacent(i, j)) {
      if (m == 2) continue;
      throw Error(ErrorKind::InvalidInput, "label on non-edge " + e.first + "," + e.second);
    }
    if (m != kInfinity && m < 3) throw Error(ErrorKind::InvalidInput, "edge label must be >= 3 or infinity");
    auto [it, fresh] = labels_.emplace(std::make_pair(i, j), m);
    if (!fresh && it->second != m) throw Error(ErrorKind::InvalidInput, "asymmetric labels");
  }
}

Diagram Diagram::path(int n) {
  std::vector<std::string> ids;
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    ids.push_back(std::to_string(i));
    if (i > 1) edges.push_back({std::to_string(i - 1), std::to_string(i)});
  }
  return Diagram(ids, edges);
}

Diagram Diagram::from_adjacency(const std::vector<std::string>& ids, const std::vector<Mask>& adj) {
  std::vector<Edge> edges;
  for (size_t i = 0; i < ids.size(); ++i)
    for (size_t j = i + 1; j < ids.size(); ++j)
      if ((adj[i] >> j) & 1) edges.push_back({ids[i], ids[j]});
  return Diagram(ids, edges);
}

int Diagram::index(const std::string& id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return -1;
  return int(it - ids_.begin());
}

int Diagram::label(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (!adjacent(i, j)) return 2;
  auto it = labels_.find({i, j});
  return it == labels_.end() ? 3 : it->second;
}

std::vector<std::pair<int, int>> Diagram::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (adjacent(i, j)) out.push_back({i, j});
  return out;
}

MaskGraph Diagram::graph() const {
  MaskGraph g;
  g.n = size();
  g.verts = all();
  g.adj = adj_;
  return g;
}

Mask Diagram::mask_of(const std::vector<std::string>& ids) const {
  Mask m = 0;
  for (auto& s : ids) {
    int i = index(s);
    if (i < 0) throw Error(ErrorKind::InvalidInput, "unknown vertex id '" + s + "'");
    m |= bit(i);
  }
  return m;
}

std::vector<std::string> Diagram::ids_of(Mask m) const {
  std::vector<std::string> out;
  for (int i : indices(m)) out.push_back(ids_[i]);
  return out;
}

bool Diagram::operator==(const Diagram& o) const {
  if (ids_ != o.ids_ || adj_ != o.adj_) return false;
  for (auto& [e, m] : labels_)
    if (o.label(e.first, e.second) != m) return false;
  for (auto& [e, m] : o.labels_)
    if (label(e.first, e.second) != m) return false;
  return true;
}

Subdiagram::Subdiagram(DiagramPtr p, Mask m) : parent(std::move(p)), mask(m) {
  if ((mask & ~parent->all()) != 0) throw Error(ErrorKind::InvalidInput, "vertex set outside parent");
}

Subdiagram::Subdiagram(DiagramPtr p, const std::vector<std::string>& ids) : parent(std::move(p)) {
  mask = parent->mask_of(ids);
}

static void same_parent(const Subdiagram& a, const Subdiagram& b) {
  if (a.parent != b.parent && *a.parent != *b.parent)
    throw Error(ErrorKind::ParentMismatch, "subdiagrams of different diagrams");
}

std::vector<Subdiagram> connected_components(const DiagramPtr& d) {
  if (d->size() == 0) throw Error(ErrorKind::EmptyDiagram, "diagram has no vertices");
  std::vector<Subdiagram> out;
  for (Mask c : d->graph().components(d->all())) out.emplace_back(d, c);
  return out;
}

bool is_orthogonal(const Subdiagram& b1, const Subdiagram& b2) {
  same_parent(b1, b2);
  return b1.parent->graph().orthogonal(b1.mask, b2.mask);
}

bool is_compatible(const Subdiagram& b1, const Subdiagram& b2) {
  same_parent(b1, b2);
  return b1.parent->graph().compatible(b1.mask, b2.mask);
}

QuotientDiagram quotient(const DiagramPtr& d, const Subdiagram& b, int edge_label) {
  if (b.parent != d && *b.parent != *d) throw Error(ErrorKind::ParentMismatch, "kernel is not a subdiagram of d");
  if (b.empty()) throw Error(ErrorKind::EmptyKernel, "empty kernel");
  if (b.mask == d->all()) throw Error(ErrorKind::NotProper, "kernel equals the whole diagram");
  MaskGraph g = d->graph();
  MaskGraph q = g.quotient(d->all(), b.mask);
  std::vector<std::string> ids = d->ids_of(q.verts);
  std::vector<Diagram::Edge> edges;
  std::map<Diagram::Edge, int> labels;
  for (Mask t = q.verts; t; t &= t - 1) {
    int i = lowest(t);
    for (Mask u = q.adj[i] & ~(bit(i + 1) - 1); u; u &= u - 1) {
      int j = lowest(u);
      Diagram::Edge e{d->id(i), d->id(j)};
      edges.push_back(e);
      labels[e] = edge_label;
    }
  }
  QuotientDiagram out;
  out.base = d;
  out.kernel = b;
  for (Mask c : g.components(b.mask)) out.kernel_components.emplace_back(d, c);
  out.quotient = make_diagram(Diagram(ids, edges, labels));
  return out;
}

Subdiagram collapse(const Subdiagram& c, const QuotientDiagram& q) {
  same_parent(c, q.kernel);
  if ((c.mask & ~q.kernel.mask) == 0) throw Error(ErrorKind::CollapsesToEmpty, "subdiagram lies inside the kernel");
  if (!c.connected()) throw Error(ErrorKind::InvalidInput, "collapse expects a connected subdiagram");
  return Subdiagram(q.quotient, q.quotient->mask_of(q.base->ids_of(c.mask & ~q.kernel.mask)));
}

Subdiagram lift(const Subdiagram& a, const QuotientDiagram& q) {
  if (a.parent != q.quotient && *a.parent != *q.quotient)
    throw Error(ErrorKind::ParentMismatch, "not a subdiagram of the quotient");
  if (!a.connected()) throw Error(ErrorKind::InvalidInput, "lift expects a connected subdiagram");
  Mask base_mask = q.base->mask_of(a.ids());
  return Subdiagram(q.base, q.base->graph().lift(q.kernel.mask, base_mask));
}

}  // namespace qcox
