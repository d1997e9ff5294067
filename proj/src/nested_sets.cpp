#include "qcox/nested_sets.hpp"

#include <algorithm>
#include <functional>

#include "qcox/errors.hpp"

namespace qcox {

ContextPtr make_context(const DiagramPtr& base, Mask outer, Mask inner) {
  if ((inner & ~outer) != 0) throw Error(ErrorKind::InvalidInput, "inner diagram not contained in outer");
  if ((outer & ~base->all()) != 0) throw Error(ErrorKind::InvalidInput, "outer diagram outside base");
  auto c = std::make_shared<RelativeContext>();
  c->base = base;
  c->outer = outer;
  c->inner = inner;
  MaskGraph g = base->graph();
  c->graph = g.quotient(outer, inner);
  return c;
}

std::vector<Mask> sorted_members(std::vector<Mask> m) {
  std::sort(m.begin(), m.end(), size_lex_less);
  m.erase(std::unique(m.begin(), m.end()), m.end());
  return m;
}

bool NestedSet::contains(Mask b) const { return std::binary_search(members.begin(), members.end(), b, size_lex_less); }

bool NestedSet::operator<(const NestedSet& o) const {
  if (members.size() != o.members.size()) return members.size() < o.members.size();
  return std::lexicographical_compare(members.begin(), members.end(), o.members.begin(), o.members.end(),
                                      size_lex_less);
}

std::vector<std::vector<std::string>> NestedSet::ids() const {
  std::vector<std::vector<std::string>> out;
  for (Mask m : members) out.push_back(ctx->base->ids_of(m));
  return out;
}

bool is_nested_set(const RelativeContext& ctx, const std::vector<Mask>& members) {
  const MaskGraph& g = ctx.graph;
  for (Mask m : members)
    if (m == 0 || (m & ~g.verts) || !g.connected(m)) return false;
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = i + 1; j < members.size(); ++j)
      if (!g.compatible(members[i], members[j])) return false;
  for (Mask c : g.components(g.verts))
    if (std::find(members.begin(), members.end(), c) == members.end()) return false;
  return true;
}

bool is_maximal(const NestedSet& h) {
  const MaskGraph& g = h.ctx->graph;
  for (Mask c : g.connected_subsets(g.verts)) {
    if (h.contains(c)) continue;
    bool ok = true;
    for (Mask m : h.members)
      if (!g.compatible(c, m)) {
        ok = false;
        break;
      }
    if (ok) return false;
  }
  return true;
}

static void check_bound(const RelativeContext& ctx, int bound) {
  if (ctx.size() > bound)
    throw Error(ErrorKind::TooLarge, std::to_string(ctx.size()) + " vertices exceed the bound " + std::to_string(bound));
}

std::vector<NestedSet> enumerate_nested_sets(const ContextPtr& ctx, int bound) {
  check_bound(*ctx, bound);
  const MaskGraph& g = ctx->graph;
  std::vector<Mask> comps = g.components(g.verts);
  std::vector<Mask> cand;
  for (Mask c : g.connected_subsets(g.verts))
    if (std::find(comps.begin(), comps.end(), c) == comps.end()) cand.push_back(c);
  std::vector<NestedSet> out;
  std::vector<Mask> chosen;
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == cand.size()) {
      std::vector<Mask> m = comps;
      m.insert(m.end(), chosen.begin(), chosen.end());
      out.push_back(NestedSet{ctx, sorted_members(std::move(m))});
      return;
    }
    bool ok = true;
    for (Mask m : chosen)
      if (!g.compatible(m, cand[k])) {
        ok = false;
        break;
      }
    if (ok) {
      chosen.push_back(cand[k]);
      rec(k + 1);
      chosen.pop_back();
    }
    rec(k + 1);
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

// All Mns of the connected set s, as member lists.
static void mns_connected(const MaskGraph& g, Mask s, std::vector<std::vector<Mask>>& out) {
  for (Mask t = s; t; t &= t - 1) {
    int v = lowest(t);
    Mask rest = s & ~bit(v);
    std::vector<std::vector<Mask>> acc{{s}};
    for (Mask comp : g.components(rest)) {
      std::vector<std::vector<Mask>> sub, next;
      mns_connected(g, comp, sub);
      for (auto& a : acc)
        for (auto& b : sub) {
          auto c = a;
          c.insert(c.end(), b.begin(), b.end());
          next.push_back(std::move(c));
        }
      acc = std::move(next);
    }
    for (auto& a : acc) out.push_back(std::move(a));
  }
}

std::vector<RelativeMns> enumerate_mns(const ContextPtr& ctx, int bound) {
  check_bound(*ctx, bound);
  const MaskGraph& g = ctx->graph;
  std::vector<std::vector<Mask>> acc{{}};
  for (Mask comp : g.components(g.verts)) {
    std::vector<std::vector<Mask>> sub, next;
    mns_connected(g, comp, sub);
    for (auto& a : acc)
      for (auto& b : sub) {
        auto c = a;
        c.insert(c.end(), b.begin(), b.end());
        next.push_back(std::move(c));
      }
    acc = std::move(next);
  }
  std::vector<RelativeMns> out;
  for (auto& a : acc) out.push_back(NestedSet{ctx, sorted_members(std::move(a))});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RelativeMns> enumerate_mns(const Subdiagram& outer, const Subdiagram& inner, int bound) {
  if (inner.parent && inner.parent != outer.parent && *inner.parent != *outer.parent)
    throw Error(ErrorKind::ParentMismatch, "outer and inner live in different diagrams");
  return enumerate_mns(make_context(outer.parent, outer.mask, inner.parent ? inner.mask : 0), bound);
}

Mask inner_part(const NestedSet& h, Mask b) {
  Mask u = 0;
  for (Mask m : h.members)
    if (m != b && (m & b) == m) u |= m;
  return u;
}

RankData rank_data(const NestedSet& h) {
  RankData r;
  for (Mask b : h.members) {
    int n = popcount(alpha(h, b));
    r.per_element.push_back({b, n});
    if (n > 1) r.unsaturated.push_back(b);
    r.total += n - 1;
  }
  r.dim = h.ctx->size() - h.size();
  return r;
}

RelativeMns cup(const RelativeMns& f, const RelativeMns& g) {
  if (*f.ctx->base != *g.ctx->base || f.ctx->inner != g.ctx->outer)
    throw Error(ErrorKind::ChainMismatch, "inner diagram of the first factor must be the outer of the second");
  ContextPtr ctx = make_context(f.ctx->base, f.ctx->outer, g.ctx->inner);
  Mask kernel = g.ctx->vertices();
  std::vector<Mask> m = g.members;
  for (Mask c : f.members) m.push_back(ctx->graph.lift(kernel, c));
  return NestedSet{ctx, sorted_members(std::move(m))};
}

static std::vector<Mask> common(const NestedSet& f, const NestedSet& g) {
  std::vector<Mask> out;
  for (Mask m : f.members)
    if (g.contains(m)) out.push_back(m);
  return out;
}

bool is_elementary(const NestedSet& f, const NestedSet& g) {
  if (!(*f.ctx == *g.ctx) || f.size() != g.size()) return false;
  return int(common(f, g).size()) == f.size() - 1;
}

Support support_of(const ElementaryPair& p) {
  if (!is_elementary(p.first, p.second) || !is_maximal(p.first) || !is_maximal(p.second))
    throw Error(ErrorKind::NotElementary, "pair does not differ by exactly one element");
  NestedSet h{p.first.ctx, common(p.first, p.second)};
  RankData r = rank_data(h);
  if (r.unsaturated.size() != 1) throw Error(ErrorKind::NotElementary, "intersection has no unique unsaturated element");
  Support s;
  s.support = r.unsaturated.front();
  s.central = inner_part(h, s.support);
  s.alpha_first = alpha(p.first, s.support);
  s.alpha_second = alpha(p.second, s.support);
  return s;
}

bool are_equivalent(const ElementaryPair& p1, const ElementaryPair& p2) {
  Support a = support_of(p1), b = support_of(p2);
  if (!(*p1.first.ctx == *p2.first.ctx)) return false;
  return a.support == b.support && a.alpha_first == b.alpha_first && a.alpha_second == b.alpha_second;
}

std::vector<std::pair<int, int>> elementary_edges(const std::vector<NestedSet>& mns) {
  std::map<std::vector<Mask>, std::vector<int>> facets;
  for (int i = 0; i < int(mns.size()); ++i)
    for (size_t k = 0; k < mns[i].members.size(); ++k) {
      std::vector<Mask> rest = mns[i].members;
      rest.erase(rest.begin() + k);
      facets[rest].push_back(i);
    }
  std::vector<std::pair<int, int>> out;
  for (auto& [rest, ids] : facets)
    for (size_t a = 0; a < ids.size(); ++a)
      for (size_t b = a + 1; b < ids.size(); ++b) out.push_back({std::min(ids[a], ids[b]), std::max(ids[a], ids[b])});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace qcox
