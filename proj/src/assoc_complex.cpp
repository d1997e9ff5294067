#include "qcox/assoc_complex.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "qcox/errors.hpp"

namespace qcox {

int FacePoset::euler_characteristic() const {
  int chi = 0;
  for (auto& [k, n] : f_vector) chi += (k % 2 == 0 ? n : -n);
  return chi;
}

FacePoset build_face_poset(const ContextPtr& ctx, int bound) {
  FacePoset p;
  p.ctx = ctx;
  std::vector<NestedSet> all = enumerate_nested_sets(ctx, bound);
  int n = ctx->size();
  std::stable_sort(all.begin(), all.end(), [&](const NestedSet& a, const NestedSet& b) {
    return n - a.size() < n - b.size();
  });
  std::map<std::vector<Mask>, int> index;
  for (auto& h : all) {
    index[h.members] = int(p.faces.size());
    p.dims.push_back(n - h.size());
    p.f_vector[n - h.size()]++;
    p.faces.push_back(h);
  }
  std::vector<Mask> comps = ctx->graph.components(ctx->vertices());
  for (int i = 0; i < int(p.faces.size()); ++i) {
    const auto& m = p.faces[i].members;
    for (size_t k = 0; k < m.size(); ++k) {
      if (std::find(comps.begin(), comps.end(), m[k]) != comps.end()) continue;
      std::vector<Mask> rest = m;
      rest.erase(rest.begin() + k);
      p.covers.push_back({i, index.at(rest)});
    }
  }
  std::sort(p.covers.begin(), p.covers.end());
  return p;
}

std::vector<std::vector<int>> OneSkeleton::neighbours() const {
  std::vector<std::vector<int>> nb(vertices.size());
  for (auto [a, b] : edges) {
    nb[a].push_back(b);
    nb[b].push_back(a);
  }
  for (auto& v : nb) std::sort(v.begin(), v.end());
  return nb;
}

bool OneSkeleton::connected() const {
  if (vertices.empty()) return true;
  auto nb = neighbours();
  std::vector<bool> seen(vertices.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  size_t count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : nb[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == vertices.size();
}

OneSkeleton one_skeleton(const ContextPtr& ctx, int bound) {
  OneSkeleton sk;
  sk.ctx = ctx;
  sk.vertices = enumerate_mns(ctx, bound);
  sk.edges = elementary_edges(sk.vertices);
  return sk;
}

static bool contains_all(const NestedSet& big, const NestedSet& small) {
  for (Mask m : small.members)
    if (!big.contains(m)) return false;
  return true;
}

std::vector<TwoFaceCycle> two_face_cycles(const OneSkeleton& sk) {
  std::vector<TwoFaceCycle> out;
  int n = sk.ctx->size();
  if (n < 2) return out;
  auto nb = sk.neighbours();
  // every 2-face is spanned by the Mns containing it; enumerate faces from the Mns by dropping two members
  std::set<std::vector<Mask>> seen;
  std::vector<Mask> comps = sk.ctx->graph.components(sk.ctx->vertices());
  auto is_comp = [&](Mask m) { return std::find(comps.begin(), comps.end(), m) != comps.end(); };
  for (auto& f : sk.vertices) {
    const auto& m = f.members;
    for (size_t a = 0; a < m.size(); ++a)
      for (size_t b = a + 1; b < m.size(); ++b) {
        if (is_comp(m[a]) || is_comp(m[b])) continue;
        std::vector<Mask> rest;
        for (size_t k = 0; k < m.size(); ++k)
          if (k != a && k != b) rest.push_back(m[k]);
        seen.insert(rest);
      }
  }
  for (auto& members : seen) {
    NestedSet face{sk.ctx, members};
    std::vector<int> verts;
    for (int i = 0; i < int(sk.vertices.size()); ++i)
      if (contains_all(sk.vertices[i], face)) verts.push_back(i);
    std::set<int> in(verts.begin(), verts.end());
    std::map<int, std::vector<int>> local;
    for (int v : verts)
      for (int w : nb[v])
        if (in.count(w)) local[v].push_back(w);
    for (int v : verts)
      if (local[v].size() != 2) throw Error(ErrorKind::InvalidInput, "2-face boundary is not a cycle");
    TwoFaceCycle c;
    c.face = face;
    int start = verts.front(), prev = -1, cur = start;
    do {
      c.boundary.push_back(cur);
      const auto& l = local[cur];
      int next = (l[0] != prev) ? l[0] : l[1];
      if (prev == -1) next = std::min(l[0], l[1]);
      prev = cur;
      cur = next;
    } while (cur != start && c.boundary.size() <= verts.size());
    if (c.boundary.size() != verts.size()) throw Error(ErrorKind::InvalidInput, "2-face boundary is disconnected");
    out.push_back(std::move(c));
  }
  return out;
}

void PhiAssignment::set(const NestedSet& f, const NestedSet& g, const GroupElement& value) {
  if (!is_elementary(f, g)) throw Error(ErrorKind::NotElementary, "value assigned to a non-elementary pair");
  carrier_.validate(value);
  if (f < g) {
    values_.insert_or_assign({f.members, g.members}, value);
  } else {
    values_.insert_or_assign({g.members, f.members}, carrier_.inverse(value));
  }
}

bool PhiAssignment::has(const NestedSet& f, const NestedSet& g) const {
  return f < g ? values_.count({f.members, g.members}) > 0 : values_.count({g.members, f.members}) > 0;
}

GroupElement PhiAssignment::get(const NestedSet& f, const NestedSet& g) const {
  if (f < g) {
    auto it = values_.find({f.members, g.members});
    if (it == values_.end()) throw Error(ErrorKind::MissingPair, "no value on " + face_label(f) + " -> " + face_label(g));
    return it->second;
  }
  auto it = values_.find({g.members, f.members});
  if (it == values_.end()) throw Error(ErrorKind::MissingPair, "no value on " + face_label(f) + " -> " + face_label(g));
  return carrier_.inverse(it->second);
}

GroupElement PhiAssignment::path_product(const std::vector<NestedSet>& path) const {
  GroupElement acc = carrier_.identity();
  for (size_t k = 0; k + 1 < path.size(); ++k) acc = carrier_.multiply(acc, get(path[k], path[k + 1]));
  return acc;
}

PhiAssignment PhiAssignment::identity(const Carrier& c, const ContextPtr& ctx, int bound) {
  PhiAssignment phi(c, ctx);
  OneSkeleton sk = one_skeleton(ctx, bound);
  for (auto [a, b] : sk.edges) phi.set(sk.vertices[a], sk.vertices[b], c.identity());
  return phi;
}

PhiAssignment PhiAssignment::telescoping(const Carrier& c, const OneSkeleton& sk, const std::vector<GroupElement>& rho) {
  PhiAssignment phi(c, sk.ctx);
  for (auto [a, b] : sk.edges)
    phi.set(sk.vertices[a], sk.vertices[b], c.multiply(c.inverse(rho[a]), rho[b]));
  return phi;
}

static void require_complete(const PhiAssignment& phi, const OneSkeleton& sk) {
  for (auto [a, b] : sk.edges)
    if (!phi.has(sk.vertices[a], sk.vertices[b]))
      throw Error(ErrorKind::MissingPair,
                  "no value on " + face_label(sk.vertices[a]) + " -- " + face_label(sk.vertices[b]));
}

CoherenceReport check_coherence(const PhiAssignment& phi, int bound) {
  OneSkeleton sk = one_skeleton(phi.context(), bound);
  require_complete(phi, sk);
  CoherenceReport rep;
  const Carrier& c = phi.carrier();
  for (auto& cyc : two_face_cycles(sk)) {
    ++rep.faces_checked;
    std::vector<NestedSet> loop;
    for (int v : cyc.boundary) loop.push_back(sk.vertices[v]);
    loop.push_back(loop.front());
    if (c.is_identity(phi.path_product(loop))) continue;
    rep.pass = false;
    size_t m = cyc.boundary.size(), k = (m + 1) / 2;
    CoherenceFailure f;
    f.face = cyc.face;
    for (size_t i = 0; i <= k; ++i) f.path1.push_back(loop[i]);
    for (size_t i = m; i >= k; --i) f.path2.push_back(loop[i]);
    f.product1 = c.to_string(phi.path_product(f.path1));
    f.product2 = c.to_string(phi.path_product(f.path2));
    rep.failure = f;
    break;
  }
  return rep;
}

bool walk_products_agree(const PhiAssignment& phi, int max_len, int bound) {
  OneSkeleton sk = one_skeleton(phi.context(), bound);
  require_complete(phi, sk);
  const Carrier& c = phi.carrier();
  int n = int(sk.vertices.size());
  auto nb = sk.neighbours();
  std::vector<std::vector<GroupElement>> step(n);
  for (int v = 0; v < n; ++v)
    for (int w : nb[v]) step[v].push_back(phi.get(sk.vertices[v], sk.vertices[w]));
  for (int s = 0; s < n; ++s) {
    std::vector<std::optional<GroupElement>> first(n);
    bool ok = true;
    std::function<void(int, const GroupElement&, int)> walk = [&](int v, const GroupElement& acc, int len) {
      if (!ok) return;
      if (!first[v])
        first[v] = acc;
      else if (!c.equal(*first[v], acc)) {
        ok = false;
        return;
      }
      if (len == max_len) return;
      for (size_t k = 0; k < nb[v].size(); ++k) walk(nb[v][k], c.multiply(acc, step[v][k]), len + 1);
    };
    walk(s, c.identity(), 0);
    if (!ok) return false;
  }
  return true;
}

namespace {

struct Layer {
  Mask outer, inner;
  const PhiAssignment* phi;
  OneSkeleton sk;
};

std::string layer_name(const DiagramPtr& d, Mask outer, Mask inner) {
  auto fmt = [&](Mask m) {
    std::string s = "{";
    auto ids = d->ids_of(m);
    for (size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + ids[i];
    return s + "}";
  };
  return fmt(outer) + "/" + fmt(inner);
}

}  // namespace

FactorizationReport check_factorization(const PhiFamily& family, int bound) {
  FactorizationReport rep;
  std::map<std::pair<Mask, Mask>, Layer> layers;
  DiagramPtr base;
  for (auto& [key, phi] : family) {
    base = phi.context()->base;
    Layer l{key.first, key.second, &phi, one_skeleton(phi.context(), bound)};
    require_complete(phi, l.sk);
    layers.emplace(key, std::move(l));
  }
  if (!base) return rep;
  auto fail = [&](bool& flag, const std::string& msg) {
    flag = false;
    if (rep.failures.size() < 20) rep.failures.push_back(msg);
  };

  // factorization over composable triples B'' ⊇ B' ⊇ B
  for (auto& [k1, l1] : layers)
    for (auto& [k2, l2] : layers) {
      if (k1.second != k2.first) continue;
      auto it = layers.find({k1.first, k2.second});
      if (it == layers.end()) continue;
      const Layer& l3 = it->second;
      const Carrier& c = l3.phi->carrier();
      for (auto [a, b] : l1.sk.edges)
        for (auto& g : l2.sk.vertices) {
          NestedSet x = cup(l1.sk.vertices[a], g), y = cup(l1.sk.vertices[b], g);
          ++rep.factorization_checks;
          if (!is_elementary(x, y) ||
              !c.equal(l3.phi->get(x, y), l1.phi->get(l1.sk.vertices[a], l1.sk.vertices[b])))
            fail(rep.factorization, "outer leg " + layer_name(base, k1.first, k1.second) + " at " + face_label(x));
        }
      for (auto& f : l1.sk.vertices)
        for (auto [a, b] : l2.sk.edges) {
          NestedSet x = cup(f, l2.sk.vertices[a]), y = cup(f, l2.sk.vertices[b]);
          ++rep.factorization_checks;
          if (!is_elementary(x, y) ||
              !c.equal(l3.phi->get(x, y), l2.phi->get(l2.sk.vertices[a], l2.sk.vertices[b])))
            fail(rep.factorization, "inner leg " + layer_name(base, k2.first, k2.second) + " at " + face_label(x));
        }
    }

  MaskGraph g = base->graph();
  for (auto& [key, l] : layers) {
    const Carrier& c = l.phi->carrier();
    std::map<std::tuple<Mask, Mask, Mask>, GroupElement> classes;
    for (auto [a, b] : l.sk.edges) {
      for (int dir = 0; dir < 2; ++dir) {
        const NestedSet& f = l.sk.vertices[dir ? b : a];
        const NestedSet& h = l.sk.vertices[dir ? a : b];
        Support s = support_of({f, h});
        GroupElement v = l.phi->get(f, h);
        // forgetfulness: equivalent pairs carry equal values
        auto cls = std::make_tuple(s.support, s.alpha_first, s.alpha_second);
        auto [ci, fresh] = classes.try_emplace(cls, v);
        if (!fresh) {
          ++rep.forgetfulness_checks;
          if (!c.equal(ci->second, v))
            fail(rep.forgetfulness, "equivalent pairs with support " + layer_name(base, s.support, s.central) +
                                        " differ in " + layer_name(base, key.first, key.second));
        }
        // support: value equals that of the restricted pair on supp/zsupp
        Mask outer = g.lift(key.second, s.support);
        Mask moving = s.alpha_first | s.alpha_second;
        Mask inner = outer & ~moving;
        auto lt = layers.find({outer, inner});
        if (lt == layers.end()) continue;
        auto restrict = [&](const NestedSet& x) {
          std::vector<Mask> m;
          for (Mask y : x.members)
            if ((y & s.support) == y && (y & moving)) m.push_back(y & moving);
          return NestedSet{lt->second.phi->context(), sorted_members(m)};
        };
        NestedSet rf = restrict(f), rh = restrict(h);
        ++rep.support_checks;
        if (!is_elementary(rf, rh) || !c.equal(lt->second.phi->get(rf, rh), v))
          fail(rep.support, "support restriction to " + layer_name(base, outer, inner) + " from " +
                                layer_name(base, key.first, key.second));
      }
    }
  }
  return rep;
}

std::pair<Word, Word> braid_words(const LabeledDiagramGroup& g, int i, int j) {
  if (i == j) throw Error(ErrorKind::InvalidInput, "braid words need two distinct vertices");
  int m = g.diagram->label(i, j);
  if (m == kInfinity) throw Error(ErrorKind::NoRelation, "m_ij is infinite");
  Word a, b;
  for (int k = 0; k < m; ++k) {
    a.push_back(k % 2 == 0 ? i : j);
    b.push_back(k % 2 == 0 ? j : i);
  }
  return {a, b};
}

std::string face_label(const NestedSet& h) {
  std::string s;
  for (size_t k = 0; k < h.members.size(); ++k) {
    s += (k ? " {" : "{");
    auto ids = h.ctx->base->ids_of(h.members[k]);
    for (size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + ids[i];
    s += "}";
  }
  return s;
}

std::string skeleton_dot(const OneSkeleton& sk) {
  std::ostringstream os;
  os << "graph skeleton {\n";
  for (size_t i = 0; i < sk.vertices.size(); ++i)
    os << "  n" << i << " [label=\"" << face_label(sk.vertices[i]) << "\"];\n";
  for (auto [a, b] : sk.edges) os << "  n" << a << " -- n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace qcox
