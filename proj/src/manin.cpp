#include "qcox/manin.hpp"

#include <algorithm>
#include <set>

#include "qcox/errors.hpp"

namespace qcox {

Matrix ManinTriple::act(const WeightModule& v, const SparseVec& x) const {
  SparseVec g;
  for (auto& [k, c] : x) axpy(g, c, to_g[k]);
  return v.act(g);
}

Rational ManinTriple::inner(const SparseVec& x, const SparseVec& y) const {
  Rational s = 0;
  for (auto& [a, u] : x)
    for (auto& [b, v] : y)
      if (form(a, b) != 0) s += u * v * form(a, b);
  return s;
}

static Matrix cartan_gram(const AlgebraPtr& alg) {
  int r = alg->rank();
  Matrix g(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) g(i, j) = alg->form(alg->h(i), alg->h(j));
  return g;
}

std::vector<Vec> adapted_cartan_basis(const AlgebraPtr& alg, Mask d) {
  int r = alg->rank();
  std::vector<Vec> out;
  Matrix g = cartan_gram(alg);
  std::vector<Vec> rows;
  for (int j = 0; j < r; ++j)
    if (d & bit(j)) {
      Vec u(r, Rational(0));
      u[j] = 1;
      out.push_back(u);
      rows.push_back(g.row(j));
    }
  if (rows.empty()) {
    for (int j = 0; j < r; ++j) {
      Vec u(r, Rational(0));
      u[j] = 1;
      out.push_back(u);
    }
    return out;
  }
  for (auto& v : nullspace(Matrix::from_rows(rows, r))) out.push_back(v);
  return out;
}

TriplePtr double_triple(const AlgebraPtr& alg, Mask adapted_to) {
  auto t = std::make_shared<ManinTriple>();
  t->alg = alg;
  int np = alg->num_pos(), r = alg->rank();
  int dim = 2 * np + 2 * r;
  t->cartan = adapted_cartan_basis(alg, adapted_to);
  Matrix cb(r, r);
  for (int k = 0; k < r; ++k)
    for (int i = 0; i < r; ++i) cb(i, k) = t->cartan[k][i];
  auto cbinv = inverse(cb);
  if (!cbinv) throw Error(ErrorKind::DegeneratePairing, "Cartan basis is not a basis");

  t->to_g.resize(dim);
  t->grade.resize(dim);
  std::vector<Vec> hcomp(dim, Vec(r, Rational(0)));
  for (int a = 0; a < np; ++a) {
    t->to_g[dbl_e(*t, a)] = {{alg->e(a), 1}};
    t->to_g[dbl_f(*t, a)] = {{alg->f(a), 1}};
    t->grade[dbl_e(*t, a)] = t->grade[dbl_f(*t, a)] = alg->height(a);
  }
  for (int k = 0; k < r; ++k) {
    SparseVec h;
    for (int i = 0; i < r; ++i)
      if (t->cartan[k][i] != 0) h[alg->h(i)] = t->cartan[k][i];
    t->to_g[dbl_hp(*t, k)] = h;
    t->to_g[dbl_hm(*t, k)] = h;
    t->grade[dbl_hp(*t, k)] = t->grade[dbl_hm(*t, k)] = 1;
    hcomp[dbl_hp(*t, k)] = t->cartan[k];
    hcomp[dbl_hm(*t, k)] = Rational(-1) * t->cartan[k];
  }
  for (int a = 0; a < np; ++a) t->plus.push_back(dbl_e(*t, a));
  for (int k = 0; k < r; ++k) t->plus.push_back(dbl_hp(*t, k));
  for (int k = 0; k < r; ++k) t->minus.push_back(dbl_hm(*t, k));
  for (int a = 0; a < np; ++a) t->minus.push_back(dbl_f(*t, a));

  // (z, 0) for z in g, written in the double basis
  auto embed = [&](const SparseVec& z) {
    SparseVec out;
    Vec hv(r, Rational(0));
    for (auto& [k, c] : z) {
      if (k < np)
        out[dbl_e(*t, k)] = c;
      else if (k < np + r)
        hv[k - np] = c;
      else
        out[dbl_f(*t, k - np - r)] = c;
    }
    Vec coeff = *cbinv * hv;
    for (int k = 0; k < r; ++k)
      if (coeff[k] != 0) {
        out[dbl_hp(*t, k)] = coeff[k] / 2;
        out[dbl_hm(*t, k)] = coeff[k] / 2;
      }
    return out;
  };

  t->lie = LieAlgebra(dim);
  for (int x = 0; x < dim; ++x)
    for (int y = x + 1; y < dim; ++y) t->lie.set(x, y, embed(alg->lie.bracket(t->to_g[x], t->to_g[y])));
  for (int a = 0; a < np; ++a) {
    std::string n = alg->lie.names[alg->e(a)];
    t->lie.names.push_back(n);
  }
  for (int k = 0; k < r; ++k) t->lie.names.push_back("h+" + std::to_string(k + 1));
  for (int k = 0; k < r; ++k) t->lie.names.push_back("h-" + std::to_string(k + 1));
  for (int a = 0; a < np; ++a) t->lie.names.push_back(alg->lie.names[alg->f(a)]);

  Matrix hg = cartan_gram(alg);
  t->form = Matrix(dim, dim);
  for (int x = 0; x < dim; ++x)
    for (int y = 0; y < dim; ++y) t->form(x, y) = alg->inner(t->to_g[x], t->to_g[y]) - dot(hcomp[x], hg * hcomp[y]);
  if (t->lie.jacobi_failure()[0] >= 0) throw Error(ErrorKind::InvalidInput, "double fails the Jacobi identity");
  return t;
}

TriplePtr sub_triple(const ManinTriple& t, const std::vector<int>& indices) {
  auto s = std::make_shared<ManinTriple>();
  s->alg = t.alg;
  int n = int(indices.size());
  std::map<int, int> pos;
  for (int k = 0; k < n; ++k) pos[indices[k]] = k;
  s->lie = LieAlgebra(n);
  s->form = Matrix(n, n);
  for (int a = 0; a < n; ++a) {
    s->lie.names.push_back(t.lie.names.empty() ? std::to_string(a) : t.lie.names[indices[a]]);
    s->grade.push_back(t.grade[indices[a]]);
    s->to_g.push_back(t.to_g[indices[a]]);
    for (int b = 0; b < n; ++b) {
      s->form(a, b) = t.form(indices[a], indices[b]);
      if (b <= a) continue;
      SparseVec v;
      for (auto& [k, c] : t.lie.bracket(indices[a], indices[b])) {
        auto it = pos.find(k);
        if (it == pos.end()) throw Error(ErrorKind::InvalidInput, "indices do not span a subalgebra");
        v[it->second] = c;
      }
      s->lie.set(a, b, v);
    }
  }
  for (int x : t.plus)
    if (pos.count(x)) s->plus.push_back(pos[x]);
  for (int x : t.minus)
    if (pos.count(x)) s->minus.push_back(pos[x]);
  return s;
}

static std::vector<int> sorted_union(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

ParabolicSplit split_from(const ManinTriple& t, std::vector<int> gd) {
  std::sort(gd.begin(), gd.end());
  ParabolicSplit s;
  s.gd = gd;
  std::set<int> in(gd.begin(), gd.end());
  for (int x : t.plus) (in.count(x) ? s.gd_plus : s.m_plus).push_back(x);
  for (int x : t.minus) (in.count(x) ? s.gd_minus : s.m_minus).push_back(x);
  s.p_plus = sorted_union(s.m_plus, gd);
  s.p_minus = sorted_union(s.m_minus, gd);
  return s;
}

ParabolicSplit parabolic_split(const ManinTriple& t, Mask d, CartanConvention conv) {
  if (!t.alg || t.cartan.empty()) throw Error(ErrorKind::InvalidInput, "parabolic splits need the double of g");
  const auto& alg = *t.alg;
  if (d & ~alg.gcm.all()) throw Error(ErrorKind::InvalidInput, "subdiagram outside the diagram");
  std::vector<int> gd;
  for (int a = 0; a < alg.num_pos(); ++a) {
    bool inside = true;
    for (int i = 0; i < alg.rank(); ++i)
      if (alg.roots[a][i] && !(d & bit(i))) inside = false;
    if (inside) {
      gd.push_back(dbl_e(t, a));
      gd.push_back(dbl_f(t, a));
    }
  }
  int count = 0;
  for (int k = 0; k < alg.rank(); ++k) {
    bool inside = true;
    for (int i = 0; i < alg.rank(); ++i)
      if (t.cartan[k][i] != 0 && !(d & bit(i))) inside = false;
    if (conv == CartanConvention::Full || inside) {
      gd.push_back(dbl_hp(t, k));
      gd.push_back(dbl_hm(t, k));
      if (inside) ++count;
    }
  }
  if (count != popcount(d)) throw Error(ErrorKind::InvalidInput, "Cartan basis of the double is not adapted to D");
  ParabolicSplit s = split_from(t, gd);
  s.d = d;
  return s;
}

std::vector<SparseVec> dual_basis(const ManinTriple& t, const std::vector<int>& minus, const std::vector<int>& plus) {
  int n = int(minus.size());
  if (int(plus.size()) != n) throw Error(ErrorKind::DegeneratePairing, "halves of different dimension");
  std::vector<SparseVec> out(n);
  if (n == 0) return out;
  Matrix g(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) g(k, l) = t.form(minus[k], plus[l]);
  auto inv = inverse(g);
  if (!inv) throw Error(ErrorKind::DegeneratePairing, "pairing between the halves is degenerate");
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      if ((*inv)(l, k) != 0) out[k][plus[l]] = (*inv)(l, k);
  return out;
}

std::map<std::pair<int, int>, Rational> cobracket(const ManinTriple& t, int x) {
  std::map<std::pair<int, int>, Rational> out;
  bool in_plus = std::find(t.plus.begin(), t.plus.end(), x) != t.plus.end();
  auto dual = dual_basis(t, t.minus, t.plus);
  int n = int(t.minus.size());
  auto add = [&](const SparseVec& u, const SparseVec& v, const Rational& c) {
    for (auto& [p, a] : u)
      for (auto& [q, b] : v) {
        Rational& s = out[{p, q}];
        s += c * a * b;
        if (s == 0) out.erase({p, q});
      }
  };
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      if (in_plus) {
        Rational c = t.inner({{x, 1}}, t.lie.bracket(t.minus[k], t.minus[l]));
        if (c != 0) add(dual[k], dual[l], c);
      } else {
        Rational c = t.inner({{x, 1}}, t.lie.bracket(dual[k], dual[l]));
        if (c != 0) add({{t.minus[k], 1}}, {{t.minus[l], 1}}, -c);
      }
    }
  return out;
}

std::vector<std::string> verify_split(const ManinTriple& t, const ParabolicSplit& s) {
  std::vector<std::string> bad;
  auto inside = [](const SparseVec& v, const std::vector<int>& span) {
    for (auto& [k, c] : v)
      if (!std::binary_search(span.begin(), span.end(), k)) return false;
    return true;
  };
  auto sorted = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<int> gd = sorted(s.gd), mp = sorted(s.m_plus), mm = sorted(s.m_minus);
  std::vector<int> pp = sorted(s.p_plus), pm = sorted(s.p_minus);
  auto closed = [&](const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& target,
                    const std::string& what) {
    for (int x : a)
      for (int y : b)
        if (!inside(t.lie.bracket(x, y), target)) {
          bad.push_back(what);
          return;
        }
  };
  closed(gd, gd, gd, "g_D is not a subalgebra");
  closed(t.plus, mp, mp, "m_+ is not an ideal in b_+");
  closed(t.minus, mm, mm, "m_- is not an ideal in b_-");
  closed(gd, mp, mp, "[g_D, m_+] not inside m_+");
  closed(gd, mm, mm, "[g_D, m_-] not inside m_-");
  closed(pp, pp, pp, "p_+ is not a subalgebra");
  closed(pm, pm, pm, "p_- is not a subalgebra");
  for (int x : gd) {
    for (int y : mp)
      if (t.form(x, y) != 0) bad.push_back("m_+ not orthogonal to g_D");
    for (int y : mm)
      if (t.form(x, y) != 0) bad.push_back("m_- not orthogonal to g_D");
  }
  try {
    dual_basis(t, s.gd_minus, s.gd_plus);
  } catch (const Error&) {
    bad.push_back("pairing on g_D is degenerate");
  }
  for (int x : mm)
    for (auto& [pq, c] : cobracket(t, x))
      if (!std::binary_search(mm.begin(), mm.end(), pq.first) && !std::binary_search(mm.begin(), mm.end(), pq.second)) {
        bad.push_back("m_- is not a coideal");
        break;
      }
  // projection p: p_± -> g_D killing m_± is a Lie map, and p∘i = id on g_D
  auto project = [&](const SparseVec& v) {
    SparseVec out;
    for (auto& [k, c] : v)
      if (std::binary_search(gd.begin(), gd.end(), k)) out[k] = c;
    return out;
  };
  for (const auto* p : {&pp, &pm})
    for (int x : *p)
      for (int y : *p) {
        SparseVec lhs = project(t.lie.bracket(x, y));
        SparseVec rhs = t.lie.bracket(project({{x, 1}}), project({{y, 1}}));
        if (lhs != rhs) {
          bad.push_back("projection onto g_D is not a Lie map");
          goto done;
        }
      }
done:
  for (int x : gd)
    if (project({{x, 1}}) != SparseVec{{x, 1}}) bad.push_back("p∘i is not the identity");
  return bad;
}

Matrix coproduct(const WeightModule& v, const WeightModule& w, const SparseVec& x) {
  return kron(v.act(x), Matrix::identity(w.dim())) + kron(Matrix::identity(v.dim()), w.act(x));
}

static Matrix r_from(const ManinTriple& t, const WeightModule& v, const WeightModule& w, const std::vector<int>& minus,
                     const std::vector<int>& plus, bool flipped) {
  Matrix out(v.dim() * w.dim(), v.dim() * w.dim());
  auto dual = dual_basis(t, minus, plus);
  for (size_t k = 0; k < minus.size(); ++k) {
    Matrix av = t.act(v, minus[k]), aw = t.act(w, minus[k]);
    Matrix bv = t.act(v, dual[k]), bw = t.act(w, dual[k]);
    out += flipped ? kron(bv, aw) : kron(av, bw);
  }
  return out;
}

OmegaData omega_and_r(const ManinTriple& t, const WeightModule& v, const WeightModule& w, const ParabolicSplit* split) {
  OmegaData o;
  o.r = r_from(t, v, w, t.minus, t.plus, false);
  o.r21 = r_from(t, v, w, t.minus, t.plus, true);
  o.omega = o.r + o.r21;
  const auto& alg = *t.alg;
  auto ginv = inverse(alg.form);
  if (!ginv) throw Error(ErrorKind::DegeneratePairing, "invariant form is degenerate");
  int n = v.dim() * w.dim();
  o.omega_direct = Matrix(n, n);
  for (int a = 0; a < alg.dim(); ++a)
    for (int b = 0; b < alg.dim(); ++b)
      if ((*ginv)(a, b) != 0) o.omega_direct += kron(v.rho[a], w.rho[b]) * (*ginv)(a, b);
  if (split) {
    o.r_d = r_from(t, v, w, split->gd_minus, split->gd_plus, false);
    o.r_d21 = r_from(t, v, w, split->gd_minus, split->gd_plus, true);
  } else {
    o.r_d = o.r_d21 = Matrix(n, n);
  }
  o.omega_d = o.r_d + o.r_d21;
  return o;
}

}  // namespace qcox
