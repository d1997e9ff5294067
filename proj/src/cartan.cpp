#include "qcox/cartan.hpp"

#include <algorithm>
#include <deque>

#include "qcox/errors.hpp"

namespace qcox {

Gcm::Gcm(std::vector<std::vector<long>> entries) : a_(std::move(entries)) {
  int n = size();
  if (n == 0) throw Error(ErrorKind::NotGcm, "empty matrix");
  if (n > 64) throw Error(ErrorKind::TooLarge, "more than 64 rows");
  for (auto& r : a_)
    if (int(r.size()) != n) throw Error(ErrorKind::NotGcm, "matrix is not square");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j && a_[i][j] != 2) throw Error(ErrorKind::NotGcm, "diagonal entry is not 2");
      if (i != j && a_[i][j] > 0) throw Error(ErrorKind::NotGcm, "positive off-diagonal entry");
      if (i != j && (a_[i][j] == 0) != (a_[j][i] == 0))
        throw Error(ErrorKind::NotGcm, "zero pattern is not symmetric at " + std::to_string(i + 1) + "," +
                                           std::to_string(j + 1));
    }
}

Matrix Gcm::matrix() const { return submatrix(all()); }

Matrix Gcm::submatrix(Mask j) const {
  auto idx = indices(j);
  Matrix m(int(idx.size()), int(idx.size()));
  for (size_t r = 0; r < idx.size(); ++r)
    for (size_t c = 0; c < idx.size(); ++c) m(int(r), int(c)) = Rational(a_[idx[r]][idx[c]]);
  return m;
}

Mask Gcm::orthogonal_complement(Mask j) const {
  Mask out = 0;
  for (int k = 0; k < size(); ++k) {
    if (j & bit(k)) continue;
    bool joined = false;
    for (int i : indices(j))
      if (a_[i][k] != 0) joined = true;
    if (!joined) out |= bit(k);
  }
  return out;
}

bool Gcm::connected(Mask j) const {
  if (j == 0) return false;
  Mask seen = bit(lowest(j)), frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (int i : indices(frontier))
      for (int k : indices(j))
        if (a_[i][k] != 0 && !(seen & bit(k))) next |= bit(k);
    seen |= next;
    frontier = next;
  }
  return seen == j;
}

static std::vector<std::vector<long>> block(char kind, int r) {
  std::vector<std::vector<long>> a(r, std::vector<long>(r, 0));
  for (int i = 0; i < r; ++i) a[i][i] = 2;
  auto link = [&](int i, int j, long aij, long aji) {
    a[i][j] = aij;
    a[j][i] = aji;
  };
  switch (kind) {
    case 'A':
      for (int i = 0; i + 1 < r; ++i) link(i, i + 1, -1, -1);
      break;
    case 'B':
    case 'C':
      if (r < 2) throw Error(ErrorKind::InvalidInput, "B/C need rank >= 2");
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1, -1);
      if (kind == 'B')
        link(r - 2, r - 1, -1, -2);
      else
        link(r - 2, r - 1, -2, -1);
      break;
    case 'D':
      if (r < 4) throw Error(ErrorKind::InvalidInput, "D needs rank >= 4");
      for (int i = 0; i + 2 < r; ++i) link(i, i + 1, -1, -1);
      link(r - 3, r - 1, -1, -1);
      break;
    case 'G':
      if (r != 2) throw Error(ErrorKind::InvalidInput, "G has rank 2");
      link(0, 1, -1, -3);
      break;
    case 'F':
      if (r != 4) throw Error(ErrorKind::InvalidInput, "F has rank 4");
      link(0, 1, -1, -1);
      link(1, 2, -1, -2);
      link(2, 3, -1, -1);
      break;
    default:
      throw Error(ErrorKind::InvalidInput, std::string("unknown Cartan type ") + kind);
  }
  return a;
}

Gcm cartan_matrix(const std::string& type) {
  std::vector<std::vector<long>> acc;
  size_t pos = 0;
  while (pos <= type.size()) {
    size_t next = type.find('x', pos);
    std::string part = type.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (part.size() < 2) throw Error(ErrorKind::InvalidInput, "bad Cartan type '" + type + "'");
    int r = 0;
    try {
      r = std::stoi(part.substr(1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "bad Cartan type '" + type + "'");
    }
    if (r < 1 || r > 16) throw Error(ErrorKind::InvalidInput, "bad rank in '" + type + "'");
    auto b = block(char(std::toupper(part[0])), r);
    size_t off = acc.size();
    for (auto& row : acc) row.resize(off + r, 0);
    for (auto& row : b) {
      std::vector<long> full(off, 0);
      full.insert(full.end(), row.begin(), row.end());
      acc.push_back(full);
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return Gcm(acc);
}

SymmetrizerResult try_symmetrizer(const Gcm& a) {
  int n = a.size();
  std::vector<std::optional<Rational>> d(n);
  std::vector<int> parent(n, -1);
  auto path_to_root = [&](int v) {
    std::vector<int> p;
    for (; v != -1; v = parent[v]) p.push_back(v);
    std::reverse(p.begin(), p.end());
    return p;
  };
  for (int root = 0; root < n; ++root) {
    if (d[root]) continue;
    d[root] = Rational(1);
    std::deque<int> q{root};
    while (!q.empty()) {
      int i = q.front();
      q.pop_front();
      for (int j = 0; j < n; ++j) {
        if (j == i || a(i, j) == 0) continue;
        Rational want = *d[i] * a(i, j) / a(j, i);
        if (!d[j]) {
          d[j] = want;
          parent[j] = i;
          q.push_back(j);
        } else if (*d[j] != want) {
          auto pi = path_to_root(i), pj = path_to_root(j);
          size_t k = 0;
          while (k + 1 < pi.size() && k + 1 < pj.size() && pi[k + 1] == pj[k + 1]) ++k;
          SymmetrizerResult res;
          for (size_t t = k; t < pi.size(); ++t) res.cycle.push_back(pi[t]);
          for (size_t t = pj.size(); t-- > k;) res.cycle.push_back(pj[t]);
          return res;
        }
      }
    }
  }
  SymmetrizerResult res;
  res.d.emplace();
  for (auto& x : d) res.d->push_back(*x);
  return res;
}

std::vector<Rational> find_symmetrizer(const Gcm& a) {
  auto r = try_symmetrizer(a);
  if (r.d) return *r.d;
  std::string c;
  for (int v : r.cycle) c += std::to_string(v + 1) + " ";
  throw Error(ErrorKind::NotSymmetrizable, "product condition fails on the cycle " + c);
}

int corank(const Gcm& a, Mask j) {
  if (j == 0) throw Error(ErrorKind::InvalidInput, "corank of the empty set");
  return popcount(j) - rank(a.submatrix(j));
}

std::optional<CorankViolation> check_corank_lemma(const Gcm& a, int bound) {
  int n = a.size();
  if (n > bound) throw Error(ErrorKind::TooLarge, "matrix exceeds the bound");
  Mask full = a.all();
  std::vector<int> c(size_t(full) + 1, 0);
  for (Mask j = 1; j <= full; ++j) c[j] = corank(a, j);
  for (Mask j1 = 1; j1 <= full; ++j1)
    for (Mask j2 = j1; j2 <= full; ++j2) {
      Mask m = j1 & j2;
      if (m && c[m] > c[j1] + c[j2]) return CorankViolation{j1, j2, c[j1], c[j2], c[m]};
    }
  return std::nullopt;
}

bool is_finite_type(const Gcm& a) {
  for (Mask j = 1; j <= a.all(); ++j)
    if (determinant(a.submatrix(j)) <= 0) return false;
  return true;
}

bool is_affine_type(const Gcm& a) {
  if (!a.connected(a.all()) || corank(a, a.all()) != 1) return false;
  for (int k = 0; k < a.size(); ++k) {
    Mask proper = a.all() & ~bit(k);
    if (proper == 0) continue;
    for (Mask j = proper; j; j = (j - 1) & proper)
      if (determinant(a.submatrix(j)) <= 0) return false;
  }
  return true;
}

Subspace Realization::coroot_span(Mask j) const {
  std::vector<Vec> v;
  for (int i : indices(j)) v.push_back(coroots[i]);
  return Subspace::span(dim, v);
}

Subspace Realization::kernel(Mask j) const {
  if (j == 0) return Subspace::whole(dim);
  std::vector<Vec> rows;
  for (int i : indices(j)) rows.push_back(alpha.row(i));
  return Subspace::span(dim, nullspace(Matrix::from_rows(rows, dim)));
}

Rational Realization::pair(const Vec& x, const Vec& y) const { return dot(x, form * y); }

bool Realization::nondegenerate_on(const Subspace& s) const {
  const auto& b = s.basis();
  Matrix g(int(b.size()), int(b.size()));
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) g(int(i), int(j)) = pair(b[i], b[j]);
  return determinant(g) != 0;
}

int Realization::restricted_rank(Mask j, const Subspace& s) const {
  auto idx = indices(j);
  const auto& b = s.basis();
  if (b.empty() || idx.empty()) return 0;
  Matrix m(int(idx.size()), int(b.size()));
  for (size_t r = 0; r < idx.size(); ++r)
    for (size_t c = 0; c < b.size(); ++c) m(int(r), int(c)) = dot(alpha.row(idx[r]), b[c]);
  return rank(m);
}

Realization build_realization(const Gcm& a) {
  Realization re;
  re.d = a.symmetrizer ? *a.symmetrizer : find_symmetrizer(a);
  int n = a.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (re.d[i] * a(i, j) != re.d[j] * a(j, i)) throw Error(ErrorKind::NotSymmetrizable, "given symmetrizer is wrong");
  Rref r = rref(a.matrix());
  std::vector<int> extra;
  for (int j = 0; j < n; ++j)
    if (std::find(r.pivots.begin(), r.pivots.end(), j) == r.pivots.end()) extra.push_back(j);
  re.n = n;
  re.dim = n + int(extra.size());
  re.alpha = Matrix(n, re.dim);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) re.alpha(i, j) = Rational(a(j, i));
  for (size_t k = 0; k < extra.size(); ++k) re.alpha(extra[k], n + int(k)) = 1;
  for (int i = 0; i < n; ++i) {
    Vec h(re.dim, Rational(0));
    h[i] = 1;
    re.coroots.push_back(h);
  }
  re.form = Matrix(re.dim, re.dim);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < re.dim; ++k) {
      Rational v = re.alpha(i, k) / re.d[i];
      re.form(k, i) = v;
      re.form(i, k) = v;
    }
  if (determinant(re.form) == 0) throw Error(ErrorKind::DegeneratePairing, "realization form is degenerate");
  return re;
}

static std::vector<Mask> connected_sets(const Gcm& a) {
  std::vector<Mask> out;
  for (Mask j = 1; j <= a.all(); ++j)
    if (a.connected(j)) out.push_back(j);
  std::stable_sort(out.begin(), out.end(), [](Mask x, Mask y) { return popcount(x) > popcount(y); });
  return out;
}

std::vector<std::string> verify_dstructure(const DStructure& s) {
  std::vector<std::string> bad;
  const Gcm& a = s.base;
  const Realization& re = s.realization;
  auto need = connected_sets(a);
  need.push_back(a.all());
  for (Mask j : need)
    if (!s.subspaces.count(j)) bad.push_back("missing h_" + mask_label(j));
  for (auto& [j, h] : s.subspaces) {
    std::string name = "h_" + mask_label(j);
    if (j == a.all()) {
      if (h.dim() != re.dim) bad.push_back(name + " is not all of h");
      continue;
    }
    if (!h.contains(re.coroot_span(j))) bad.push_back(name + " misses a coroot");
    if (h.dim() != 2 * popcount(j) - rank(a.submatrix(j))) bad.push_back(name + " has the wrong dimension");
    if (re.restricted_rank(j, h) != popcount(j)) bad.push_back(name + ": restricted roots are dependent");
    Mask perp = a.orthogonal_complement(j);
    if (perp && !re.kernel(perp).contains(h)) bad.push_back(name + " not inside t of the orthogonal complement");
    for (auto& [k, hk] : s.subspaces)
      if (k != j && (k & j) == j && !hk.contains(h)) bad.push_back(name + " not inside h_" + mask_label(k));
    if (!re.nondegenerate_on(h)) bad.push_back("form degenerate on " + name);
  }
  return bad;
}

namespace {

struct Attempt {
  std::map<Mask, Subspace> h;
  std::optional<DimensionObstruction> fail;
};

Attempt greedy(const Gcm& a, const Realization& re, bool reverse) {
  Attempt at;
  at.h[a.all()] = Subspace::whole(re.dim);
  for (Mask j : connected_sets(a)) {
    if (j == a.all()) continue;
    Subspace u = Subspace::whole(re.dim);
    Mask perp = a.orthogonal_complement(j);
    if (perp) u = u.intersect(re.kernel(perp));
    for (auto& [k, hk] : at.h)
      if (k != j && (k & j) == j) u = u.intersect(hk);
    int target = popcount(j);
    std::vector<Vec> cur;
    for (int i : indices(j)) cur.push_back(re.coroots[i]);
    int have = re.restricted_rank(j, Subspace::span(re.dim, cur));
    auto basis = u.basis();
    if (reverse) std::reverse(basis.begin(), basis.end());
    for (auto& v : basis) {
      if (have == target) break;
      cur.push_back(v);
      int r = re.restricted_rank(j, Subspace::span(re.dim, cur));
      if (r > have)
        have = r;
      else
        cur.pop_back();
    }
    if (have < target) {
      at.fail = DimensionObstruction{j, u.dim(), 2 * popcount(j) - rank(a.submatrix(j)), re.restricted_rank(j, u)};
      return at;
    }
    at.h[j] = Subspace::span(re.dim, cur);
  }
  return at;
}

}  // namespace

DStructureAnalysis analyze_dstructure(const Gcm& a, int bound) {
  Gcm g = a;
  if (!g.symmetrizer) g.symmetrizer = find_symmetrizer(g);
  DStructureAnalysis res;
  if (auto v = check_corank_lemma(g, bound)) {
    res.verdict = Verdict::Infeasible;
    res.corank = v;
    res.explanation = "corank(A_" + mask_label(v->first & v->second) + ") = " + std::to_string(v->corank_meet) +
                      " exceeds corank(A_" + mask_label(v->first) + ") + corank(A_" + mask_label(v->second) +
                      ") = " + std::to_string(v->corank_first + v->corank_second);
    return res;
  }
  Realization re = build_realization(g);
  Attempt first = greedy(g, re, false);
  auto accept = [&](Attempt& at) {
    res.verdict = Verdict::Feasible;
    res.structure = DStructure{g, re, std::move(at.h)};
    auto bad = verify_dstructure(*res.structure);
    if (!bad.empty()) throw Error(ErrorKind::InvalidInput, "constructed D-structure fails verification: " + bad.front());
    res.explanation = "all invariants verified";
  };
  if (!first.fail) {
    accept(first);
    return res;
  }
  Mask j = first.fail->j;
  bool forced = true;
  for (Mask k : connected_sets(g))
    if (k != j && (k & j) == j && k != g.all() && corank(g, k) != 0) forced = false;
  if (forced) {
    res.verdict = Verdict::Infeasible;
    res.obstruction = first.fail;
    res.explanation = "dim U_" + mask_label(j) + " = " + std::to_string(first.fail->available) + " but h_" +
                      mask_label(j) + " needs dimension " + std::to_string(first.fail->required) +
                      " with independent restricted roots; every larger subspace is forced";
    return res;
  }
  Attempt second = greedy(g, re, true);
  if (!second.fail) {
    accept(second);
    return res;
  }
  res.verdict = Verdict::Undecided;
  res.obstruction = second.fail;
  res.explanation = "greedy search failed at h_" + mask_label(second.fail->j) + " under both completion orders";
  return res;
}

DStructure affine_dstructure(const Gcm& a) {
  if (!is_affine_type(a)) throw Error(ErrorKind::NotAffine, "matrix is not of irreducible affine type");
  Gcm g = a;
  if (!g.symmetrizer) g.symmetrizer = find_symmetrizer(g);
  DStructure s{g, build_realization(g), {}};
  for (Mask j : connected_sets(g))
    s.subspaces[j] = (j == g.all()) ? Subspace::whole(s.realization.dim) : s.realization.coroot_span(j);
  return s;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Feasible:
      return "Feasible";
    case Verdict::Infeasible:
      return "Infeasible";
    case Verdict::Undecided:
      return "Undecided";
  }
  return "";
}

std::string mask_label(Mask m) {
  std::string s;
  bool wide = m >> 9;
  for (int i : indices(m)) {
    if (wide && !s.empty()) s += ",";
    s += std::to_string(i + 1);
  }
  return s;
}

Diagram gcm_to_diagram(const Gcm& a) {
  int n = a.size();
  std::vector<std::string> ids;
  int width = int(std::to_string(n).size());
  for (int i = 1; i <= n; ++i) {
    std::string s = std::to_string(i);
    ids.push_back(std::string(width - s.size(), '0') + s);
  }
  std::vector<Diagram::Edge> edges;
  std::map<Diagram::Edge, int> labels;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      long p = a(i, j) * a(j, i);
      if (p == 0) continue;
      edges.push_back({ids[i], ids[j]});
      labels[{ids[i], ids[j]}] = p == 1 ? 3 : p == 2 ? 4 : p == 3 ? 6 : kInfinity;
    }
  return Diagram(ids, edges, labels);
}

}  // namespace qcox
