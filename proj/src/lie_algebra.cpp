#include "qcox/lie_algebra.hpp"

#include <algorithm>
#include <set>

#include "qcox/errors.hpp"

namespace qcox {

SparseVec& axpy(SparseVec& acc, const Rational& s, const SparseVec& x) {
  if (s == 0) return acc;
  for (auto& [k, v] : x) {
    Rational& t = acc[k];
    t += s * v;
    if (t == 0) acc.erase(k);
  }
  return acc;
}

SparseVec scaled(const SparseVec& x, const Rational& s) {
  SparseVec out;
  return axpy(out, s, x);
}

void LieAlgebra::set(int a, int b, const SparseVec& v) {
  table_[size_t(a) * dim_ + b] = v;
  table_[size_t(b) * dim_ + a] = scaled(v, -1);
}

SparseVec LieAlgebra::bracket(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (auto& [a, s] : x)
    for (auto& [b, t] : y) axpy(out, s * t, bracket(a, b));
  return out;
}

Matrix LieAlgebra::ad(const SparseVec& x) const {
  Matrix m(dim_, dim_);
  for (int b = 0; b < dim_; ++b)
    for (auto& [k, v] : bracket(x, SparseVec{{b, 1}})) m(k, b) = v;
  return m;
}

bool LieAlgebra::antisymmetric() const {
  for (int a = 0; a < dim_; ++a) {
    if (!bracket(a, a).empty()) return false;
    for (int b = a + 1; b < dim_; ++b) {
      SparseVec s = bracket(a, b);
      axpy(s, 1, bracket(b, a));
      if (!s.empty()) return false;
    }
  }
  return true;
}

std::array<int, 3> LieAlgebra::jacobi_failure() const {
  for (int a = 0; a < dim_; ++a)
    for (int b = a + 1; b < dim_; ++b)
      for (int c = b + 1; c < dim_; ++c) {
        SparseVec s = bracket(SparseVec{{a, 1}}, bracket(b, c));
        axpy(s, 1, bracket(SparseVec{{b, 1}}, bracket(c, a)));
        axpy(s, 1, bracket(SparseVec{{c, 1}}, bracket(a, b)));
        if (!s.empty()) return {a, b, c};
      }
  return {-1, -1, -1};
}

int ChevalleyAlgebra::simple(int i) const {
  Root r(rank(), 0);
  r[i] = 1;
  return root_index(r);
}

int ChevalleyAlgebra::root_index(const Root& r) const {
  auto it = std::find(roots.begin(), roots.end(), r);
  return it == roots.end() ? -1 : int(it - roots.begin());
}

int ChevalleyAlgebra::height(int a) const {
  int s = 0;
  for (int k : roots[a]) s += k;
  return s;
}

std::vector<int> ChevalleyAlgebra::weight(int basis) const {
  if (basis < num_pos()) return roots[basis];
  if (basis < num_pos() + rank()) return std::vector<int>(rank(), 0);
  std::vector<int> w = roots[basis - num_pos() - rank()];
  for (int& x : w) x = -x;
  return w;
}

int ChevalleyAlgebra::pair(const std::vector<int>& coeffs, int i) const {
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += coeffs[j] * int(gcm(i, j));
  return s;
}

SparseVec ChevalleyAlgebra::coroot(int a) const {
  SparseVec out;
  for (int i = 0; i < rank(); ++i)
    if (roots[a][i]) out[h(i)] = Rational(roots[a][i]) * d[i] / root_d[a];
  return out;
}

Rational ChevalleyAlgebra::inner(const SparseVec& x, const SparseVec& y) const {
  Rational s = 0;
  for (auto& [a, u] : x)
    for (auto& [b, v] : y)
      if (form(a, b) != 0) s += u * v * form(a, b);
  return s;
}

static int root_pair(const Gcm& a, const Root& r, int i) {
  int s = 0;
  for (int j = 0; j < a.size(); ++j) s += r[j] * int(a(i, j));
  return s;
}

// largest k with r - k alpha_i in the set
static int string_down(const std::set<Root>& known, Root r, int i) {
  int p = 0;
  while (true) {
    r[i] -= 1;
    if (r[i] < 0 || !known.count(r)) return p;
    ++p;
  }
}

std::vector<Root> positive_roots(const Gcm& a) {
  if (!is_finite_type(a)) throw Error(ErrorKind::NotFiniteType, "root enumeration needs a finite-type matrix");
  int n = a.size();
  std::vector<Root> level, all;
  std::set<Root> known;
  for (int i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    level.push_back(r);
  }
  while (!level.empty()) {
    std::sort(level.begin(), level.end(), std::greater<Root>());
    for (auto& r : level) {
      all.push_back(r);
      known.insert(r);
    }
    std::set<Root> next;
    for (auto& r : level)
      for (int i = 0; i < n; ++i) {
        int q = string_down(known, r, i) - root_pair(a, r, i);
        if (q > 0) {
          Root s = r;
          s[i] += 1;
          next.insert(s);
        }
      }
    level.assign(next.begin(), next.end());
  }
  return all;
}

GeneratorModule highest_weight_generators(const Gcm& a, const std::vector<int>& highest, int bound) {
  int n = a.size();
  if (int(highest.size()) != n) throw Error(ErrorKind::InvalidInput, "highest weight has the wrong length");
  for (int x : highest)
    if (x < 0) throw Error(ErrorKind::InvalidInput, "highest weight is not dominant");
  GeneratorModule m;
  m.highest = highest;
  std::vector<std::vector<SparseVec>> ecol(n), fcol(n);
  auto add_vector = [&](const std::vector<int>& w) {
    m.weights.push_back(w);
    for (int j = 0; j < n; ++j) {
      ecol[j].emplace_back();
      fcol[j].emplace_back();
    }
    if (m.dim() > bound) throw Error(ErrorKind::BoundExceeded, "module dimension exceeds " + std::to_string(bound));
    return m.dim() - 1;
  };
  add_vector(highest);
  std::vector<int> level{0};
  while (!level.empty()) {
    // candidates f_i b grouped by weight
    std::map<std::vector<int>, std::vector<std::pair<int, int>>> groups;
    for (int b : level)
      for (int i = 0; i < n; ++i) {
        std::vector<int> mu = m.weights[b];
        for (int k = 0; k < n; ++k) mu[k] -= int(a(k, i));
        groups[mu].push_back({i, b});
      }
    std::vector<int> next;
    for (auto& [mu, cands] : groups) {
      // e_j f_i b = f_i e_j b + δ_ij <wt b, h_i> b
      std::vector<SparseVec> images;
      std::map<int, int> rows;
      for (auto [i, b] : cands) {
        SparseVec img;
        for (int j = 0; j < n; ++j)
          for (auto& [c, s] : ecol[j][b]) axpy(img, s, fcol[i][c]);
        if (m.weights[b][i] != 0) img[b] += m.weights[b][i];
        for (auto& kv : img) rows.emplace(kv.first, 0);
        images.push_back(std::move(img));
      }
      int r = 0;
      for (auto& kv : rows) kv.second = r++;
      Matrix mat(int(rows.size()), int(cands.size()));
      for (size_t c = 0; c < cands.size(); ++c)
        for (auto& [k, v] : images[c]) mat(rows[k], int(c)) = v;
      Rref red = rref(mat);
      std::vector<int> fresh;
      for (int p : red.pivots) {
        int idx = add_vector(mu);
        fresh.push_back(idx);
        next.push_back(idx);
        // split the e-image by the weight of its target
        for (auto& [k, v] : images[p])
          for (int j = 0; j < n; ++j) {
            bool match = true;
            for (int t = 0; t < n; ++t)
              if (m.weights[k][t] != mu[t] + int(a(t, j))) match = false;
            if (match) ecol[j][idx][k] = v;
          }
      }
      for (size_t c = 0; c < cands.size(); ++c) {
        auto [i, b] = cands[c];
        SparseVec col;
        for (size_t t = 0; t < fresh.size(); ++t)
          if (red.r(int(t), int(c)) != 0) col[fresh[t]] = red.r(int(t), int(c));
        fcol[i][b] = col;
      }
    }
    level = next;
  }
  int dim = m.dim();
  for (int j = 0; j < n; ++j) {
    Matrix e(dim, dim), f(dim, dim), h(dim, dim);
    for (int b = 0; b < dim; ++b) {
      for (auto& [k, v] : ecol[j][b]) e(k, b) = v;
      for (auto& [k, v] : fcol[j][b]) f(k, b) = v;
      h(b, b) = m.weights[b][j];
    }
    m.e.push_back(e);
    m.f.push_back(f);
    m.h.push_back(h);
  }
  return m;
}

static std::string root_name(char prefix, const Root& r) {
  std::string s(1, prefix);
  s += "(";
  for (size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ")";
}

static Matrix block_sum(const Matrix& x, const Matrix& y) {
  Matrix m(x.rows() + y.rows(), x.cols() + y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) m(i, j) = x(i, j);
  for (int i = 0; i < y.rows(); ++i)
    for (int j = 0; j < y.cols(); ++j) m(x.rows() + i, x.cols() + j) = y(i, j);
  return m;
}

AlgebraPtr build_algebra(const Gcm& a) {
  auto alg = std::make_shared<ChevalleyAlgebra>();
  alg->gcm = a;
  alg->roots = positive_roots(a);
  alg->d = a.symmetrizer ? *a.symmetrizer : find_symmetrizer(a);
  alg->gcm.symmetrizer = alg->d;
  int n = a.size(), np = alg->num_pos(), dim = alg->dim();
  std::set<Root> known(alg->roots.begin(), alg->roots.end());
  for (auto& r : alg->roots) {
    Rational s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += Rational(r[i] * r[j]) * alg->d[i] * a(i, j);
    alg->root_d.push_back(s / 2);
    ChevalleyAlgebra::Step st;
    int ht = 0;
    for (int k : r) ht += k;
    if (ht > 1) {
      for (int i = 0; i < n && st.i < 0; ++i) {
        Root b = r;
        b[i] -= 1;
        if (b[i] >= 0 && known.count(b)) {
          st.i = i;
          st.beta = alg->root_index(b);
          st.p = string_down(known, b, i);
        }
      }
    }
    alg->steps.push_back(st);
  }

  // faithful module: sum of the adjoint modules of the components
  std::vector<Matrix> E(n), F(n);
  bool first = true;
  Mask seen = 0;
  for (int s = 0; s < n; ++s) {
    if (seen & bit(s)) continue;
    Mask comp = 0;
    for (auto& r : alg->roots)
      if (r[s]) {
        Mask m = 0;
        for (int i = 0; i < n; ++i)
          if (r[i]) m |= bit(i);
        comp |= m;
      }
    seen |= comp;
    int top = -1, best = 0;
    for (int k = 0; k < np; ++k)
      if (alg->roots[k][s] && alg->height(k) > best) {
        best = alg->height(k);
        top = k;
      }
    std::vector<int> lambda(n);
    for (int i = 0; i < n; ++i) lambda[i] = alg->pair(alg->roots[top], i);
    GeneratorModule gm = highest_weight_generators(a, lambda, 4 * dim);
    for (int i = 0; i < n; ++i) {
      E[i] = first ? gm.e[i] : block_sum(E[i], gm.e[i]);
      F[i] = first ? gm.f[i] : block_sum(F[i], gm.f[i]);
    }
    first = false;
  }

  std::vector<Matrix> X(dim);
  for (int k = 0; k < np; ++k) {
    const auto& st = alg->steps[k];
    if (st.i < 0) {
      int i = 0;
      while (!alg->roots[k][i]) ++i;
      X[alg->e(k)] = E[i];
      X[alg->f(k)] = F[i];
    } else {
      X[alg->e(k)] = commutator(E[st.i], X[alg->e(st.beta)]) * Rational(1, st.p + 1);
      X[alg->f(k)] = commutator(F[st.i], X[alg->f(st.beta)]) * Rational(-1, st.p + 1);
    }
  }
  for (int i = 0; i < n; ++i) X[alg->h(i)] = commutator(E[i], F[i]);

  int md = X[0].rows();
  Matrix hd(md, n);
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < md; ++r) hd(r, i) = X[alg->h(i)](r, r);

  LieAlgebra lie(dim);
  for (int k = 0; k < np; ++k) {
    lie.names.push_back(root_name('e', alg->roots[k]));
  }
  for (int i = 0; i < n; ++i) lie.names.push_back("h" + std::to_string(i + 1));
  for (int k = 0; k < np; ++k) lie.names.push_back(root_name('f', alg->roots[k]));

  for (int x = 0; x < dim; ++x)
    for (int y = x + 1; y < dim; ++y) {
      Matrix c = commutator(X[x], X[y]);
      std::vector<int> w = alg->weight(x), wy = alg->weight(y);
      for (int i = 0; i < n; ++i) w[i] += wy[i];
      SparseVec v;
      if (c.is_zero()) {
      } else if (std::all_of(w.begin(), w.end(), [](int t) { return t == 0; })) {
        Vec diag(md);
        for (int r = 0; r < md; ++r) diag[r] = c(r, r);
        auto sol = solve(hd, diag);
        if (!sol) throw Error(ErrorKind::InvalidInput, "bracket leaves the Cartan subalgebra");
        Matrix check(md, md);
        for (int i = 0; i < n; ++i)
          if ((*sol)[i] != 0) {
            v[alg->h(i)] = (*sol)[i];
            check += X[alg->h(i)] * (*sol)[i];
          }
        if (check != c) throw Error(ErrorKind::InvalidInput, "bracket leaves the Cartan subalgebra");
      } else {
        bool neg = w[0] < 0 || std::any_of(w.begin(), w.end(), [](int t) { return t < 0; });
        Root r = w;
        if (neg)
          for (int& t : r) t = -t;
        int k = alg->root_index(r);
        if (k < 0) throw Error(ErrorKind::InvalidInput, "nonzero bracket outside the root spaces");
        int target = neg ? alg->f(k) : alg->e(k);
        const Matrix& t = X[target];
        Rational coef;
        bool found = false;
        for (int i = 0; i < md && !found; ++i)
          for (int j = 0; j < md && !found; ++j)
            if (t(i, j) != 0) {
              coef = c(i, j) / t(i, j);
              found = true;
            }
        if (t * coef != c) throw Error(ErrorKind::InvalidInput, "bracket is not a multiple of a root vector");
        v[target] = coef;
      }
      lie.set(x, y, v);
    }
  alg->lie = std::move(lie);

  // checks
  for (int x = 0; x < dim; ++x)
    for (int y = 0; y < dim; ++y)
      for (auto& [k, c] : alg->lie.bracket(x, y))
        if (!is_integer(c)) throw Error(ErrorKind::InvalidInput, "non-integral structure constant");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SparseVec want;
      if (i == j) want[alg->h(i)] = 1;
      if (alg->lie.bracket(alg->e(alg->simple(i)), alg->f(alg->simple(j))) != want)
        throw Error(ErrorKind::InvalidInput, "[e_i,f_j] != δ_ij h_i");
    }
  for (int k = 0; k < np; ++k)
    if (alg->lie.bracket(alg->e(k), alg->f(k)) != alg->coroot(k))
      throw Error(ErrorKind::InvalidInput, "[e_a,f_a] is not the coroot");
  if (alg->lie.jacobi_failure()[0] >= 0) throw Error(ErrorKind::InvalidInput, "Jacobi identity fails");

  alg->form = Matrix(dim, dim);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) alg->form(alg->h(i), alg->h(j)) = Rational(a(i, j)) / alg->d[j];
  for (int k = 0; k < np; ++k) {
    alg->form(alg->e(k), alg->f(k)) = 1 / alg->root_d[k];
    alg->form(alg->f(k), alg->e(k)) = 1 / alg->root_d[k];
  }
  for (int x = 0; x < dim; ++x)
    for (int y = 0; y < dim; ++y) {
      const SparseVec& xy = alg->lie.bracket(x, y);
      for (int z = 0; z < dim; ++z) {
        Rational lhs = alg->inner(xy, {{z, 1}});
        Rational rhs = alg->inner({{x, 1}}, alg->lie.bracket(y, z));
        if (lhs != rhs) throw Error(ErrorKind::InvalidInput, "invariant form check fails");
      }
    }
  return alg;
}

AlgebraPtr build_algebra(const std::string& type) { return build_algebra(cartan_matrix(type)); }

}  // namespace qcox
