#include "qcox/verma.hpp"

#include <algorithm>
#include <functional>

#include "qcox/errors.hpp"

namespace qcox {

InducedModule::InducedModule(TriplePtr t, std::vector<int> complement, std::vector<int> sub, int depth)
    : t_(std::move(t)), complement_(std::move(complement)), sub_(std::move(sub)), depth_(depth) {
  int n = t_->dim();
  pos_of_.assign(n, -1);
  order_ = complement_;
  order_.insert(order_.end(), sub_.begin(), sub_.end());
  for (int p = 0; p < int(order_.size()); ++p) {
    int x = order_[p];
    if (x < 0 || x >= n || pos_of_[x] >= 0) throw Error(ErrorKind::InvalidInput, "complement and sub must partition the basis");
    pos_of_[x] = p;
  }
  if (int(order_.size()) != n) throw Error(ErrorKind::InvalidInput, "complement and sub must partition the basis");
  for (int x = 0; x < n; ++x)
    if (t_->grade[x] <= 0) throw Error(ErrorKind::InvalidInput, "grades must be positive");

  Monomial cur;
  std::function<void(int, int)> rec = [&](int from, int g) {
    basis_.push_back(cur);
    for (int p = from; p < int(complement_.size()); ++p) {
      int gp = t_->grade[order_[p]];
      if (g + gp > depth_) continue;
      cur.push_back(p);
      rec(p, g + gp);
      cur.pop_back();
    }
  };
  rec(0, 0);
  std::stable_sort(basis_.begin(), basis_.end(),
                   [&](const Monomial& a, const Monomial& b) { return grade(a) < grade(b); });
  for (int k = 0; k < dim(); ++k) index_[basis_[k]] = k;
}

int InducedModule::grade(const Monomial& m) const {
  int g = 0;
  for (int p : m) g += t_->grade[order_[p]];
  return g;
}

int InducedModule::grade(const SparseVec& v) const {
  int g = 0;
  for (auto& [k, c] : v) g = std::max(g, grade_of(k));
  return g;
}

int InducedModule::index(const Monomial& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

SparseVec InducedModule::mul(int pos, const Monomial& m) const {
  auto key = std::make_pair(pos, m);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  SparseVec out;
  bool is_sub = pos >= int(complement_.size());
  if (m.empty()) {
    if (!is_sub) out[index(Monomial{pos})] = 1;
  } else if (!is_sub && pos <= m.front()) {
    Monomial big{pos};
    big.insert(big.end(), m.begin(), m.end());
    out[index(big)] = 1;
  } else {
    // x y rest = y (x rest) + [x,y] rest
    int y = m.front();
    Monomial rest(m.begin() + 1, m.end());
    for (auto& [k, c] : mul(pos, rest)) axpy(out, c, mul(y, basis_[k]));
    int gx = t_->grade[order_[pos]], gy = t_->grade[order_[y]];
    for (auto& [z, c] : t_->lie.bracket(order_[pos], order_[y])) {
      if (t_->grade[z] > gx + gy) throw Error(ErrorKind::InvalidInput, "bracket raises the grade");
      axpy(out, c, mul(pos_of_[z], rest));
    }
  }
  memo_.emplace(key, out);
  return out;
}

SparseVec InducedModule::act(int x, const SparseVec& v) const {
  SparseVec out;
  int gx = t_->grade[x];
  for (auto& [k, c] : v) {
    if (gx + grade_of(k) > depth_)
      throw Error(ErrorKind::DepthInsufficient, "action leaves the truncation depth " + std::to_string(depth_));
    axpy(out, c, mul(pos_of_[x], basis_[k]));
  }
  return out;
}

SparseVec InducedModule::act(const SparseVec& x, const SparseVec& v) const {
  SparseVec out;
  for (auto& [k, c] : x) axpy(out, c, act(k, v));
  return out;
}

std::string InducedModule::name(int basis_index) const {
  const auto& m = basis_[basis_index];
  if (m.empty()) return "1";
  std::string s;
  for (size_t k = 0; k < m.size(); ++k) {
    int x = order_[m[k]];
    s += (k ? " " : "") + (t_->lie.names.empty() ? std::to_string(x) : t_->lie.names[x]);
  }
  return s;
}

InducedModule build_verma(const TriplePtr& t, const ParabolicSplit& s, VermaKind kind, int depth) {
  switch (kind) {
    case VermaKind::MMinus:
      return InducedModule(t, t->minus, t->plus, depth);
    case VermaKind::MPlus:
      return InducedModule(t, t->plus, t->minus, depth);
    case VermaKind::LMinus:
      return InducedModule(t, s.m_minus, s.p_plus, depth);
    case VermaKind::NPlus:
      return InducedModule(t, s.p_plus, s.m_minus, depth);
  }
  throw Error(ErrorKind::InvalidInput, "unknown Verma kind");
}

int minimal_depth(const ManinTriple& t) {
  int g = 1;
  for (int x : t.grade) g = std::max(g, x);
  return g;
}

Vec Intertwiner::apply(const SparseVec& n) const {
  Vec out(values.empty() ? 0 : values[0].size(), Rational(0));
  for (auto& [k, c] : n) out = out + c * values.at(k);
  return out;
}

Intertwiner solve_intertwiner(const InducedModule& nplus, const WeightModule& v, const Vec& vec) {
  int dv = v.dim(), nb = nplus.dim();
  if (int(vec.size()) != dv) throw Error(ErrorKind::InvalidInput, "vector has the wrong dimension");
  const ManinTriple& t = nplus.triple();
  SparseSystem sys(nb * dv);
  auto var = [&](int k, int c) { return k * dv + c; };
  bool ok = true;
  for (int c = 0; c < dv; ++c) ok &= sys.add({{var(0, c), 1}}, vec[c]);
  std::vector<Matrix> rho;
  for (int y : nplus.complement()) rho.push_back(t.act(v, y));
  // grade by grade
  for (int g = 0; g <= nplus.depth(); ++g)
    for (int k = 0; k < nb; ++k) {
      if (nplus.grade_of(k) != g) continue;
      for (size_t yi = 0; yi < nplus.complement().size(); ++yi) {
        int y = nplus.complement()[yi];
        if (nplus.element_grade(y) + g > nplus.depth()) continue;
        SparseVec ym = nplus.act(y, {{k, 1}});
        for (int c = 0; c < dv; ++c) {
          SparseSystem::Row row;
          for (auto& [j, s] : ym) row[var(j, c)] += s;
          for (int d = 0; d < dv; ++d)
            if (rho[yi](c, d) != 0) row[var(k, d)] -= rho[yi](c, d);
          for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
          if (!row.empty()) ok &= sys.add(row, 0);
        }
      }
    }
  if (!ok) throw Error(ErrorKind::SingularSystem, "intertwiner equations are inconsistent");
  Intertwiner f;
  f.rank = sys.rank();
  f.unknowns = nb * dv;
  if (f.rank != f.unknowns) throw Error(ErrorKind::SingularSystem, "intertwiner is not unique at this depth");
  Vec sol = sys.solution();
  for (int k = 0; k < nb; ++k) f.values.emplace_back(sol.begin() + k * dv, sol.begin() + (k + 1) * dv);
  return f;
}

namespace {

using Pair = std::map<std::pair<int, int>, Rational>;
using Triple3 = std::map<std::array<int, 3>, Rational>;

// i_-(m) for a basis monomial: ordered sub-sequence splits
Pair split2(const InducedModule& l, int k) {
  const auto& m = l.basis()[k];
  Pair out;
  size_t n = m.size();
  for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
    InducedModule::Monomial a, b;
    for (size_t i = 0; i < n; ++i) ((mask >> i) & 1 ? a : b).push_back(m[i]);
    out[{l.index(a), l.index(b)}] += 1;
  }
  return out;
}

Pair split2(const InducedModule& l, const SparseVec& v) {
  Pair out;
  for (auto& [k, c] : v)
    for (auto& [ab, s] : split2(l, k)) out[ab] += c * s;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

CoalgebraReport check_coalgebra(const InducedModule& l) {
  CoalgebraReport rep;
  const ManinTriple& t = l.triple();
  int maxg = minimal_depth(t);
  for (int k = 0; k < l.dim(); ++k) {
    ++rep.monomials;
    Triple3 left, right;
    for (auto& [ab, c] : split2(l, k)) {
      for (auto& [xy, s] : split2(l, ab.first)) left[{xy.first, xy.second, ab.second}] += c * s;
      for (auto& [xy, s] : split2(l, ab.second)) right[{ab.first, xy.first, xy.second}] += c * s;
    }
    if (left != right) rep.coassociative = false;
    if (l.grade_of(k) + maxg > l.depth()) continue;
    for (int x = 0; x < t.dim(); ++x) {
      Pair lhs = split2(l, l.act(x, {{k, 1}}));
      Pair rhs;
      for (auto& [ab, c] : split2(l, k)) {
        for (auto& [j, s] : l.act(x, {{ab.first, 1}})) rhs[{j, ab.second}] += c * s;
        for (auto& [j, s] : l.act(x, {{ab.second, 1}})) rhs[{ab.first, j}] += c * s;
      }
      for (auto it = rhs.begin(); it != rhs.end();) it = it->second == 0 ? rhs.erase(it) : std::next(it);
      if (lhs != rhs) rep.equivariant = false;
    }
  }
  return rep;
}

bool check_bimodule(const InducedModule& n, const ParabolicSplit& s) {
  const ManinTriple& t = n.triple();
  auto right = [&](int x, int k) {
    SparseVec v = n.act(x, n.generator());
    const auto& m = n.basis()[k];
    for (size_t i = m.size(); i-- > 0;) v = n.act(n.order()[m[i]], v);
    return v;
  };
  auto right_vec = [&](int x, const SparseVec& v) {
    SparseVec out;
    for (auto& [k, c] : v) axpy(out, c, right(x, k));
    return out;
  };
  for (int x : s.gd)
    for (int k = 0; k < n.dim(); ++k)
      for (int z = 0; z < t.dim(); ++z) {
        if (n.grade_of(k) + t.grade[x] + t.grade[z] > n.depth()) continue;
        if (n.act(z, right(x, k)) != right_vec(x, n.act(z, {{k, 1}}))) return false;
      }
  return true;
}

}  // namespace qcox
