#include "qcox/linalg.hpp"

#include <stdexcept>

#include "qcox/errors.hpp"

namespace qcox {

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorKind::InvalidInput, "bad rational '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorKind::InvalidInput, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

const char* error_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::EmptyDiagram: return "EmptyDiagram";
    case ErrorKind::ParentMismatch: return "ParentMismatch";
    case ErrorKind::NotProper: return "NotProper";
    case ErrorKind::EmptyKernel: return "EmptyKernel";
    case ErrorKind::CollapsesToEmpty: return "CollapsesToEmpty";
    case ErrorKind::NotGcm: return "NotGcm";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ChainMismatch: return "ChainMismatch";
    case ErrorKind::NotElementary: return "NotElementary";
    case ErrorKind::MissingPair: return "MissingPair";
    case ErrorKind::NoRelation: return "NoRelation";
    case ErrorKind::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorKind::NotAffine: return "NotAffine";
    case ErrorKind::NotExponentiable: return "NotExponentiable";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotFiniteType: return "NotFiniteType";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::DepthInsufficient: return "DepthInsufficient";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::DegeneratePairing: return "DegeneratePairing";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Error";
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = int(rows.size());
  cols_ = rows_ ? int(rows.begin()->size()) : 0;
  a_.reserve(size_t(rows_) * cols_);
  for (auto& r : rows) {
    if (int(r.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long x : r) a_.emplace_back(x);
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(int(rows.size()), cols);
  for (int i = 0; i < m.rows_; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  return m;
}

Vec Matrix::row(int i) const { return Vec(a_.begin() + size_t(i) * cols_, a_.begin() + size_t(i + 1) * cols_); }

Vec Matrix::col(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r = *this;
  r += o;
  return r;
}
Matrix Matrix::operator-(const Matrix& o) const {
  Matrix r = *this;
  r -= o;
  return r;
}
Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& x : r.a_) x = -x;
  return r;
}
Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
  for (size_t k = 0; k < a_.size(); ++k)
    if (sgn(o.a_[k]) != 0) a_[k] += o.a_[k];
  return *this;
}
Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
  for (size_t k = 0; k < a_.size(); ++k)
    if (sgn(o.a_[k]) != 0) a_[k] -= o.a_[k];
  return *this;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product size mismatch");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& x = (*this)(i, k);
      if (sgn(x) == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rational& y = o(k, j);
        if (sgn(y) != 0) r(i, j) += x * y;
      }
    }
  return r;
}

Matrix Matrix::operator*(const Rational& s) const {
  Matrix r = *this;
  for (auto& x : r.a_)
    if (sgn(x) != 0) x *= s;
  return r;
}

Vec Matrix::operator*(const Vec& v) const {
  if (int(v.size()) != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  Vec r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Rational& x = (*this)(i, j);
      if (sgn(x) != 0 && sgn(v[j]) != 0) r[i] += x * v[j];
    }
  return r;
}

bool Matrix::operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Rational& x = a(i, j);
      if (sgn(x) == 0) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          if (sgn(b(k, l)) != 0) r(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
    }
  return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Rref rref(Matrix m) {
  Rref out;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (sgn(m(i, c)) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.r = std::move(m);
  return out;
}

int rank(const Matrix& m) { return int(rref(m).pivots.size()); }

Rational determinant(Matrix m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  int n = m.rows();
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (sgn(m(i, c)) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (int j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Rref rr = rref(aug);
  if (int(rr.pivots.size()) < n || rr.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = rr.r(i, n + j);
  return inv;
}

std::vector<Vec> nullspace(const Matrix& m) {
  Rref rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (size_t r = 0; r < rr.pivots.size(); ++r) v[rr.pivots[r]] = -rr.r(int(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  Matrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Rref rr = rref(aug);
  if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (size_t r = 0; r < rr.pivots.size(); ++r) x[rr.pivots[r]] = rr.r(int(r), m.cols());
  return x;
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  Rref rr = rref(Matrix::from_rows(vectors, ambient));
  for (size_t r = 0; r < rr.pivots.size(); ++r) s.basis_.push_back(rr.r.row(int(r)));
  return s;
}

Subspace Subspace::whole(int ambient) {
  std::vector<Vec> e;
  for (int i = 0; i < ambient; ++i) {
    Vec v(ambient);
    v[i] = 1;
    e.push_back(v);
  }
  return span(ambient, e);
}

bool Subspace::contains(const Vec& v) const {
  std::vector<Vec> rows = basis_;
  rows.push_back(v);
  return rank(Matrix::from_rows(rows, n_)) == dim();
}

bool Subspace::contains(const Subspace& o) const {
  for (auto& v : o.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& o) const {
  std::vector<Vec> rows = basis_;
  rows.insert(rows.end(), o.basis_.begin(), o.basis_.end());
  return span(n_, rows);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (basis_.empty() || o.basis_.empty()) return Subspace(n_);
  // x = sum a_i u_i = sum b_j w_j
  int p = dim(), q = o.dim();
  Matrix m(n_, p + q);
  for (int k = 0; k < n_; ++k) {
    for (int i = 0; i < p; ++i) m(k, i) = basis_[i][k];
    for (int j = 0; j < q; ++j) m(k, p + j) = -o.basis_[j][k];
  }
  std::vector<Vec> out;
  for (auto& c : nullspace(m)) {
    Vec x(n_);
    for (int i = 0; i < p; ++i)
      if (sgn(c[i]) != 0) x = x + c[i] * basis_[i];
    out.push_back(x);
  }
  return span(n_, out);
}

bool SparseSystem::add(Row row, Rational rhs) {
  for (auto it = row.begin(); it != row.end();) {
    if (sgn(it->second) == 0)
      it = row.erase(it);
    else
      ++it;
  }
  while (!row.empty()) {
    int lead = row.begin()->first;
    auto p = pivots_.find(lead);
    if (p == pivots_.end()) {
      Rational inv = 1 / row.begin()->second;
      for (auto& [c, x] : row) x *= inv;
      rhs *= inv;
      pivots_.emplace(lead, std::make_pair(std::move(row), std::move(rhs)));
      return true;
    }
    Rational f = row.begin()->second;
    for (auto& [c, x] : p->second.first) {
      auto [it, fresh] = row.try_emplace(c, 0);
      it->second -= f * x;
      if (sgn(it->second) == 0) row.erase(it);
    }
    rhs -= f * p->second.second;
  }
  if (sgn(rhs) != 0) consistent_ = false;
  return sgn(rhs) == 0;
}

Vec SparseSystem::solution() const {
  Vec x(n_);
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    const auto& [row, rhs] = it->second;
    Rational v = rhs;
    for (auto& [c, a] : row)
      if (c != it->first && sgn(x[c]) != 0) v -= a * x[c];
    x[it->first] = v;
  }
  return x;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
Vec operator-(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}
Vec operator*(const Rational& s, const Vec& a) {
  Vec r = a;
  for (auto& x : r) x *= s;
  return r;
}
bool is_zero(const Vec& v) {
  for (auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}
Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

}  // namespace qcox
