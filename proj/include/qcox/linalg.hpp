#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qcox/rational.hpp"

namespace qcox {

using Vec = std::vector<Rational>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  Vec row(int i) const;
  Vec col(int j) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Rational& s) const;
  Vec operator*(const Vec& v) const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);

struct Rref {
  Matrix r;
  std::vector<int> pivots;
};

Rref rref(Matrix m);
int rank(const Matrix& m);
Rational determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);
// basis of {x : m x = 0}
std::vector<Vec> nullspace(const Matrix& m);
// some solution of m x = b, or nothing
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// Subspaces of Q^n stored as a reduced row-echelon basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : n_(ambient) {}
  static Subspace span(int ambient, const std::vector<Vec>& vectors);
  static Subspace whole(int ambient);

  int ambient() const { return n_; }
  int dim() const { return int(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }

  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

 private:
  int n_ = 0;
  std::vector<Vec> basis_;
};

// Incremental sparse echelon form for large overdetermined systems.
class SparseSystem {
 public:
  using Row = std::map<int, Rational>;
  explicit SparseSystem(int unknowns) : n_(unknowns) {}
  // false when the row reduces to 0 = nonzero
  bool add(Row row, Rational rhs);
  int rank() const { return int(pivots_.size()); }
  int unknowns() const { return n_; }
  bool consistent() const { return consistent_; }
  // free variables set to zero
  Vec solution() const;

 private:
  int n_;
  bool consistent_ = true;
  std::map<int, std::pair<Row, Rational>> pivots_;  // leading column -> normalized row
};

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& s, const Vec& a);
bool is_zero(const Vec& v);
Rational dot(const Vec& a, const Vec& b);

}  // namespace qcox
