#pragma once

#include <string>
#include <vector>

#include "qcox/linalg.hpp"

namespace qcox {

// c_0 + c_1 ħ + ... + c_N ħ^N, exact modulo ħ^{N+1}.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order = 0) : c_(size_t(order) + 1, Rational(0)) {}
  TruncatedSeries(std::vector<Rational> coeffs);

  int order() const { return int(c_.size()) - 1; }
  Rational& operator[](int k) { return c_[k]; }
  const Rational& operator[](int k) const { return c_[k]; }

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const Rational& s) const;
  bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }
  std::string to_string() const;

 private:
  std::vector<Rational> c_;
};

// exp of a series with zero constant term
TruncatedSeries series_exp(const TruncatedSeries& s);

// Square matrix over truncated series, stored as its ħ-coefficients.
class SeriesMatrix {
 public:
  SeriesMatrix() = default;
  SeriesMatrix(int dim, int order);
  static SeriesMatrix identity(int dim, int order);
  static SeriesMatrix constant(const Matrix& m, int order);
  // m ħ^k
  static SeriesMatrix monomial(const Matrix& m, int k, int order);

  int dim() const { return dim_; }
  int order() const { return int(c_.size()) - 1; }
  Matrix& coeff(int k) { return c_[k]; }
  const Matrix& coeff(int k) const { return c_[k]; }
  TruncatedSeries entry(int i, int j) const;
  bool is_zero() const;
  // lowest k with a nonzero coefficient, or -1
  int valuation() const;

  SeriesMatrix operator+(const SeriesMatrix& o) const;
  SeriesMatrix operator-(const SeriesMatrix& o) const;
  SeriesMatrix operator-() const;
  SeriesMatrix operator*(const SeriesMatrix& o) const;
  SeriesMatrix operator*(const Rational& s) const;
  bool operator==(const SeriesMatrix& o) const { return dim_ == o.dim_ && c_ == o.c_; }
  bool operator!=(const SeriesMatrix& o) const { return !(*this == o); }

 private:
  int dim_ = 0;
  std::vector<Matrix> c_;
};

SeriesMatrix kron(const SeriesMatrix& a, const SeriesMatrix& b);

// Throws NotExponentiable unless the ħ^0 part is nilpotent.
SeriesMatrix series_exp(const SeriesMatrix& m);
// Inverse of a matrix whose ħ^0 part is invertible.
SeriesMatrix series_inverse(const SeriesMatrix& m);

// The permutation V⊗W -> W⊗V in the basis e_i⊗e_j (index i*dw + j).
Matrix flip_operator(int dv, int dw);

// Alt2 X = (X - X^{21})/2 with X^{21} = P X P; throws NotSquare if dv != dw.
Matrix alt2(const Matrix& t, int dv, int dw);
SeriesMatrix alt2(const SeriesMatrix& t, int dv, int dw);

}  // namespace qcox
