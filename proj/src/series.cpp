#include "qcox/series.hpp"

#include <sstream>

#include "qcox/errors.hpp"

namespace qcox {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.push_back(0);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  TruncatedSeries r(order());
  for (int k = 0; k <= order(); ++k) r.c_[k] = c_[k] + o.c_[k];
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  TruncatedSeries r(order());
  for (int k = 0; k <= order(); ++k) r.c_[k] = c_[k] - o.c_[k];
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  TruncatedSeries r(order());
  for (int a = 0; a <= order(); ++a)
    for (int b = 0; a + b <= order(); ++b) r.c_[a + b] += c_[a] * o.c_[b];
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& s) const {
  TruncatedSeries r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (int k = 0; k <= order(); ++k) {
    if (c_[k] == 0) continue;
    if (any) os << " + ";
    os << c_[k].get_str();
    if (k == 1) os << " h";
    if (k > 1) os << " h^" << k;
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
  if (s[0] != 0) throw Error(ErrorKind::NotExponentiable, "scalar series with nonzero constant term");
  TruncatedSeries out(s.order()), term(s.order());
  out[0] = 1;
  term[0] = 1;
  for (int k = 1; k <= s.order(); ++k) {
    term = term * s * Rational(1, k);
    out = out + term;
  }
  return out;
}

SeriesMatrix::SeriesMatrix(int dim, int order) : dim_(dim), c_(size_t(order) + 1, Matrix(dim, dim)) {}

SeriesMatrix SeriesMatrix::identity(int dim, int order) {
  SeriesMatrix m(dim, order);
  m.c_[0] = Matrix::identity(dim);
  return m;
}

SeriesMatrix SeriesMatrix::constant(const Matrix& a, int order) { return monomial(a, 0, order); }

SeriesMatrix SeriesMatrix::monomial(const Matrix& a, int k, int order) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "series matrices are square");
  SeriesMatrix m(a.rows(), order);
  if (k <= order) m.c_[k] = a;
  return m;
}

TruncatedSeries SeriesMatrix::entry(int i, int j) const {
  TruncatedSeries s(order());
  for (int k = 0; k <= order(); ++k) s[k] = c_[k](i, j);
  return s;
}

bool SeriesMatrix::is_zero() const { return valuation() < 0; }

int SeriesMatrix::valuation() const {
  for (int k = 0; k <= order(); ++k)
    if (!c_[k].is_zero()) return k;
  return -1;
}

static void check_shape(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.dim() != b.dim() || a.order() != b.order()) throw Error(ErrorKind::InvalidInput, "series matrix shape mismatch");
}

SeriesMatrix SeriesMatrix::operator+(const SeriesMatrix& o) const {
  check_shape(*this, o);
  SeriesMatrix r = *this;
  for (int k = 0; k <= order(); ++k) r.c_[k] += o.c_[k];
  return r;
}

SeriesMatrix SeriesMatrix::operator-(const SeriesMatrix& o) const {
  check_shape(*this, o);
  SeriesMatrix r = *this;
  for (int k = 0; k <= order(); ++k) r.c_[k] -= o.c_[k];
  return r;
}

SeriesMatrix SeriesMatrix::operator-() const {
  SeriesMatrix r = *this;
  for (auto& m : r.c_) m = -m;
  return r;
}

SeriesMatrix SeriesMatrix::operator*(const SeriesMatrix& o) const {
  check_shape(*this, o);
  SeriesMatrix r(dim_, order());
  for (int a = 0; a <= order(); ++a) {
    if (c_[a].is_zero()) continue;
    for (int b = 0; a + b <= order(); ++b)
      if (!o.c_[b].is_zero()) r.c_[a + b] += c_[a] * o.c_[b];
  }
  return r;
}

SeriesMatrix SeriesMatrix::operator*(const Rational& s) const {
  SeriesMatrix r = *this;
  for (auto& m : r.c_) m = m * s;
  return r;
}

SeriesMatrix kron(const SeriesMatrix& a, const SeriesMatrix& b) {
  SeriesMatrix r(a.dim() * b.dim(), a.order());
  for (int x = 0; x <= a.order(); ++x)
    for (int y = 0; x + y <= a.order(); ++y)
      if (!a.coeff(x).is_zero() && !b.coeff(y).is_zero()) r.coeff(x + y) += kron(a.coeff(x), b.coeff(y));
  return r;
}

SeriesMatrix series_exp(const SeriesMatrix& m) {
  int n = m.dim();
  Matrix p = Matrix::identity(n);
  for (int k = 0; k < n; ++k) p = p * m.coeff(0);
  if (n > 0 && !p.is_zero()) throw Error(ErrorKind::NotExponentiable, "constant term is not nilpotent");
  SeriesMatrix out = SeriesMatrix::identity(n, m.order()), term = out;
  for (long k = 1;; ++k) {
    term = term * m * Rational(1, k);
    if (term.is_zero()) break;
    out = out + term;
  }
  return out;
}

SeriesMatrix series_inverse(const SeriesMatrix& m) {
  auto inv0 = inverse(m.coeff(0));
  if (!inv0) throw Error(ErrorKind::SingularSystem, "constant term is singular");
  // m = m0 (1 + x) with x of positive valuation
  SeriesMatrix x = SeriesMatrix::constant(*inv0, m.order()) * m - SeriesMatrix::identity(m.dim(), m.order());
  SeriesMatrix acc = SeriesMatrix::identity(m.dim(), m.order()), pw = acc;
  for (int k = 1; k <= m.order(); ++k) {
    pw = pw * x * Rational(-1);
    acc = acc + pw;
  }
  return acc * SeriesMatrix::constant(*inv0, m.order());
}

Matrix flip_operator(int dv, int dw) {
  Matrix p(dv * dw, dv * dw);
  for (int i = 0; i < dv; ++i)
    for (int j = 0; j < dw; ++j) p(j * dv + i, i * dw + j) = 1;
  return p;
}

Matrix alt2(const Matrix& t, int dv, int dw) {
  if (dv != dw) throw Error(ErrorKind::NotSquare, "alternator needs V = W");
  Matrix p = flip_operator(dv, dw);
  return (t - p * t * p) * Rational(1, 2);
}

SeriesMatrix alt2(const SeriesMatrix& t, int dv, int dw) {
  SeriesMatrix r(t.dim(), t.order());
  for (int k = 0; k <= t.order(); ++k) r.coeff(k) = alt2(t.coeff(k), dv, dw);
  return r;
}

}  // namespace qcox
