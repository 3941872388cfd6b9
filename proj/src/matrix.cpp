#include "moff/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace moff {
namespace {

long long narrow(int128 v) {
  if (v > int128(INT64_MAX) || v < int128(INT64_MIN))
    throw std::overflow_error("ExactMatrix: value exceeds 64 bits");
  return static_cast<long long>(v);
}

long long gcd_ll(long long a, long long b) {
  a = std::abs(a);
  b = std::abs(b);
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void require_same_shape(const char* op, std::size_t r1, std::size_t c1,
                        std::size_t r2, std::size_t c2) {
  if (r1 != r2 || c1 != c2)
    throw std::invalid_argument(std::string(op) + ": shape mismatch");
}

}  // namespace

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.raw(i, i) = {1, 0};
  return m;
}

ExactMatrix ExactMatrix::ones(std::size_t rows, std::size_t cols) {
  ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.raw(i, j) = {1, 0};
  return m;
}

ExactMatrix ExactMatrix::from_entries(std::size_t rows, std::size_t cols,
                                      const std::vector<ExactComplex>& entries) {
  if (entries.size() != rows * cols)
    throw std::invalid_argument("from_entries: wrong entry count");
  int128 lcm = 1;
  for (const auto& e : entries) {
    for (long long d : {e.re().den(), e.im().den()}) {
      int128 g = gcd_ll(narrow(lcm % d), d);
      lcm = lcm / (g == 0 ? 1 : g) * d;
    }
  }
  long long den = narrow(lcm);
  ExactMatrix m(rows, cols);
  m.den_ = den;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& e = entries[k];
    m.num_[k].re = narrow(int128(e.re().num()) * (den / e.re().den()));
    m.num_[k].im = narrow(int128(e.im().num()) * (den / e.im().den()));
  }
  m.normalize();
  return m;
}

void ExactMatrix::set_den(long long d) {
  if (d <= 0) throw std::invalid_argument("ExactMatrix: denominator must be positive");
  den_ = d;
  normalize();
}

ExactMatrix ExactMatrix::adjoint() const {
  ExactMatrix m(cols_, rows_);
  m.den_ = den_;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.raw(j, i) = raw(i, j).conj();
  return m;
}

ExactComplex ExactMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
  int128 re = 0, im = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    re += raw(i, i).re;
    im += raw(i, i).im;
  }
  return {Rational(narrow(re), den_), Rational(narrow(im), den_)};
}

bool ExactMatrix::is_hermitian() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (!(raw(i, j) == raw(j, i).conj())) return false;
  return true;
}

void ExactMatrix::normalize() {
  long long g = den_;
  for (const auto& e : num_) {
    g = gcd_ll(g, e.re);
    g = gcd_ll(g, e.im);
    if (g == 1) return;
  }
  if (g <= 1) return;
  den_ /= g;
  for (auto& e : num_) {
    e.re /= g;
    e.im /= g;
  }
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_shape("add", a.rows_, a.cols_, b.rows_, b.cols_);
  long long g = gcd_ll(a.den_, b.den_);
  long long fa = b.den_ / g;
  long long fb = a.den_ / g;
  ExactMatrix m(a.rows_, a.cols_);
  m.den_ = narrow(int128(a.den_) * fa);
  for (std::size_t k = 0; k < m.num_.size(); ++k) {
    m.num_[k].re = narrow(int128(a.num_[k].re) * fa + int128(b.num_[k].re) * fb);
    m.num_[k].im = narrow(int128(a.num_[k].im) * fa + int128(b.num_[k].im) * fb);
  }
  m.normalize();
  return m;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  return a + b.scaled(Rational(-1));
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("mul: inner dimension mismatch");
  ExactMatrix m(a.rows_, b.cols_);
  m.den_ = narrow(int128(a.den_) * b.den_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      int128 re = 0, im = 0;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const GaussInt& x = a.raw(i, k);
        const GaussInt& y = b.raw(k, j);
        re += int128(x.re) * y.re - int128(x.im) * y.im;
        im += int128(x.re) * y.im + int128(x.im) * y.re;
      }
      m.raw(i, j) = {narrow(re), narrow(im)};
    }
  }
  m.normalize();
  return m;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t k = 0; k < a.num_.size(); ++k) {
    // cross-multiply; both sides are normalized but may differ in den
    if (int128(a.num_[k].re) * b.den_ != int128(b.num_[k].re) * a.den_) return false;
    if (int128(a.num_[k].im) * b.den_ != int128(b.num_[k].im) * a.den_) return false;
  }
  return true;
}

ExactMatrix ExactMatrix::scaled(const Rational& s) const {
  ExactMatrix m(rows_, cols_);
  m.den_ = narrow(int128(den_) * s.den());
  for (std::size_t k = 0; k < num_.size(); ++k) {
    m.num_[k].re = narrow(int128(num_[k].re) * s.num());
    m.num_[k].im = narrow(int128(num_[k].im) * s.num());
  }
  m.normalize();
  return m;
}

FloatMatrix FloatMatrix::identity(std::size_t n) {
  FloatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

FloatMatrix FloatMatrix::adjoint() const {
  FloatMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = std::conj(at(i, j));
  return m;
}

FloatMatrix::Scalar FloatMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
  Scalar t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

double FloatMatrix::hermitian_deviation() const {
  if (rows_ != cols_) return HUGE_VAL;
  double worst = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      worst = std::max(worst, std::abs(at(i, j) - std::conj(at(j, i))));
  return worst;
}

FloatMatrix operator+(const FloatMatrix& a, const FloatMatrix& b) {
  require_same_shape("add", a.rows_, a.cols_, b.rows_, b.cols_);
  FloatMatrix m(a.rows_, a.cols_);
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] = a.data_[k] + b.data_[k];
  return m;
}

FloatMatrix operator-(const FloatMatrix& a, const FloatMatrix& b) {
  require_same_shape("sub", a.rows_, a.cols_, b.rows_, b.cols_);
  FloatMatrix m(a.rows_, a.cols_);
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] = a.data_[k] - b.data_[k];
  return m;
}

FloatMatrix operator*(const FloatMatrix& a, const FloatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("mul: inner dimension mismatch");
  FloatMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      FloatMatrix::Scalar x = a.at(i, k);
      for (std::size_t j = 0; j < b.cols_; ++j) m.at(i, j) += x * b.at(k, j);
    }
  return m;
}

FloatMatrix FloatMatrix::scaled(Scalar s) const {
  FloatMatrix m(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] * s;
  return m;
}

FloatMatrix to_float(const ExactMatrix& m) {
  FloatMatrix f(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const GaussInt& g = m.raw(i, j);
      f.at(i, j) = {double(g.re) / double(m.den()), double(g.im) / double(m.den())};
    }
  return f;
}

ExactComplex hs_inner(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_shape("hs_inner", a.rows(), a.cols(), b.rows(), b.cols());
  int128 re = 0, im = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      GaussInt x = a.raw(i, j).conj();
      const GaussInt& y = b.raw(i, j);
      re += int128(x.re) * y.re - int128(x.im) * y.im;
      im += int128(x.re) * y.im + int128(x.im) * y.re;
    }
  long long d = narrow(int128(a.den()) * b.den());
  return {Rational(narrow(re), d), Rational(narrow(im), d)};
}

std::complex<double> hs_inner(const FloatMatrix& a, const FloatMatrix& b) {
  require_same_shape("hs_inner", a.rows(), a.cols(), b.rows(), b.cols());
  std::complex<double> s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::conj(a.at(i, j)) * b.at(i, j);
  return s;
}

Rational hs_inner_real(const ExactMatrix& a, const ExactMatrix& b) {
  ExactComplex v = hs_inner(a, b);
  if (!v.is_real()) throw std::logic_error("hs_inner_real: nonzero imaginary part");
  return v.re();
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  long long den = 1;
  {
    int128 d = int128(a.den()) * b.den();
    if (d > int128(INT64_MAX)) throw std::overflow_error("kron: denominator overflow");
    den = static_cast<long long>(d);
  }
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const GaussInt& x = a.raw(i, j);
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) {
          const GaussInt& y = b.raw(p, q);
          GaussInt& e = out.raw(i * b.rows() + p, j * b.cols() + q);
          e.re = narrow(int128(x.re) * y.re - int128(x.im) * y.im);
          e.im = narrow(int128(x.re) * y.im + int128(x.im) * y.re);
        }
    }
  out.set_den(den);
  return out;
}

FloatMatrix kron(const FloatMatrix& a, const FloatMatrix& b) {
  FloatMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          m.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
  return m;
}

ProjectorCheck verify_projector(const ExactMatrix& m) {
  ProjectorCheck c;
  if (m.rows() != m.cols()) {
    c.reason = "not square";
    return c;
  }
  if (!m.is_hermitian()) {
    c.reason = "not Hermitian";
    return c;
  }
  if (!(m * m == m)) {
    c.reason = "not idempotent";
    return c;
  }
  ExactComplex t = m.trace();
  if (!t.is_real() || !t.re().is_integer() || t.re().is_negative()) {
    c.reason = "non-integral trace";
    return c;
  }
  c.ok = true;
  c.rank = static_cast<std::size_t>(t.re().num());
  return c;
}

ProjectorCheck verify_projector(const FloatMatrix& m, double tol) {
  ProjectorCheck c;
  if (m.rows() != m.cols()) {
    c.reason = "not square";
    return c;
  }
  if (m.hermitian_deviation() > tol) {
    c.reason = "not Hermitian";
    return c;
  }
  FloatMatrix diff = m * m - m;
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      worst = std::max(worst, std::abs(diff.at(i, j)));
  if (worst > tol) {
    c.reason = "not idempotent";
    return c;
  }
  double t = m.trace().real();
  double r = std::round(t);
  if (std::abs(t - r) > m.rows() * tol || r < 0) {
    c.reason = "non-integral trace";
    return c;
  }
  c.ok = true;
  c.rank = static_cast<std::size_t>(r);
  return c;
}

std::pair<double, double> extreme_eigenvalues(const FloatMatrix& h) {
  std::size_t m = h.rows();
  if (h.cols() != m) throw std::invalid_argument("extreme_eigenvalues: not square");
  // realification: H = A + iB Hermitian -> [[A, -B], [B, A]] symmetric
  std::size_t n = 2 * m;
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      a[i][j] = h.at(i, j).real();
      a[i + m][j + m] = h.at(i, j).real();
      a[i][j + m] = -h.at(i, j).imag();
      a[i + m][j] = h.at(i, j).imag();
    }
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-26) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double cs = 1.0 / std::sqrt(t * t + 1.0);
        double sn = t * cs;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = cs * akp - sn * akq;
          a[k][q] = sn * akp + cs * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = cs * apk - sn * aqk;
          a[q][k] = sn * apk + cs * aqk;
        }
      }
  }
  double lo = a[0][0], hi = a[0][0];
  for (std::size_t i = 1; i < n; ++i) {
    lo = std::min(lo, a[i][i]);
    hi = std::max(hi, a[i][i]);
  }
  return {lo, hi};
}

std::size_t rational_rank(std::vector<std::vector<Rational>> a) {
  if (a.empty()) return 0;
  std::size_t rows = a.size(), cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c].is_zero()) continue;
      Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t float_rank(std::vector<std::vector<double>> a, double tol) {
  if (a.empty()) return 0;
  std::size_t rows = a.size(), cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    for (std::size_t r = rank + 1; r < rows; ++r)
      if (std::abs(a[r][c]) > std::abs(a[pivot][c])) pivot = r;
    if (std::abs(a[pivot][c]) <= tol) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      double f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace moff
