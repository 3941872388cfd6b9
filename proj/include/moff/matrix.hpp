#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "moff/rational.hpp"

namespace moff {

/// Gaussian integer a + bi on 64 bits.
struct GaussInt {
  long long re = 0;
  long long im = 0;

  GaussInt conj() const { return {re, -im}; }
  friend GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussInt operator-(GaussInt a, GaussInt b) { return {a.re - b.re, a.im - b.im}; }
  friend bool operator==(GaussInt a, GaussInt b) { return a.re == b.re && a.im == b.im; }
  bool is_zero() const { return re == 0 && im == 0; }
};

/// Dense matrix with exact Gaussian-rational entries, stored as a
/// Gaussian-integer grid over one common positive denominator. All power-of-two
/// constructions in this library have entries in (1/m)*Z[i], so this layout
/// keeps every trace and product in fast integer arithmetic.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), num_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix ones(std::size_t rows, std::size_t cols);
  static ExactMatrix from_entries(std::size_t rows, std::size_t cols,
                                  const std::vector<ExactComplex>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  long long den() const { return den_; }
  bool empty() const { return num_.empty(); }

  const GaussInt& raw(std::size_t i, std::size_t j) const { return num_[i * cols_ + j]; }
  GaussInt& raw(std::size_t i, std::size_t j) { return num_[i * cols_ + j]; }
  void set_den(long long d);

  ExactComplex entry(std::size_t i, std::size_t j) const {
    const GaussInt& g = raw(i, j);
    return {Rational(g.re, den_), Rational(g.im, den_)};
  }

  ExactMatrix adjoint() const;
  ExactComplex trace() const;
  bool is_hermitian() const;

  /// Divides entries and denominator by their common gcd.
  void normalize();

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

  ExactMatrix scaled(const Rational& s) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  long long den_ = 1;
  std::vector<GaussInt> num_;
};

/// Dense complex<double> matrix for imported / randomized data.
class FloatMatrix {
 public:
  using Scalar = std::complex<double>;

  FloatMatrix() = default;
  FloatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static FloatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  FloatMatrix adjoint() const;
  Scalar trace() const;
  double hermitian_deviation() const;

  friend FloatMatrix operator+(const FloatMatrix& a, const FloatMatrix& b);
  friend FloatMatrix operator-(const FloatMatrix& a, const FloatMatrix& b);
  friend FloatMatrix operator*(const FloatMatrix& a, const FloatMatrix& b);
  FloatMatrix scaled(Scalar s) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

FloatMatrix to_float(const ExactMatrix& m);

// Hilbert-Schmidt inner product tr(A* B).
ExactComplex hs_inner(const ExactMatrix& a, const ExactMatrix& b);
std::complex<double> hs_inner(const FloatMatrix& a, const FloatMatrix& b);

/// tr(A* B) for Hermitian inputs; asserts the imaginary part vanishes.
Rational hs_inner_real(const ExactMatrix& a, const ExactMatrix& b);

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);
FloatMatrix kron(const FloatMatrix& a, const FloatMatrix& b);

struct ProjectorCheck {
  bool ok = false;
  std::size_t rank = 0;
  std::string reason;
};

// Hermitian + idempotent + integral trace; rank is round(tr M).
ProjectorCheck verify_projector(const ExactMatrix& m);
ProjectorCheck verify_projector(const FloatMatrix& m, double tol);

/// Extreme eigenvalues (min, max) of a Hermitian matrix, via cyclic Jacobi
/// sweeps on the real symmetric 2m x 2m realification.
std::pair<double, double> extreme_eigenvalues(const FloatMatrix& hermitian);

/// Rank of a rational matrix (row-major grid) by exact Gaussian elimination.
std::size_t rational_rank(std::vector<std::vector<Rational>> a);

/// Rank with a pivot threshold, for float-mode data.
std::size_t float_rank(std::vector<std::vector<double>> a, double tol);

}  // namespace moff
