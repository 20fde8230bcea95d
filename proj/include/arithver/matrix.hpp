#pragma once

// Dense row-major matrices over an exact ring, plus integer normal forms
// (Hermite, Smith), kernels and linear solving over Z and Q.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "arithver/exact_rings.hpp"

namespace arithver {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    a_.reserve(r_ * c_);
    for (const auto& row : rows) {
      if (row.size() != c_) throw std::invalid_argument("ragged matrix literal");
      for (const auto& v : row) a_.push_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <class F>
  Matrix map(F f) const {
    Matrix m(r_, c_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = f(a_[k]);
    return m;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.c_ != y.r_) throw std::invalid_argument("matrix product: dimension mismatch");
    Matrix p(x.r_, y.c_);
    for (std::size_t i = 0; i < x.r_; ++i)
      for (std::size_t k = 0; k < x.c_; ++k) {
        const T& v = x(i, k);
        if (v == T(0)) continue;
        for (std::size_t j = 0; j < y.c_; ++j) p(i, j) += v * y(k, j);
      }
    return p;
  }
  friend Matrix operator+(Matrix x, const Matrix& y) {
    x.check_same(y);
    for (std::size_t k = 0; k < x.a_.size(); ++k) x.a_[k] += y.a_[k];
    return x;
  }
  friend Matrix operator-(Matrix x, const Matrix& y) {
    x.check_same(y);
    for (std::size_t k = 0; k < x.a_.size(); ++k) x.a_[k] -= y.a_[k];
    return x;
  }
  Matrix operator-() const {
    return map([](const T& v) { return T(-v); });
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  std::vector<T> row(std::size_t i) const { return {a_.begin() + i * c_, a_.begin() + (i + 1) * c_}; }

  std::vector<T> apply(const std::vector<T>& x) const {
    if (x.size() != c_) throw std::invalid_argument("matrix-vector product: dimension mismatch");
    std::vector<T> y(r_, T(0));
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t nrows) {
    Matrix m(nrows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < nrows; ++i) m(i, j) = cols[j][i];
    return m;
  }

  Matrix block(std::size_t i0, std::size_t j0, std::size_t nr, std::size_t nc) const {
    Matrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
    return m;
  }
  void set_block(std::size_t i0, std::size_t j0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(i0 + i, j0 + j) = b(i, j);
  }

 private:
  void check_same(const Matrix& y) const {
    if (r_ != y.r_ || c_ != y.c_) throw std::invalid_argument("matrix sum: dimension mismatch");
  }

  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using ZMat = Matrix<Integer>;
using QMat = Matrix<Rational>;

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
  }
  return os << ']';
}

ZMat zmat(std::initializer_list<std::initializer_list<long>> rows);
QMat to_q(const ZMat& m);
/// Throws MathError unless every entry is an integer.
ZMat to_z(const QMat& m);

/// Row Hermite normal form with transform: U·A = H, U unimodular. H is
/// echelon with positive pivots and entries above each pivot in [0, pivot).
struct HermiteResult {
  ZMat H;
  ZMat U;
  std::size_t rank = 0;
};
HermiteResult hermite_rows(const ZMat& A);

/// Nonzero rows of the row Hermite form: canonical basis of the row lattice.
ZMat row_lattice_basis(const ZMat& A);

/// U·A·V = D with D diagonal (d₁ | d₂ | …, nonnegative), U and V unimodular.
struct SmithResult {
  ZMat U;
  ZMat D;
  ZMat V;
  std::vector<Integer> diagonal() const;
  std::size_t rank() const;
};
SmithResult smith(const ZMat& A);

/// Columns form a Z-basis of {x ∈ Zⁿ : A·x = 0}, in canonical (Hermite) form.
ZMat integer_kernel(const ZMat& A);

/// Integer solution X of A·X = B if one exists.
std::optional<ZMat> solve_integer(const ZMat& A, const ZMat& B);

Integer det(const ZMat& A);
Rational det(const QMat& A);
/// Throws MathError if singular.
QMat inverse(const QMat& A);
std::size_t rank(const QMat& A);

/// Matrix of the q-th exterior power on lexicographically ordered q-subsets.
ZMat exterior_power(const ZMat& A, std::size_t q);
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t q);

Integer floor_div(const Integer& a, const Integer& b);

}  // namespace arithver
