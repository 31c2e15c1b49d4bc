#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "absdil/errors.hpp"
#include "absdil/scalars.hpp"

namespace absdil {

/// Dense row-major matrix over an arbitrary scalar ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using CMatrix = Matrix<Complex>;
using XMatrix = Matrix<ExactScalar>;
using IMatrix = Matrix<long long>;

namespace detail {
inline Complex conj_of(const Complex& x) { return std::conj(x); }
inline ExactScalar conj_of(const ExactScalar& x) { return x.conj(); }
inline long long conj_of(long long x) { return x; }
inline bool zero_of(const Complex& x) { return x == Complex{}; }
inline bool zero_of(const ExactScalar& x) { return x.is_zero(); }
inline bool zero_of(long long x) { return x == 0; }
}  // namespace detail

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (detail::zero_of(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

template <class T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix sum: shape");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += b(i, j);
  return a;
}

template <class T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix difference: shape");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= b(i, j);
  return a;
}

template <class T>
Matrix<T> scaled(Matrix<T> a, const T& s) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) *= s;
  return a;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

template <class T>
Matrix<T> conjugate(Matrix<T> a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = detail::conj_of(a(i, j));
  return a;
}

template <class T>
Matrix<T> adjoint(const Matrix<T>& a) {
  return conjugate(transpose(a));
}

template <class T>
T trace(const Matrix<T>& a) {
  if (!a.is_square()) throw DimensionError("trace of non-square matrix");
  T t{};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

/// (x (x) y)[i][j] = x_i * y_j.
template <class T>
Matrix<T> outer(std::span<const T> x, std::span<const T> y) {
  Matrix<T> m(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = x[i] * y[j];
  return m;
}

template <class T>
std::vector<T> conj_vector(std::span<const T> x) {
  std::vector<T> r(x.begin(), x.end());
  for (auto& v : r) v = detail::conj_of(v);
  return r;
}

/// <x, y> = sum_i x_i * conj(y_i) (linear in the first argument).
template <class T>
T inner(std::span<const T> x, std::span<const T> y) {
  if (x.size() != y.size()) throw DimensionError("inner product: length mismatch");
  T s{};
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * detail::conj_of(y[i]);
  return s;
}

template <class T>
std::vector<T> mat_vec(const Matrix<T>& a, std::span<const T> x) {
  if (a.cols() != x.size()) throw DimensionError("matrix-vector product: length mismatch");
  std::vector<T> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

CMatrix to_float(const XMatrix& a);

double frobenius_norm(const CMatrix& a);
double max_abs(const CMatrix& a);
/// max |a_ij - conj(a_ji)|.
double hermitian_defect(const CMatrix& a);
bool is_hermitian(const XMatrix& a);

}  // namespace absdil
