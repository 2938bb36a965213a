#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "irredcert/error.hpp"

namespace irredcert {

/// Dense row-major matrix. Arithmetic lives in namespace mat and takes the
/// ring object explicitly.
template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw ShapeError("matrix entry count does not match its shape");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

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

template <class R>
using MatrixOver = Matrix<typename R::Element>;

template <class R>
using Vector = std::vector<typename R::Element>;

namespace mat {

template <class R>
MatrixOver<R> zeros(const R& ring, std::size_t rows, std::size_t cols) {
  return MatrixOver<R>(rows, cols, ring.zero());
}

template <class R>
MatrixOver<R> identity(const R& ring, std::size_t n) {
  auto m = zeros(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
  return m;
}

template <class R>
MatrixOver<R> scalar(const R& ring, std::size_t n, const typename R::Element& c) {
  auto m = zeros(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

template <class R>
MatrixOver<R> mul(const R& ring, const MatrixOver<R>& a, const MatrixOver<R>& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product shape mismatch");
  auto c = zeros(ring, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (ring.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = ring.add(c(i, j), ring.mul(aik, b(k, j)));
    }
  return c;
}

template <class R>
MatrixOver<R> add(const R& ring, const MatrixOver<R>& a, const MatrixOver<R>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix sum shape mismatch");
  auto c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = ring.add(a(i, j), b(i, j));
  return c;
}

template <class R>
MatrixOver<R> sub(const R& ring, const MatrixOver<R>& a, const MatrixOver<R>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix difference shape mismatch");
  auto c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = ring.sub(a(i, j), b(i, j));
  return c;
}

template <class R>
MatrixOver<R> scale(const R& ring, const typename R::Element& s, const MatrixOver<R>& a) {
  auto c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = ring.mul(s, a(i, j));
  return c;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  std::vector<T> d;
  d.reserve(a.rows() * a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) d.push_back(a(i, j));
  return Matrix<T>(a.cols(), a.rows(), std::move(d));
}

/// a * v for a column vector v.
template <class R>
Vector<R> apply(const R& ring, const MatrixOver<R>& a, const Vector<R>& v) {
  if (a.cols() != v.size()) throw ShapeError("matrix-vector shape mismatch");
  Vector<R> out(a.rows(), ring.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!ring.is_zero(v[j])) out[i] = ring.add(out[i], ring.mul(a(i, j), v[j]));
  return out;
}

template <class T>
std::vector<T> column(const Matrix<T>& a, std::size_t j) {
  std::vector<T> c;
  c.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) c.push_back(a(i, j));
  return c;
}

template <class T>
Matrix<T> from_columns(std::size_t rows, const std::vector<std::vector<T>>& cols) {
  std::vector<T> d(rows * cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw ShapeError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) d[i * cols.size() + j] = cols[j][i];
  }
  return Matrix<T>(rows, cols.size(), std::move(d));
}

template <class T>
Matrix<T> from_rows(std::size_t cols, const std::vector<std::vector<T>>& rows) {
  std::vector<T> d;
  d.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw ShapeError("row length mismatch");
    d.insert(d.end(), r.begin(), r.end());
  }
  return Matrix<T>(rows.size(), cols, std::move(d));
}

/// [a | b]
template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw ShapeError("hstack row mismatch");
  std::vector<T> d;
  d.reserve(a.rows() * (a.cols() + b.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    d.insert(d.end(), a.row(i).begin(), a.row(i).end());
    d.insert(d.end(), b.row(i).begin(), b.row(i).end());
  }
  return Matrix<T>(a.rows(), a.cols() + b.cols(), std::move(d));
}

template <class R>
MatrixOver<R> block_diag(const R& ring, const MatrixOver<R>& a, const MatrixOver<R>& b) {
  auto c = zeros(ring, a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  return c;
}

/// Kronecker product; kron(a, b)[(i,k),(j,l)] = a(i,j) b(k,l).
template <class R>
MatrixOver<R> kron(const R& ring, const MatrixOver<R>& a, const MatrixOver<R>& b) {
  auto c = zeros(ring, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (ring.is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = ring.mul(a(i, j), b(k, l));
    }
  return c;
}

template <class R>
typename R::Element trace(const R& ring, const MatrixOver<R>& a) {
  auto t = ring.zero();
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t = ring.add(t, a(i, i));
  return t;
}

template <class R>
bool is_identity(const R& ring, const MatrixOver<R>& a) {
  if (!a.square()) return false;
  const auto one = ring.one();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!ring.equal(a(i, j), i == j ? one : ring.zero())) return false;
  return true;
}

template <class R>
bool equal(const R& ring, const MatrixOver<R>& a, const MatrixOver<R>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!ring.equal(a(i, j), b(i, j))) return false;
  return true;
}

/// Entrywise conversion, e.g. between a ring and its residue field.
template <class U, class T, class Fn>
Matrix<U> map(const Matrix<T>& a, Fn&& fn) {
  std::vector<U> d;
  d.reserve(a.rows() * a.cols());
  for (const auto& v : a.data()) d.push_back(fn(v));
  return Matrix<U>(a.rows(), a.cols(), std::move(d));
}

template <class R>
std::vector<std::vector<std::string>> format(const R& ring, const MatrixOver<R>& a) {
  std::vector<std::vector<std::string>> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i].push_back(ring.format(a(i, j)));
  return out;
}

template <class R>
MatrixOver<R> parse(const R& ring, const std::vector<std::vector<std::string>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<typename R::Element> d;
  for (const auto& r : rows) {
    if (r.size() != cols) throw ShapeError("ragged matrix rows");
    for (const auto& s : r) d.push_back(ring.parse(s));
  }
  return MatrixOver<R>(rows.size(), cols, std::move(d));
}

}  // namespace mat
}  // namespace irredcert
