#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nilform/errors.hpp"
#include "nilform/numeric.hpp"

namespace nilform {

// Dense row-major matrix over arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
    e_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    IntMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != c)
        throw DimensionMismatch("ragged row list");
      int j = 0;
      for (long v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& operator()(int i, int j) { return e_[idx(i, j)]; }
  const Int& operator()(int i, int j) const { return e_[idx(i, j)]; }

  bool is_zero() const {
    for (const Int& x : e_)
      if (x != 0) return false;
    return true;
  }

  bool is_square() const { return rows_ == cols_; }

  bool is_skew() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j <= i; ++j)
        if (e_[idx(i, j)] != -e_[idx(j, i)]) return false;
    return true;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < cols_; ++k) std::swap(e_[idx(i, k)], e_[idx(j, k)]);
  }

  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < rows_; ++k) std::swap(e_[idx(k, i)], e_[idx(k, j)]);
  }

  void negate_row(int i) {
    for (int k = 0; k < cols_; ++k) e_[idx(i, k)] = -e_[idx(i, k)];
  }

  void negate_col(int j) {
    for (int k = 0; k < rows_; ++k) e_[idx(k, j)] = -e_[idx(k, j)];
  }

  // row[dst] += c * row[src]
  void add_row_multiple(int dst, int src, const Int& c) {
    for (int k = 0; k < cols_; ++k) e_[idx(dst, k)] += c * e_[idx(src, k)];
  }

  // col[dst] += c * col[src]
  void add_col_multiple(int dst, int src, const Int& c) {
    for (int k = 0; k < rows_; ++k) e_[idx(k, dst)] += c * e_[idx(k, src)];
  }

  std::string to_string() const {
    std::ostringstream out;
    out << '[';
    for (int i = 0; i < rows_; ++i) {
      if (i > 0) out << ',';
      out << '[';
      for (int j = 0; j < cols_; ++j) {
        if (j > 0) out << ',';
        out << (*this)(i, j);
      }
      out << ']';
    }
    out << ']';
    return out.str();
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> e_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatch("matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix sum shape mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

inline IntMatrix operator*(const Int& c, const IntMatrix& a) {
  IntMatrix s(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s(i, j) = c * a(i, j);
  return s;
}

// Skew-symmetric square matrix; construction validates the invariant.
class SkewIntMatrix {
 public:
  SkewIntMatrix() = default;
  explicit SkewIntMatrix(int n) : m_(n, n) {}

  explicit SkewIntMatrix(IntMatrix m) : m_(std::move(m)) {
    if (!m_.is_skew()) throw NotSkew("matrix is not skew-symmetric");
  }

  // Sets entry (i, j) together with its mirror.
  static SkewIntMatrix from_upper(
      int n, std::initializer_list<std::initializer_list<long>> upper) {
    SkewIntMatrix s(n);
    for (const auto& triple : upper) {
      if (triple.size() != 3) throw DimensionMismatch("expected (i, j, value)");
      auto it = triple.begin();
      long i = *it++, j = *it++, v = *it;
      s.set(static_cast<int>(i), static_cast<int>(j), Int(v));
    }
    return s;
  }

  int size() const { return m_.rows(); }

  const Int& operator()(int i, int j) const { return m_(i, j); }

  void set(int i, int j, const Int& v) {
    if (i == j) {
      if (v != 0) throw NotSkew("nonzero diagonal entry");
      return;
    }
    m_(i, j) = v;
    m_(j, i) = -v;
  }

  const IntMatrix& matrix() const { return m_; }
  bool is_zero() const { return m_.is_zero(); }

  friend bool operator==(const SkewIntMatrix& a, const SkewIntMatrix& b) {
    return a.m_ == b.m_;
  }
  friend bool operator!=(const SkewIntMatrix& a, const SkewIntMatrix& b) {
    return !(a == b);
  }

 private:
  IntMatrix m_;
};

}  // namespace nilform
