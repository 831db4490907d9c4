#pragma once

#include <cassert>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "trackwork/ints.hpp"

namespace trackwork {

/// Dense integer matrix with exact arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
  }
  IntMatrix(int rows, int cols, std::initializer_list<long> vals) : IntMatrix(rows, cols) {
    assert(static_cast<int>(vals.size()) == rows * cols);
    int k = 0;
    for (long v : vals) a_[k++] = v;
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const Int& v : a_)
      if (v != 0) return false;
    return true;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Int& v = (*this)(i, k);
        if (v == 0) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
      }
    return r;
  }

  IntMatrix operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("IntMatrix: shape mismatch in sum");
    IntMatrix r = *this;
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
    return r;
  }

  IntMatrix operator-() const {
    IntMatrix r = *this;
    for (Int& v : r.a_) v = -v;
    return r;
  }
  IntMatrix operator-(const IntMatrix& o) const { return *this + (-o); }

  IntMatrix transpose() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  std::vector<Int> apply(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("IntMatrix: vector size");
    std::vector<Int> y(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  IntMatrix column(int j) const {
    IntMatrix c(rows_, 1);
    for (int i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }

  // columns of `o` appended on the right
  IntMatrix hcat(const IntMatrix& o) const {
    if (o.rows_ != rows_ && o.cols_ != 0 && cols_ != 0)
      throw std::invalid_argument("IntMatrix: hcat row mismatch");
    int rr = rows_ == 0 && cols_ == 0 ? o.rows_ : rows_;
    IntMatrix r(rr, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (int i = 0; i < o.rows_; ++i)
      for (int j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
    return r;
  }

  void swap_rows(int i, int j) {
    for (int k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }
  void swap_cols(int i, int j) {
    for (int k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
  }
  // row i += f * row j
  void add_row(int i, int j, const Int& f) {
    for (int k = 0; k < cols_; ++k) (*this)(i, k) += f * (*this)(j, k);
  }
  // col i += f * col j
  void add_col(int i, int j, const Int& f) {
    for (int k = 0; k < rows_; ++k) (*this)(k, i) += f * (*this)(k, j);
  }
  void negate_row(int i) {
    for (int k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
  }
  void negate_col(int j) {
    for (int k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
  }

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << "[";
    for (int i = 0; i < m.rows_; ++i) {
      os << (i ? "; " : "");
      for (int j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
    }
    return os << "]";
  }

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

}  // namespace trackwork
