#pragma once

#include <Eigen/Dense>

#include <initializer_list>
#include <optional>
#include <vector>

#include "gengeo/scalar.hpp"

namespace gengeo {

namespace detail {
inline Rational field_conj(const Rational& x) { return x; }
inline GaussianRational field_conj(const GaussianRational& x) { return x.conj(); }
}  // namespace detail

/// Dense matrix over an exact field (Rational or GaussianRational).
/// All eliminations are exact; there is no pivoting heuristic beyond
/// "first nonzero", which is fine for exact arithmetic.
template <typename K>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  Matrix(std::initializer_list<std::initializer_list<K>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    a_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_) throw InputError("ragged matrix initializer");
      for (const auto& v : r) a_.push_back(v);
    }
  }

  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  K& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const K& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!(v == K(0))) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix operator-() const {
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
    return r;
  }
  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const K& s, Matrix m) {
    for (auto& v : m.a_) v *= s;
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (aik == K(0)) continue;
        for (int j = 0; j < b.cols_; ++j) {
          if (b(k, j) == K(0)) continue;
          r(i, j) += aik * b(k, j);
        }
      }
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Matrix conjugate() const {
    Matrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(i, j) = detail::field_conj((*this)(i, j));
    return r;
  }

  Matrix adjoint() const { return transpose().conjugate(); }

  /// Columns `lo..hi-1`.
  Matrix cols_range(int lo, int hi) const {
    Matrix r(rows_, hi - lo);
    for (int i = 0; i < rows_; ++i)
      for (int j = lo; j < hi; ++j) r(i, j - lo) = (*this)(i, j);
    return r;
  }

  Matrix col(int j) const { return cols_range(j, j + 1); }

  Matrix block(int i0, int j0, int nrows, int ncols) const {
    Matrix r(nrows, ncols);
    for (int i = 0; i < nrows; ++i)
      for (int j = 0; j < ncols; ++j) r(i, j) = (*this)(i0 + i, j0 + j);
    return r;
  }

  /// Rows/columns picked by index lists (used to restrict operators to a
  /// graded block of the exterior algebra).
  Matrix select(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
    Matrix r(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (int i = 0; i < r.rows_; ++i)
      for (int j = 0; j < r.cols_; ++j) r(i, j) = (*this)(row_idx[i], col_idx[j]);
    return r;
  }

  friend Matrix hcat(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw InputError("hcat row mismatch");
    Matrix r(a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
      for (int j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
    }
    return r;
  }

  friend Matrix vcat(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) throw InputError("vcat column mismatch");
    Matrix r(a.rows_ + b.rows_, a.cols_);
    for (int j = 0; j < a.cols_; ++j) {
      for (int i = 0; i < a.rows_; ++i) r(i, j) = a(i, j);
      for (int i = 0; i < b.rows_; ++i) r(a.rows_ + i, j) = b(i, j);
    }
    return r;
  }

  int rank() const {
    Matrix m = *this;
    return m.echelonize();
  }

  /// Basis of the right kernel, one column per basis vector.
  Matrix kernel_basis() const {
    Matrix m = *this;
    std::vector<int> pivot_col;
    m.rref(&pivot_col);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < cols_; ++j)
      if (!is_pivot[j]) free_cols.push_back(j);
    Matrix k(cols_, static_cast<int>(free_cols.size()));
    for (int f = 0; f < static_cast<int>(free_cols.size()); ++f) {
      int fc = free_cols[f];
      k(fc, f) = K(1);
      for (int p = 0; p < static_cast<int>(pivot_col.size()); ++p)
        k(pivot_col[p], f) = -m(p, fc);
    }
    return k;
  }

  /// Any solution X of (*this) * X = rhs, or nullopt when inconsistent.
  std::optional<Matrix> solve(const Matrix& rhs) const {
    if (rhs.rows_ != rows_) throw InputError("solve shape mismatch");
    Matrix aug = hcat(*this, rhs);
    std::vector<int> pivot_col;
    aug.rref(&pivot_col);
    for (int p = 0; p < static_cast<int>(pivot_col.size()); ++p)
      if (pivot_col[p] >= cols_) return std::nullopt;  // pivot in rhs block
    Matrix x(cols_, rhs.cols_);
    for (int p = 0; p < static_cast<int>(pivot_col.size()); ++p)
      for (int j = 0; j < rhs.cols_; ++j) x(pivot_col[p], j) = aug(p, cols_ + j);
    return x;
  }

  std::optional<Matrix> inverse() const {
    if (rows_ != cols_) throw InputError("inverse of non-square matrix");
    auto x = solve(identity(rows_));
    if (!x) return std::nullopt;
    if (rank() != rows_) return std::nullopt;
    return x;
  }

  K det() const {
    if (rows_ != cols_) throw InputError("determinant of non-square matrix");
    Matrix m = *this;
    K d(1);
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
      int piv = -1;
      for (int i = row; i < rows_; ++i)
        if (!(m(i, col) == K(0))) {
          piv = i;
          break;
        }
      if (piv < 0) return K(0);
      if (piv != row) {
        m.swap_rows(piv, row);
        d = -d;
      }
      d *= m(row, col);
      K inv = K(1) / m(row, col);
      for (int i = row + 1; i < rows_; ++i) {
        if (m(i, col) == K(0)) continue;
        K f = m(i, col) * inv;
        for (int j = col; j < cols_; ++j) m(i, j) -= f * m(row, j);
      }
      ++row;
    }
    return row == rows_ ? d : K(0);
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shape mismatch");
  }
  void swap_rows(int a, int b) {
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  /// Forward elimination; returns rank. Destroys *this.
  int echelonize() {
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
      int piv = -1;
      for (int i = row; i < rows_; ++i)
        if (!((*this)(i, col) == K(0))) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      if (piv != row) swap_rows(piv, row);
      K inv = K(1) / (*this)(row, col);
      for (int i = row + 1; i < rows_; ++i) {
        if ((*this)(i, col) == K(0)) continue;
        K f = (*this)(i, col) * inv;
        for (int j = col; j < cols_; ++j) (*this)(i, j) -= f * (*this)(row, j);
      }
      ++row;
    }
    return row;
  }

  /// Reduced row echelon form; records pivot columns. Destroys *this.
  void rref(std::vector<int>* pivot_cols) {
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
      int piv = -1;
      for (int i = row; i < rows_; ++i)
        if (!((*this)(i, col) == K(0))) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      if (piv != row) swap_rows(piv, row);
      K inv = K(1) / (*this)(row, col);
      for (int j = col; j < cols_; ++j) (*this)(row, j) *= inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == row || (*this)(i, col) == K(0)) continue;
        K f = (*this)(i, col);
        for (int j = col; j < cols_; ++j) (*this)(i, j) -= f * (*this)(row, j);
      }
      pivot_cols->push_back(col);
      ++row;
    }
  }

  int rows_, cols_;
  std::vector<K> a_;
};

using QMatrix = Matrix<Rational>;
using GMatrix = Matrix<GaussianRational>;

inline GMatrix complexify(const QMatrix& m) {
  GMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = GaussianRational(m(i, j));
  return r;
}

inline Eigen::MatrixXcd to_eigen(const GMatrix& m) {
  Eigen::MatrixXcd r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).to_complex();
  return r;
}

inline Eigen::MatrixXd to_eigen(const QMatrix& m) {
  Eigen::MatrixXd r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).get_d();
  return r;
}

/// rank([A | v]) == rank(A), i.e. every column of v lies in the column span.
template <typename K>
bool span_contains(const Matrix<K>& a, const Matrix<K>& v) {
  return hcat(a, v).rank() == a.rank();
}

/// Column spans coincide.
template <typename K>
bool same_span(const Matrix<K>& a, const Matrix<K>& b) {
  int ra = a.rank(), rb = b.rank();
  return ra == rb && hcat(a, b).rank() == ra;
}

}  // namespace gengeo
