#pragma once

// Dense exact linear algebra over a Scalar field: echelon forms, kernels,
// inverses and span comparisons.

#include <cstddef>
#include <vector>

#include "e6kit/error.hpp"
#include "e6kit/scalar.hpp"

namespace e6kit {

using Vec = std::vector<Scalar>;

inline Vec zero_vec(const FieldSpec& field, std::size_t n) { return Vec(n, Scalar::zero(field)); }

inline Vec unit_vec(const FieldSpec& field, std::size_t n, std::size_t i) {
  Vec v = zero_vec(field, n);
  v[i] = Scalar::one(field);
  return v;
}

inline void require_same_size(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorCode::AlgebraMismatch, "vector lengths differ");
}

inline Vec operator+(Vec a, const Vec& b) {
  require_same_size(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vec operator-(Vec a, const Vec& b) {
  require_same_size(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vec operator-(Vec a) {
  for (auto& x : a) x = -x;
  return a;
}

inline Vec operator*(const Scalar& s, Vec a) {
  for (auto& x : a) x *= s;
  return a;
}

inline bool is_zero(const Vec& a) {
  for (const auto& x : a) {
    if (!x.is_zero()) return false;
  }
  return true;
}

/// a += s * b
inline void axpy(Vec& a, const Scalar& s, const Vec& b) {
  require_same_size(a, b);
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!b[i].is_zero()) a[i] += s * b[i];
  }
}

inline std::string to_string(const Vec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].to_string();
  }
  return out + "]";
}

class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

  static Matrix identity(const FieldSpec& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
  }

  /// Matrix whose j-th column is cols[j].
  static Matrix from_columns(const FieldSpec& field, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) fail(ErrorCode::InvalidArgument, "column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static Matrix from_rows(const FieldSpec& field, std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) fail(ErrorCode::InvalidArgument, "row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec column(std::size_t j) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  std::vector<Vec> columns() const {
    std::vector<Vec> out;
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
  }

  Vec apply(const Vec& x) const {
    if (x.size() != cols_) fail(ErrorCode::CarrierMismatch, "matrix/vector size mismatch");
    Vec y = zero_vec(field_, rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (x[j].is_zero()) continue;
      for (std::size_t i = 0; i < rows_; ++i) {
        const Scalar& a = (*this)(i, j);
        if (!a.is_zero()) y[i] += a * x[j];
      }
    }
    return y;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::CarrierMismatch, "matrix product size mismatch");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Scalar& bkj = b(k, j);
          if (!bkj.is_zero()) c(i, j) += aik * bkj;
        }
      }
    }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const Scalar& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_identity() const { return is_square() && *this == identity(field_, rows_); }

  /// In-place reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t pivot = rows_;
      for (std::size_t i = r; i < rows_; ++i) {
        if (!(*this)(i, c).is_zero()) {
          pivot = i;
          break;
        }
      }
      if (pivot == rows_) continue;
      swap_rows(pivot, r);
      Scalar inv = (*this)(r, c).inverse();
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        Scalar f = (*this)(i, c);
        if (f.is_zero()) continue;
        for (std::size_t j = c; j < cols_; ++j) {
          if (!(*this)(r, j).is_zero()) (*this)(i, j) -= f * (*this)(r, j);
        }
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref().size();
  }

  /// Basis of {x : Mx = 0}.
  std::vector<Vec> kernel() const {
    Matrix m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      Vec v = zero_vec(field_, cols_);
      v[free] = Scalar::one(field_);
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  Scalar det() const {
    if (!is_square()) fail(ErrorCode::InvalidArgument, "determinant of non-square matrix");
    Matrix m = *this;
    Scalar d = Scalar::one(field_);
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t pivot = rows_;
      for (std::size_t i = c; i < rows_; ++i) {
        if (!m(i, c).is_zero()) {
          pivot = i;
          break;
        }
      }
      if (pivot == rows_) return Scalar::zero(field_);
      if (pivot != c) {
        m.swap_rows(pivot, c);
        d = -d;
      }
      d *= m(c, c);
      Scalar inv = m(c, c).inverse();
      for (std::size_t i = c + 1; i < rows_; ++i) {
        Scalar f = m(i, c) * inv;
        if (f.is_zero()) continue;
        for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
      }
    }
    return d;
  }

  Matrix inverse() const {
    if (!is_square()) fail(ErrorCode::SingularMatrix, "inverse of non-square matrix");
    const std::size_t n = rows_;
    Matrix aug(field_, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = Scalar::one(field_);
    }
    auto pivots = aug.rref();
    if (pivots.size() < n || pivots[n - 1] != n - 1) fail(ErrorCode::SingularMatrix, "matrix is singular");
    Matrix inv(field_, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
  }

  /// Solves this * X = rhs for square invertible this.
  Matrix solve(const Matrix& rhs) const {
    if (!is_square() || rhs.rows_ != rows_) fail(ErrorCode::InvalidArgument, "solve shape mismatch");
    const std::size_t n = rows_;
    Matrix aug(field_, n, n + rhs.cols_);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < rhs.cols_; ++j) aug(i, n + j) = rhs(i, j);
    }
    auto pivots = aug.rref();
    if (pivots.size() < n || pivots[n - 1] != n - 1) fail(ErrorCode::SingularMatrix, "matrix is singular");
    Matrix x(field_, n, rhs.cols_);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < rhs.cols_; ++j) x(i, j) = aug(i, n + j);
    return x;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
      out += "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out += ",";
        out += (*this)(i, j).to_string();
      }
      out += "]\n";
    }
    return out;
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void check_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) fail(ErrorCode::CarrierMismatch, "matrix shape mismatch");
  }

  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Dimension of the span of `vectors` (all of length n).
inline std::size_t span_rank(const FieldSpec& field, std::size_t n, const std::vector<Vec>& vectors) {
  if (vectors.empty()) return 0;
  return Matrix::from_rows(field, n, vectors).rank();
}

/// Reduced basis of span(vectors).
inline std::vector<Vec> span_basis(const FieldSpec& field, std::size_t n, const std::vector<Vec>& vectors) {
  if (vectors.empty()) return {};
  Matrix m = Matrix::from_rows(field, n, vectors);
  auto pivots = m.rref();
  std::vector<Vec> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    Vec row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(m(r, j));
    out.push_back(std::move(row));
  }
  return out;
}

/// Incremental membership test against a fixed subspace.
class SpanChecker {
 public:
  SpanChecker(const FieldSpec& field, std::size_t n, const std::vector<Vec>& basis)
      : field_(field), n_(n), rows_(span_basis(field, n, basis)) {
    for (const auto& row : rows_) {
      std::size_t p = 0;
      while (p < n_ && row[p].is_zero()) ++p;
      pivots_.push_back(p);
    }
  }

  std::size_t dimension() const { return rows_.size(); }

  bool contains(Vec v) const {
    if (v.size() != n_) fail(ErrorCode::CarrierMismatch, "vector length mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar& c = v[pivots_[r]];
      if (!c.is_zero()) axpy(v, -c, rows_[r]);
    }
    return is_zero(v);
  }

 private:
  FieldSpec field_;
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

inline bool same_span(const FieldSpec& field, std::size_t n, const std::vector<Vec>& a, const std::vector<Vec>& b) {
  SpanChecker ca(field, n, a);
  SpanChecker cb(field, n, b);
  if (ca.dimension() != cb.dimension()) return false;
  for (const auto& v : b) {
    if (!ca.contains(v)) return false;
  }
  return true;
}

}  // namespace e6kit
