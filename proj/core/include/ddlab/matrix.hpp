#pragma once

#include "ddlab/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ddlab {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix from_columns(std::size_t rows, std::span<const Vector> columns);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  std::vector<Scalar> row(std::size_t r) const;

  bool is_zero() const;
  /// Index of the first nonzero column, if any.
  std::optional<std::size_t> first_nonzero_column() const;

  Matrix transpose() const;
  Matrix conj() const;
  /// Columns [first, first + count).
  Matrix columns(std::size_t first, std::size_t count) const;
  Matrix select_columns(std::span<const std::size_t> which) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// [a | b], same row count.
Matrix hstack(const Matrix& a, const Matrix& b);
/// [a ; b], same column count.
Matrix vstack(const Matrix& a, const Matrix& b);
/// Block-diagonal diag(a, b).
Matrix block_diag(const Matrix& a, const Matrix& b);

bool is_zero(const Vector& v);

struct RowEchelon {
  Matrix reduced;                    // reduced row-echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Gauss-Jordan elimination to reduced row-echelon form.
RowEchelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Unique reduced column-echelon form spanning the column space of `m`,
/// with zero columns dropped: the result has full column rank.
Matrix column_echelon(const Matrix& m);

/// Some x with m x = target, or nullopt when the system is inconsistent.
std::optional<Vector> lift(const Matrix& m, const Vector& target);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace ddlab
