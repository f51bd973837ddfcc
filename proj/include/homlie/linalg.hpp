#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "homlie/scalar.hpp"

namespace homlie {

/// Dense row-major matrix of exact scalars over a single field.
class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix.
  Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field);

  static Matrix identity(std::size_t n, const FieldSpec& field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldSpec& field() const noexcept { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldSpec field_;
  std::vector<Scalar> data_;
};

struct EchelonForm {
  Matrix reduced;
  /// Pivot column of each nonzero row, increasing.
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. The pivot for each column is the first remaining
/// row with a nonzero entry; pivot rows are normalized to 1.
EchelonForm reduced_row_echelon(Matrix m);

std::size_t rank(const Matrix& m);

/// Canonical nullspace basis read off the reduced row-echelon form: one
/// vector per free column (that coordinate 1, other free coordinates 0,
/// pivot coordinates back-solved), in increasing free-column order.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m);

/// Fraction-free Bareiss determinant. Rational input is lifted to an integer
/// matrix by clearing each row's denominators first. Throws Error{shape} on a
/// non-square matrix.
Scalar determinant(const Matrix& m);

Matrix multiply(const Matrix& a, const Matrix& b);
std::vector<Scalar> apply(const Matrix& a, std::span<const Scalar> x);
std::optional<Matrix> inverse(const Matrix& a);

/// Column subset in the given order.
Matrix select_columns(const Matrix& m, std::span<const std::size_t> columns);

}  // namespace homlie
