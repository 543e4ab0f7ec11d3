#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "magnus/poly.hpp"
#include "magnus/scalar.hpp"

namespace magnus {

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  Matrix reduced;                  // reduced row-echelon form
  std::vector<std::size_t> pivots; // pivot column of each nonzero row
  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan elimination with the leftmost available pivot.
RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
/// Nullopt when singular or not square.
std::optional<Matrix> inverse(const Matrix& m);

/// Linear change of variables on N letters: variable i is sent to
/// sum_r matrix(i-1, r-1) * (variable r).
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(Matrix matrix);

  static LinearMap identity(Field field, std::size_t n);

  std::size_t dimension() const noexcept { return matrix_.rows(); }
  const Matrix& matrix() const noexcept { return matrix_; }
  bool is_invertible() const noexcept { return inverse_.has_value(); }
  /// Cached inverse, exact; nullopt when singular.
  const std::optional<Matrix>& inverse() const noexcept { return inverse_; }

  /// Image of variable i, a linear form.
  NcPoly image_of_variable(Letter i) const;

 private:
  Matrix matrix_;
  std::optional<Matrix> inverse_;
};

/// Substitutes each variable by its linear form and expands. Degrees are
/// preserved. Throws DomainError on a dimension mismatch.
NcPoly apply_linear_map(const LinearMap& map, const NcPoly& p);

}  // namespace magnus
