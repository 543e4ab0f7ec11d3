#include "magnus/linalg.hpp"

#include <string>
#include <utility>

#include "magnus/errors.hpp"

namespace magnus {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field),
      rows_(rows),
      cols_(cols),
      data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_ || a.field_ != b.field_) {
    throw FieldMismatch("matrix product of incompatible operands");
  }
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.data_ == b.data_;
}

RowEchelon row_reduce(Matrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        std::swap(m(pivot, c), m(row, c));
      }
    }
    const Scalar scale = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= scale;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(r, c) -= factor * m(row, c);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  if (n == 0) return m;
  Matrix augmented(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = m(i, j);
    augmented(i, n + i) = Scalar::one(m.field());
  }
  RowEchelon e = row_reduce(std::move(augmented));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  }
  return inv;
}

LinearMap::LinearMap(Matrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_square()) {
    throw DomainError("linear map matrix must be square");
  }
  inverse_ = magnus::inverse(matrix_);
}

LinearMap LinearMap::identity(Field field, std::size_t n) {
  return LinearMap(Matrix::identity(field, n));
}

NcPoly LinearMap::image_of_variable(Letter i) const {
  const std::size_t n = dimension();
  NcPoly form(matrix_.field(), n);
  for (std::size_t r = 0; r < n; ++r) {
    form.add_term(Word{static_cast<Letter>(r + 1)}, matrix_(i - 1, r));
  }
  return form;
}

NcPoly apply_linear_map(const LinearMap& map, const NcPoly& p) {
  if (map.dimension() != p.num_vars()) {
    throw DomainError("linear map of dimension " +
                      std::to_string(map.dimension()) +
                      " applied to a polynomial in " +
                      std::to_string(p.num_vars()) + " variables");
  }
  if (p.is_zero()) return p;
  std::vector<NcPoly> forms;
  forms.reserve(map.dimension());
  for (std::size_t i = 1; i <= map.dimension(); ++i) {
    forms.push_back(map.image_of_variable(static_cast<Letter>(i)));
  }
  return substitute(p, forms);
}

}  // namespace magnus
