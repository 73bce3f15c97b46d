// Dense exact linear algebra over a FieldTag.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dglevel/field.hpp"

namespace dgl {

using Vector = std::vector<Scalar>;

Vector zero_vector(FieldTag f, std::size_t n);
bool is_zero(const Vector& v);

class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldTag field, std::size_t rows, std::size_t cols);
  static Matrix identity(FieldTag field, std::size_t n);
  /// Matrix whose columns are the given vectors, each of length `rows`.
  static Matrix from_columns(FieldTag field, std::size_t rows, const std::vector<Vector>& columns);

  FieldTag field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector apply(const Vector& v) const;
  Vector column(std::size_t c) const;
  Matrix operator*(const Matrix& o) const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  FieldTag field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form: pivot entries are 1 and pivot columns are
/// otherwise zero.
struct RowEchelon {
  FieldTag field;
  std::size_t cols = 0;
  std::vector<std::size_t> pivots;
  std::vector<Vector> rows;
};

/// Gauss-Jordan elimination. Prime fields run through the vectorized row
/// kernels; the rationals use fraction-free integer elimination with
/// content normalization.
RowEchelon reduce(const Matrix& m);

struct RankKernel {
  std::size_t rank = 0;
  std::vector<Vector> kernel;
};

RankKernel rank_and_kernel(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Some x with m x = b, if the system is consistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Indices i such that the candidates[i] extend span(base) to span(base + candidates)
/// (greedy, in order). All vectors have length `dim`.
std::vector<std::size_t> complement_indices(FieldTag field, std::size_t dim, const std::vector<Vector>& base,
                                            const std::vector<Vector>& candidates);

}  // namespace dgl
