#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ellcode/field.hpp"

namespace ellcode {

/// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix(Field F, std::size_t rows, std::size_t cols);
  /// Throws RaggedRows on inconsistent lengths; `cols` is used when rows is empty.
  static Matrix from_rows(Field F, const std::vector<std::vector<Fe>>& rows, std::size_t cols = 0);
  static Matrix identity(Field F, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Fe& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Fe& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<Fe> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Fe> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<Fe> row_vector(std::size_t i) const;

  Matrix transpose() const;
  Matrix select_columns(const std::vector<std::size_t>& cols) const;
  Matrix select_rows(const std::vector<std::size_t>& rows) const;
  /// Rows of *this followed by rows of other.
  Matrix stack(const Matrix& other) const;
  Matrix multiply(const Matrix& other) const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Fe> data_;
};

/// Reduced row echelon form with zero rows dropped.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};

Echelon row_reduce(const Matrix& M);
std::size_t rank(const Matrix& M);
/// Basis (as rows) of {v : M v = 0}.
Matrix nullspace(const Matrix& M);
/// Some x with A x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Fe>> solve(const Matrix& A, const std::vector<Fe>& b);
/// True iff every row of B lies in the row space of A.
bool row_space_contains(const Matrix& A, const Matrix& B);
bool same_row_space(const Matrix& A, const Matrix& B);

}  // namespace ellcode
