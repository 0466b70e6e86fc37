#include "ellcode/matrix.hpp"

#include "ellcode/error.hpp"
#include "ellcode/kernels.hpp"

namespace ellcode {

namespace {
constexpr const char* kModule = "codes";
}

Matrix::Matrix(Field F, std::size_t rows, std::size_t cols)
    : field_(std::move(F)), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::from_rows(Field F, const std::vector<std::vector<Fe>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix M(std::move(F), rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::RaggedRows, kModule, "rows have different lengths");
    for (std::size_t j = 0; j < cols; ++j) {
      M.field_.check(rows[i][j]);
      M.at(i, j) = rows[i][j];
    }
  }
  return M;
}

Matrix Matrix::identity(Field F, std::size_t n) {
  Matrix M(F, n, n);
  for (std::size_t i = 0; i < n; ++i) M.at(i, i) = F.one();
  return M;
}

std::vector<Fe> Matrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return {r.begin(), r.end()};
}

Matrix Matrix::transpose() const {
  Matrix T(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) T.at(j, i) = at(i, j);
  return T;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix S(field_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) S.at(i, j) = at(i, cols[j]);
  return S;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
  Matrix S(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    std::copy(row(rows[i]).begin(), row(rows[i]).end(), S.row(i).begin());
  return S;
}

Matrix Matrix::stack(const Matrix& other) const {
  if (!(field_ == other.field_)) throw Error(ErrorKind::FieldMismatch, kModule, "stacking matrices over different fields");
  if (cols_ != other.cols_ && rows_ && other.rows_)
    throw Error(ErrorKind::RaggedRows, kModule, "stacking matrices with different widths");
  const std::size_t c = rows_ ? cols_ : other.cols_;
  Matrix S(field_, rows_ + other.rows_, c);
  std::copy(data_.begin(), data_.end(), S.data_.begin());
  std::copy(other.data_.begin(), other.data_.end(), S.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return S;
}

Matrix Matrix::multiply(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorKind::RaggedRows, kModule, "inner dimensions differ");
  Matrix P(field_, rows_, o.cols_);
  const Field& F = field_;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Fe& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) P.at(i, j) = F.add(P.at(i, j), F.mul(a, o.at(k, j)));
    }
  return P;
}

bool Matrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

Echelon row_reduce(const Matrix& M) { return kernels::rref(M); }

std::size_t rank(const Matrix& M) { return row_reduce(M).rank(); }

Matrix nullspace(const Matrix& M) {
  const Field& F = M.field();
  const Echelon E = row_reduce(M);
  std::vector<bool> is_pivot(M.cols(), false);
  for (auto c : E.pivots) is_pivot[c] = true;
  std::vector<std::vector<Fe>> basis;
  for (std::size_t f = 0; f < M.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Fe> v(M.cols());
    v[f] = F.one();
    for (std::size_t i = 0; i < E.pivots.size(); ++i) v[E.pivots[i]] = F.neg(E.reduced.at(i, f));
    basis.push_back(std::move(v));
  }
  return Matrix::from_rows(F, basis, M.cols());
}

std::optional<std::vector<Fe>> solve(const Matrix& A, const std::vector<Fe>& b) {
  if (b.size() != A.rows()) throw Error(ErrorKind::RaggedRows, kModule, "right-hand side length differs from row count");
  const Field& F = A.field();
  Matrix Aug(F, A.rows(), A.cols() + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) Aug.at(i, j) = A.at(i, j);
    Aug.at(i, A.cols()) = b[i];
  }
  const Echelon E = row_reduce(Aug);
  std::vector<Fe> x(A.cols());
  for (std::size_t i = 0; i < E.pivots.size(); ++i) {
    if (E.pivots[i] == A.cols()) return std::nullopt;
    x[E.pivots[i]] = E.reduced.at(i, A.cols());
  }
  return x;
}

bool row_space_contains(const Matrix& A, const Matrix& B) {
  if (B.rows() == 0) return true;
  return rank(A) == rank(A.stack(B));
}

bool same_row_space(const Matrix& A, const Matrix& B) {
  const std::size_t ra = rank(A), rb = rank(B);
  if (ra != rb) return false;
  if (A.rows() == 0 || B.rows() == 0) return ra == 0;
  return rank(A.stack(B)) == ra;
}

}  // namespace ellcode
