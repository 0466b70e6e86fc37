#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellcode/matrix.hpp"

namespace ellcode {

/// Linear code given by a row-reduced full-rank generator matrix.
class LinearCode {
 public:
  /// Row-reduces `rows`; dependent rows are dropped.
  static LinearCode from_matrix(const Matrix& rows, std::string provenance = {});
  static LinearCode from_rows(const Field& F, const std::vector<std::vector<Fe>>& rows, std::size_t n = 0,
                              std::string provenance = {});

  const Field& field() const noexcept { return generator_.field(); }
  std::size_t length() const noexcept { return generator_.cols(); }
  std::size_t dimension() const noexcept { return generator_.rows(); }
  const Matrix& generator() const noexcept { return generator_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  const std::string& provenance() const noexcept { return provenance_; }
  void set_provenance(std::string p) { provenance_ = std::move(p); }

  Matrix parity_check() const;
  bool contains(const std::vector<Fe>& word) const;
  /// Same row space.
  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.field() == b.field() && a.generator_ == b.generator_;
  }

 private:
  explicit LinearCode(Matrix g, std::vector<std::size_t> pivots, std::string provenance)
      : generator_(std::move(g)), pivots_(std::move(pivots)), provenance_(std::move(provenance)) {}
  Matrix generator_;
  std::vector<std::size_t> pivots_;
  std::string provenance_;
};

LinearCode dual(const LinearCode& C);

/// Maps GF(p^d) into GF(p^m) for d | m.
struct SubfieldEmbedding {
  Field small, large;
  std::vector<Fe> image;  // indexed by small.index()
  Fe embed(const Fe& a) const;
  /// Inverse of embed; throws FieldMismatch outside the image.
  Fe restrict(const Fe& a) const;
};

SubfieldEmbedding subfield_embedding(const Field& large, unsigned d);

/// Rows over GF(p^d) cutting out {c in GF(p^d)^n : H c = 0}; H itself when d = m.
Matrix subfield_expansion(const Matrix& H, unsigned d);
/// C intersected with GF(p^d)^n, as a code over GF(p^d).
LinearCode subfield_subcode(const LinearCode& C, unsigned d);
/// The same code viewed over the larger field.
LinearCode extend_scalars(const LinearCode& C, const SubfieldEmbedding& emb);

/// Simultaneous right cyclic shift of each length-ell block.
std::vector<Fe> block_shift(const std::vector<Fe>& word, std::size_t ell);
bool is_quasi_cyclic(const LinearCode& C, std::size_t ell);

struct BlockCirculant {
  bool ok = false;
  /// Rows in groups of ell, each group (r, shift(r), ...); columns reordered by the grouping.
  std::optional<Matrix> matrix;
  /// A shifted row that left the code, when ok is false.
  std::vector<Fe> witness;
};

/// `grouping` lists the column indices of each block, in block order.
BlockCirculant block_circulant_form(const LinearCode& C, std::size_t ell,
                                    const std::vector<std::vector<std::size_t>>& grouping);
bool is_block_circulant(const Matrix& M, std::size_t ell);

LinearCode schur_square(const LinearCode& C);

/// Desk-scale cap on q^k for the exhaustive sweep.
inline constexpr std::uint64_t kMaxCodewords = std::uint64_t{1} << 22;
std::size_t min_distance_exhaustive(const LinearCode& C);

}  // namespace ellcode
