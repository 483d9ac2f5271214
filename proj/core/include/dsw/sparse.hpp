#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dsw {

struct Triplet {
  std::size_t row;
  std::size_t col;
  double value;
};

/// Compressed sparse row matrix used to assemble the elliptic operators.
/// Column indices within a row are sorted and unique.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols, std::span<const Triplet> triplets);

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix diagonal(std::span<const double> d);
  static SparseMatrix from_dense(std::size_t rows, std::size_t cols, std::span<const double> row_major,
                                 double drop_tolerance = 0.0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const noexcept { return values_.size(); }

  double coeff(std::size_t i, std::size_t j) const;
  void multiply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> operator*(std::span<const double> x) const;

  SparseMatrix transpose() const;
  /// diag(d) * A
  SparseMatrix scale_rows(std::span<const double> d) const;
  /// A * diag(d)
  SparseMatrix scale_cols(std::span<const double> d) const;
  /// A + diag(d); reuses the sparsity pattern when the diagonal is already stored.
  SparseMatrix plus_diagonal(std::span<const double> d) const;
  /// Replace the listed rows by rows of the identity.
  SparseMatrix with_identity_rows(std::span<const std::size_t> rows) const;
  std::vector<double> to_dense() const;
  double max_abs() const noexcept;

  std::span<const std::size_t> row_offsets() const noexcept { return row_ptr_; }
  std::span<const std::size_t> col_indices() const noexcept { return col_idx_; }
  std::span<const double> values() const noexcept { return values_; }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  /// alpha * a + beta * b
  friend SparseMatrix add(double alpha, const SparseMatrix& a, double beta, const SparseMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<std::size_t> col_idx_;
  std::vector<double> values_;
};

}  // namespace dsw
