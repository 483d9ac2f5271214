#include "dsw/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dsw/errors.hpp"

namespace dsw {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::span<const Triplet> triplets)
    : rows_(rows), cols_(cols) {
  std::vector<Triplet> sorted(triplets.begin(), triplets.end());
  for (const auto& t : sorted) {
    if (t.row >= rows || t.col >= cols) {
      throw DimensionError("sparse matrix: triplet index out of range");
    }
  }
  std::sort(sorted.begin(), sorted.end(), [](const Triplet& l, const Triplet& r) {
    return l.row != r.row ? l.row < r.row : l.col < r.col;
  });
  row_ptr_.assign(rows + 1, 0);
  for (std::size_t k = 0; k < sorted.size();) {
    std::size_t end = k;
    double sum = 0.0;
    while (end < sorted.size() && sorted[end].row == sorted[k].row && sorted[end].col == sorted[k].col) {
      sum += sorted[end].value;
      ++end;
    }
    col_idx_.push_back(sorted[k].col);
    values_.push_back(sum);
    ++row_ptr_[sorted[k].row + 1];
    k = end;
  }
  for (std::size_t i = 0; i < rows; ++i) {
    row_ptr_[i + 1] += row_ptr_[i];
  }
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  std::vector<double> ones(n, 1.0);
  return diagonal(ones);
}

SparseMatrix SparseMatrix::diagonal(std::span<const double> d) {
  std::vector<Triplet> t;
  t.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    t.push_back({i, i, d[i]});
  }
  return SparseMatrix(d.size(), d.size(), t);
}

SparseMatrix SparseMatrix::from_dense(std::size_t rows, std::size_t cols,
                                      std::span<const double> row_major, double drop_tolerance) {
  if (row_major.size() != rows * cols) {
    throw DimensionError("sparse matrix: dense input has wrong size");
  }
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double v = row_major[i * cols + j];
      if (std::abs(v) > drop_tolerance) t.push_back({i, j, v});
    }
  }
  return SparseMatrix(rows, cols, t);
}

double SparseMatrix::coeff(std::size_t i, std::size_t j) const {
  const auto begin = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i]);
  const auto end = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i + 1]);
  const auto it = std::lower_bound(begin, end, j);
  if (it == end || *it != j) return 0.0;
  return values_[static_cast<std::size_t>(it - col_idx_.begin())];
}

void SparseMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  if (x.size() != cols_ || y.size() != rows_) {
    throw DimensionError("sparse matrix: multiply dimension mismatch");
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    double sum = 0.0;
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
      sum += values_[k] * x[col_idx_[k]];
    }
    y[i] = sum;
  }
}

std::vector<double> SparseMatrix::operator*(std::span<const double> x) const {
  std::vector<double> y(rows_);
  multiply(x, y);
  return y;
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<Triplet> t;
  t.reserve(values_.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
      t.push_back({col_idx_[k], i, values_[k]});
    }
  }
  return SparseMatrix(cols_, rows_, t);
}

SparseMatrix SparseMatrix::scale_rows(std::span<const double> d) const {
  if (d.size() != rows_) throw DimensionError("sparse matrix: scale_rows dimension mismatch");
  SparseMatrix out = *this;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) out.values_[k] *= d[i];
  }
  return out;
}

SparseMatrix SparseMatrix::scale_cols(std::span<const double> d) const {
  if (d.size() != cols_) throw DimensionError("sparse matrix: scale_cols dimension mismatch");
  SparseMatrix out = *this;
  for (std::size_t k = 0; k < values_.size(); ++k) out.values_[k] *= d[col_idx_[k]];
  return out;
}

SparseMatrix SparseMatrix::plus_diagonal(std::span<const double> d) const {
  if (d.size() != rows_ || rows_ != cols_) throw DimensionError("sparse matrix: plus_diagonal dimension mismatch");
  SparseMatrix out = *this;
  for (std::size_t i = 0; i < rows_; ++i) {
    const auto begin = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i]);
    const auto end = col_idx_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i + 1]);
    const auto it = std::lower_bound(begin, end, i);
    if (it == end || *it != i) return add(1.0, *this, 1.0, diagonal(d));
    out.values_[static_cast<std::size_t>(it - col_idx_.begin())] += d[i];
  }
  return out;
}

SparseMatrix SparseMatrix::with_identity_rows(std::span<const std::size_t> rows) const {
  std::vector<bool> replace(rows_, false);
  for (std::size_t r : rows) {
    if (r >= rows_) throw DimensionError("sparse matrix: row index out of range");
    replace[r] = true;
  }
  std::vector<Triplet> t;
  t.reserve(values_.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    if (replace[i]) {
      t.push_back({i, i, 1.0});
      continue;
    }
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) t.push_back({i, col_idx_[k], values_[k]});
  }
  return SparseMatrix(rows_, cols_, t);
}

std::vector<double> SparseMatrix::to_dense() const {
  std::vector<double> dense(rows_ * cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) dense[i * cols_ + col_idx_[k]] = values_[k];
  }
  return dense;
}

double SparseMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("sparse matrix: product dimension mismatch");
  std::vector<Triplet> t;
  std::vector<double> acc(b.cols_, 0.0);
  std::vector<bool> used(b.cols_, false);
  std::vector<std::size_t> touched;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    touched.clear();
    for (std::size_t ka = a.row_ptr_[i]; ka < a.row_ptr_[i + 1]; ++ka) {
      const std::size_t m = a.col_idx_[ka];
      const double av = a.values_[ka];
      for (std::size_t kb = b.row_ptr_[m]; kb < b.row_ptr_[m + 1]; ++kb) {
        const std::size_t j = b.col_idx_[kb];
        if (!used[j]) {
          used[j] = true;
          touched.push_back(j);
        }
        acc[j] += av * b.values_[kb];
      }
    }
    for (std::size_t j : touched) {
      t.push_back({i, j, acc[j]});
      acc[j] = 0.0;
      used[j] = false;
    }
  }
  return SparseMatrix(a.rows_, b.cols_, t);
}

SparseMatrix add(double alpha, const SparseMatrix& a, double beta, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("sparse matrix: add dimension mismatch");
  std::vector<Triplet> t;
  t.reserve(a.values_.size() + b.values_.size());
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = a.row_ptr_[i]; k < a.row_ptr_[i + 1]; ++k) t.push_back({i, a.col_idx_[k], alpha * a.values_[k]});
    for (std::size_t k = b.row_ptr_[i]; k < b.row_ptr_[i + 1]; ++k) t.push_back({i, b.col_idx_[k], beta * b.values_[k]});
  }
  return SparseMatrix(a.rows_, a.cols_, t);
}

}  // namespace dsw
