#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dsw/sparse.hpp"

namespace dsw {

struct FactorOptions {
  /// Use the banded LU when max(kl, ku) of the (possibly reordered) matrix is at most this.
  std::size_t max_bandwidth = 64;
};

/// Reusable LU factorization of a square matrix.
///
/// Cyclically banded matrices (periodic operators) are reordered by interleaving
/// both ends of the index range, which turns the cyclic band into an ordinary band
/// of roughly twice the width; the banded LAPACK driver is used when the resulting
/// bandwidth is small enough, dense LU otherwise.
class Factorization {
 public:
  std::size_t size() const noexcept { return n_; }
  bool banded() const noexcept { return banded_; }
  std::size_t lower_bandwidth() const noexcept { return kl_; }
  std::size_t upper_bandwidth() const noexcept { return ku_; }
  /// Smallest pivot magnitude encountered.
  double min_pivot() const noexcept { return min_pivot_; }

  void solve_in_place(std::span<double> rhs) const;
  std::vector<double> solve(std::span<const double> rhs) const;

  friend Factorization factor(const SparseMatrix& a, const FactorOptions& options);

 private:
  std::size_t n_ = 0;
  bool banded_ = false;
  std::size_t kl_ = 0;
  std::size_t ku_ = 0;
  double min_pivot_ = 0.0;
  std::vector<std::size_t> perm_;  // new index -> original index
  std::vector<double> lu_;         // LAPACK band storage or column-major dense
  std::vector<int> ipiv_;
};

/// Throws FactorizationError when the matrix is singular to working precision.
Factorization factor(const SparseMatrix& a, const FactorOptions& options = {});
std::vector<double> solve(const Factorization& f, std::span<const double> rhs);

}  // namespace dsw
