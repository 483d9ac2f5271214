#include "dsw/linear_solve.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <type_traits>

#include "dsw/errors.hpp"

namespace dsw {

static_assert(std::is_same_v<lapack_int, int>, "LAPACKE built with 64-bit integers is not supported");

namespace {

std::vector<std::size_t> interleaved_order(std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) {
    perm[k] = (k % 2 == 0) ? k / 2 : n - 1 - (k - 1) / 2;
  }
  return perm;
}

struct Bandwidth {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::size_t max() const { return std::max(lower, upper); }
};

Bandwidth bandwidth(const SparseMatrix& a, const std::vector<std::size_t>& inverse) {
  Bandwidth bw;
  const auto rp = a.row_offsets();
  const auto ci = a.col_indices();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const std::size_t ni = inverse[i];
    for (std::size_t k = rp[i]; k < rp[i + 1]; ++k) {
      const std::size_t nj = inverse[ci[k]];
      if (nj > ni) bw.upper = std::max(bw.upper, nj - ni);
      if (ni > nj) bw.lower = std::max(bw.lower, ni - nj);
    }
  }
  return bw;
}

std::vector<std::size_t> invert(const std::vector<std::size_t>& perm) {
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) inv[perm[k]] = k;
  return inv;
}

}  // namespace

Factorization factor(const SparseMatrix& a, const FactorOptions& options) {
  if (a.rows() != a.cols()) {
    throw DimensionError("factor: matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  const std::size_t n = a.rows();
  if (n == 0) throw DimensionError("factor: empty matrix");

  std::vector<std::size_t> natural(n);
  for (std::size_t i = 0; i < n; ++i) natural[i] = i;
  std::vector<std::size_t> interleaved = interleaved_order(n);
  const Bandwidth bw_natural = bandwidth(a, natural);
  const std::vector<std::size_t> inv_interleaved = invert(interleaved);
  const Bandwidth bw_interleaved = bandwidth(a, inv_interleaved);

  Factorization f;
  f.n_ = n;
  std::vector<std::size_t> inverse;
  Bandwidth bw;
  if (bw_interleaved.max() < bw_natural.max()) {
    f.perm_ = std::move(interleaved);
    inverse = inv_interleaved;
    bw = bw_interleaved;
  } else {
    f.perm_ = std::move(natural);
    inverse = f.perm_;
    bw = bw_natural;
  }

  const double scale = a.max_abs();
  if (scale == 0.0) throw FactorizationError("factor: zero matrix", 0.0);
  if (!std::isfinite(scale)) throw NumericError("factor: matrix has non-finite entries");

  const int nn = static_cast<int>(n);
  f.ipiv_.assign(n, 0);
  const auto rp = a.row_offsets();
  const auto ci = a.col_indices();
  const auto vals = a.values();
  int info = 0;
  // Banded storage needs 2*kl+ku+1 rows; dense storage needs n. Pick the cheaper one.
  f.banded_ = bw.max() <= options.max_bandwidth && 2 * bw.lower + bw.upper + 1 < n;
  if (f.banded_) {
    f.kl_ = bw.lower;
    f.ku_ = bw.upper;
    const std::size_t ldab = 2 * f.kl_ + f.ku_ + 1;
    f.lu_.assign(ldab * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = rp[i]; k < rp[i + 1]; ++k) {
        const std::size_t ni = inverse[i];
        const std::size_t nj = inverse[ci[k]];
        f.lu_[(f.kl_ + f.ku_ + ni - nj) + nj * ldab] = vals[k];
      }
    }
    info = LAPACKE_dgbtrf(LAPACK_COL_MAJOR, nn, nn, static_cast<int>(f.kl_), static_cast<int>(f.ku_),
                          f.lu_.data(), static_cast<int>(ldab), f.ipiv_.data());
    f.min_pivot_ = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      f.min_pivot_ = std::min(f.min_pivot_, std::abs(f.lu_[(f.kl_ + f.ku_) + j * ldab]));
    }
  } else {
    f.kl_ = n - 1;
    f.ku_ = n - 1;
    f.lu_.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = rp[i]; k < rp[i + 1]; ++k) {
        f.lu_[inverse[i] + inverse[ci[k]] * n] = vals[k];
      }
    }
    info = LAPACKE_dgetrf(LAPACK_COL_MAJOR, nn, nn, f.lu_.data(), nn, f.ipiv_.data());
    f.min_pivot_ = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) f.min_pivot_ = std::min(f.min_pivot_, std::abs(f.lu_[j + j * n]));
  }
  if (info < 0) {
    throw Error("factor: LAPACK rejected argument " + std::to_string(-info));
  }
  const double threshold = static_cast<double>(n) * std::numeric_limits<double>::epsilon() * scale;
  if (info > 0 || !(f.min_pivot_ > threshold)) {
    throw FactorizationError("factor: matrix is singular to working precision (smallest pivot " +
                                 std::to_string(f.min_pivot_) + ")",
                             f.min_pivot_);
  }
  return f;
}

void Factorization::solve_in_place(std::span<double> rhs) const {
  if (rhs.size() != n_) {
    throw DimensionError("solve: right-hand side has length " + std::to_string(rhs.size()) +
                         ", expected " + std::to_string(n_));
  }
  std::vector<double> work(n_);
  for (std::size_t k = 0; k < n_; ++k) work[k] = rhs[perm_[k]];
  // LAPACK takes non-const pointers even for read-only inputs.
  auto* lu = const_cast<double*>(lu_.data());
  auto* ipiv = const_cast<int*>(ipiv_.data());
  const int nn = static_cast<int>(n_);
  int info = 0;
  if (banded_) {
    info = LAPACKE_dgbtrs(LAPACK_COL_MAJOR, 'N', nn, static_cast<int>(kl_), static_cast<int>(ku_), 1, lu,
                          static_cast<int>(2 * kl_ + ku_ + 1), ipiv, work.data(), nn);
  } else {
    info = LAPACKE_dgetrs(LAPACK_COL_MAJOR, 'N', nn, 1, lu, nn, ipiv, work.data(), nn);
  }
  if (info != 0) throw Error("solve: LAPACK returned " + std::to_string(info));
  for (std::size_t k = 0; k < n_; ++k) rhs[perm_[k]] = work[k];
}

std::vector<double> Factorization::solve(std::span<const double> rhs) const {
  std::vector<double> x(rhs.begin(), rhs.end());
  solve_in_place(x);
  return x;
}

std::vector<double> solve(const Factorization& f, std::span<const double> rhs) { return f.solve(rhs); }

}  // namespace dsw
