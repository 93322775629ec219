/*
 * This code is part of uqc, a toolkit for unital quantum channels.
 *
 * (C) Copyright 2026 The uqc authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

/*
 * Dense complex-matrix primitives.
 *
 * ComplexMatrix is the universal currency of the toolkit: a row-major dense
 * matrix of std::complex<double> with explicit row/column counts.  On top of
 * it this header provides products, adjoints, traces, Kronecker products,
 * direct sums, singular values, numerical rank under an explicit threshold
 * policy, Hermitian eigenvalues, and a Gram-matrix linear-independence
 * oracle.  All operations are pure functions of their inputs; values are
 * immutable after construction and safe to use from any number of threads.
 *
 * The heavy numerics (SVD, Hermitian eigensolver) are implemented in
 * matrix.cpp on top of Eigen; Eigen types never appear in this interface.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace uqc {

using cxd = std::complex<double>;

// ── Rank thresholding policy ────────────────────────────────────────────────

/// Threshold policy for deciding which singular values (or Gram eigenvalues)
/// count as nonzero: a value sigma is kept iff
///   sigma > max(relative_tol * largest, absolute_floor).
/// The defaults keep every quantity this toolkit reports (smallest meaningful
/// singular value ~7.7e-2) nine orders of magnitude above the cutoff.
struct RankPolicy {
  double relative_tol = 1e-9;
  double absolute_floor = 1e-12;

  /// The cutoff applied to a spectrum whose largest value is `largest`.
  double threshold(double largest) const;
};

// ── ComplexMatrix ───────────────────────────────────────────────────────────

class ComplexMatrix {
 public:
  /// Empty 0x0 matrix.
  ComplexMatrix() = default;

  /// rows x cols matrix of zeros.
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);

  /// n x n identity.
  static ComplexMatrix identity(std::size_t n);

  /// Build from explicit row-major data.  Validates that `data` has exactly
  /// rows*cols entries and that every entry is finite (no NaN/Inf).
  static ComplexMatrix create(std::size_t rows, std::size_t cols,
                              std::vector<cxd> data);

  /// Build from nested initializer lists; all rows must have equal length.
  /// Validates finiteness.
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<cxd>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  /// Unchecked element access (row r, column c), row-major storage.
  cxd& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  cxd operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  /// Bounds-checked element access; throws std::out_of_range.
  cxd at(std::size_t r, std::size_t c) const;

  const std::vector<cxd>& data() const { return data_; }

  /// True iff every entry is finite.
  bool is_finite() const;

  ComplexMatrix adjoint() const;    ///< Conjugate transpose.
  ComplexMatrix transpose() const;  ///< Plain transpose.
  ComplexMatrix conjugate() const;  ///< Entrywise conjugate.

  cxd trace() const;        ///< Sum of diagonal entries; square only.
  double frobenius_norm() const;

 private:
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cxd> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {}

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cxd> data_;
};

// ── Arithmetic ──────────────────────────────────────────────────────────────

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cxd scalar, const ComplexMatrix& m);
ComplexMatrix operator*(const ComplexMatrix& m, cxd scalar);

/// Conjugate transpose (free-function spelling of ComplexMatrix::adjoint).
ComplexMatrix dagger(const ComplexMatrix& m);

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Block-diagonal direct sum: a in the top-left, b in the bottom-right.
ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

/// Horizontal concatenation [a | b]; row counts must match.
ComplexMatrix hstack(const ComplexMatrix& a, const ComplexMatrix& b);

/// Frobenius distance ||a - b||_F.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

// ── Spectra and rank ────────────────────────────────────────────────────────

/// Singular values of m, sorted descending; exactly min(rows, cols) values.
/// Throws std::invalid_argument for an empty matrix.
std::vector<double> svd_values(const ComplexMatrix& m);

/// Eigenvalues of a Hermitian matrix, sorted ascending.  Validates that m is
/// square and Hermitian within 1e-10 * max(1, ||m||_F).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Count of values in a descending spectrum above the policy threshold.
std::size_t rank_from_spectrum(const std::vector<double>& descending,
                               const RankPolicy& policy);

/// Numerical rank of m: number of singular values above the policy cutoff.
std::size_t numerical_rank(const ComplexMatrix& m, const RankPolicy& policy = {});

// ── Linear independence ─────────────────────────────────────────────────────

/// Result of the Gram-matrix independence test.
struct IndependenceReport {
  bool independent = false;          ///< rank(G) equals the set size.
  std::size_t rank = 0;              ///< Numerical rank of the Gram matrix.
  std::size_t set_size = 0;          ///< Number of matrices tested.
  double min_gram_eigenvalue = 0.0;  ///< Conditioning witness.
};

/// Linear independence of a set of same-shaped matrices, decided through the
/// Hermitian Gram matrix G_ab = trace(A_a^dagger A_b): the set is independent
/// iff the numerical rank of G equals the set size.  The smallest eigenvalue
/// of G is returned as a conditioning witness.  Throws std::invalid_argument
/// for an empty set or mismatched shapes.
IndependenceReport linear_independence(const std::vector<ComplexMatrix>& set,
                                       const RankPolicy& policy = {});

}  // namespace uqc
