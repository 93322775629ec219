/*
 * This code is part of uqc, a toolkit for unital quantum channels.
 *
 * (C) Copyright 2026 The uqc authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "uqc/matrix.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace uqc {

namespace {

using EMat =
    Eigen::Matrix<cxd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

EMat to_eigen(const ComplexMatrix& m) {
  return Eigen::Map<const EMat>(m.data().data(),
                                static_cast<Eigen::Index>(m.rows()),
                                static_cast<Eigen::Index>(m.cols()));
}

void require(bool cond, const std::string& message) {
  if (!cond) throw std::invalid_argument(message);
}

void validate_policy(const RankPolicy& policy) {
  require(policy.relative_tol > 0.0 && policy.relative_tol < 1.0,
          "RankPolicy: relative_tol must lie in (0, 1)");
  require(policy.absolute_floor > 0.0,
          "RankPolicy: absolute_floor must be positive");
}

}  // namespace

// ── RankPolicy ──────────────────────────────────────────────────────────────

double RankPolicy::threshold(double largest) const {
  return std::max(relative_tol * largest, absolute_floor);
}

// ── ComplexMatrix ───────────────────────────────────────────────────────────

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols, std::vector<cxd>(rows * cols, cxd{0.0, 0.0}));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m = zeros(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = cxd{1.0, 0.0};
  return m;
}

ComplexMatrix ComplexMatrix::create(std::size_t rows, std::size_t cols,
                                    std::vector<cxd> data) {
  require(data.size() == rows * cols,
          "ComplexMatrix: data length " + std::to_string(data.size()) +
              " does not match shape " + std::to_string(rows) + "x" +
              std::to_string(cols));
  ComplexMatrix m(rows, cols, std::move(data));
  require(m.is_finite(), "ComplexMatrix: entries must be finite");
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<cxd>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<cxd> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    require(row.size() == c, "ComplexMatrix: ragged rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return create(r, c, std::move(data));
}

cxd ComplexMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_)
    throw std::out_of_range("ComplexMatrix: index (" + std::to_string(r) +
                            ", " + std::to_string(c) + ") out of range for " +
                            std::to_string(rows_) + "x" + std::to_string(cols_));
  return data_[r * cols_ + c];
}

bool ComplexMatrix::is_finite() const {
  for (const cxd& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out = zeros(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out = zeros(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = std::conj(out(r, c));
  return out;
}

cxd ComplexMatrix::trace() const {
  require(rows_ == cols_, "trace: matrix must be square");
  cxd sum{0.0, 0.0};
  for (std::size_t k = 0; k < rows_; ++k) sum += (*this)(k, k);
  return sum;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const cxd& z : data_) sum += std::norm(z);
  return std::sqrt(sum);
}

// ── Arithmetic ──────────────────────────────────────────────────────────────

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(),
          "operator+: shape mismatch");
  ComplexMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) += b(r, c);
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(),
          "operator-: shape mismatch");
  ComplexMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) -= b(r, c);
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.cols() == b.rows(), "operator*: inner dimensions " +
                                    std::to_string(a.cols()) + " and " +
                                    std::to_string(b.rows()) + " differ");
  ComplexMatrix out = ComplexMatrix::zeros(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cxd ark = a(r, k);
      if (ark == cxd{0.0, 0.0}) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

ComplexMatrix operator*(cxd scalar, const ComplexMatrix& m) {
  ComplexMatrix out = m;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) *= scalar;
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& m, cxd scalar) {
  return scalar * m;
}

ComplexMatrix dagger(const ComplexMatrix& m) { return m.adjoint(); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out = ComplexMatrix::zeros(a.rows() * b.rows(),
                                           a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const cxd scale = a(ar, ac);
      if (scale == cxd{0.0, 0.0}) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = scale * b(br, bc);
    }
  return out;
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out =
      ComplexMatrix::zeros(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

ComplexMatrix hstack(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.rows() == b.rows(), "hstack: row counts differ");
  ComplexMatrix out = ComplexMatrix::zeros(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).frobenius_norm();
}

// ── Spectra and rank ────────────────────────────────────────────────────────

std::vector<double> svd_values(const ComplexMatrix& m) {
  require(!m.empty(), "svd_values: matrix must be nonempty");
  Eigen::JacobiSVD<EMat> svd(to_eigen(m));
  const auto& sv = svd.singularValues();
  std::vector<double> out(sv.data(), sv.data() + sv.size());
  // Eigen returns them descending already; enforce anyway.
  std::sort(out.begin(), out.end(), std::greater<double>());
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  require(!m.empty(), "hermitian_eigenvalues: matrix must be nonempty");
  require(m.rows() == m.cols(), "hermitian_eigenvalues: matrix must be square");
  const double asym = frobenius_distance(m, m.adjoint());
  require(asym <= 1e-10 * std::max(1.0, m.frobenius_norm()),
          "hermitian_eigenvalues: matrix is not Hermitian (asymmetry " +
              std::to_string(asym) + ")");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      to_eigen(m), Eigen::EigenvaluesOnly);
  require(solver.info() == Eigen::Success,
          "hermitian_eigenvalues: eigensolver failed");
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

std::size_t rank_from_spectrum(const std::vector<double>& descending,
                               const RankPolicy& policy) {
  validate_policy(policy);
  const double largest = descending.empty() ? 0.0 : descending.front();
  const double cutoff = policy.threshold(largest);
  std::size_t rank = 0;
  for (double s : descending)
    if (s > cutoff) ++rank;
  return rank;
}

std::size_t numerical_rank(const ComplexMatrix& m, const RankPolicy& policy) {
  return rank_from_spectrum(svd_values(m), policy);
}

// ── Linear independence ─────────────────────────────────────────────────────

IndependenceReport linear_independence(const std::vector<ComplexMatrix>& set,
                                       const RankPolicy& policy) {
  validate_policy(policy);
  require(!set.empty(), "linear_independence: set must be nonempty");
  const std::size_t rows = set.front().rows();
  const std::size_t cols = set.front().cols();
  for (const ComplexMatrix& m : set)
    require(m.rows() == rows && m.cols() == cols,
            "linear_independence: matrices must share one shape");

  const std::size_t r = set.size();
  ComplexMatrix gram = ComplexMatrix::zeros(r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      cxd sum{0.0, 0.0};
      for (std::size_t k = 0; k < rows * cols; ++k)
        sum += std::conj(set[a].data()[k]) * set[b].data()[k];
      gram(a, b) = sum;
    }

  std::vector<double> eigs = hermitian_eigenvalues(gram);  // ascending
  std::vector<double> descending(eigs.rbegin(), eigs.rend());
  IndependenceReport report;
  report.set_size = r;
  report.rank = rank_from_spectrum(descending, policy);
  report.independent = (report.rank == r);
  report.min_gram_eigenvalue = eigs.front();
  return report;
}

}  // namespace uqc
