/*
 * This code is part of uqc, a toolkit for unital quantum channels.
 *
 * (C) Copyright 2026 The uqc authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "uqc/channel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace uqc {

namespace {

void require(bool cond, const std::string& message) {
  if (!cond) throw std::invalid_argument(message);
}

}  // namespace

// ── Construction ────────────────────────────────────────────────────────────

KrausChannel KrausChannel::create(std::vector<ComplexMatrix> operators) {
  require(!operators.empty(), "KrausChannel: need at least one Kraus operator");
  const std::size_t m = operators.front().rows();
  const std::size_t n = operators.front().cols();
  require(m > 0 && n > 0, "KrausChannel: operators must be nonempty matrices");
  for (const ComplexMatrix& k : operators) {
    require(k.rows() == m && k.cols() == n,
            "KrausChannel: all Kraus operators must share one shape");
    require(k.is_finite(), "KrausChannel: entries must be finite");
  }
  KrausChannel ch;
  ch.dim_in = n;
  ch.dim_out = m;
  ch.kraus = std::move(operators);
  return ch;
}

// ── Application and verdict ─────────────────────────────────────────────────

ComplexMatrix apply(const KrausChannel& ch, const ComplexMatrix& rho) {
  require(rho.rows() == ch.dim_in && rho.cols() == ch.dim_in,
          "apply: state must be " + std::to_string(ch.dim_in) + "x" +
              std::to_string(ch.dim_in));
  ComplexMatrix out = ComplexMatrix::zeros(ch.dim_out, ch.dim_out);
  for (const ComplexMatrix& k : ch.kraus) out = out + k * rho * k.adjoint();
  return out;
}

ComplexMatrix tp_gram(const KrausChannel& ch) {
  ComplexMatrix sum = ComplexMatrix::zeros(ch.dim_in, ch.dim_in);
  for (const ComplexMatrix& k : ch.kraus) sum = sum + k.adjoint() * k;
  return sum;
}

ComplexMatrix unital_gram(const KrausChannel& ch) {
  ComplexMatrix sum = ComplexMatrix::zeros(ch.dim_out, ch.dim_out);
  for (const ComplexMatrix& k : ch.kraus) sum = sum + k * k.adjoint();
  return sum;
}

ChannelVerdict verdict(const KrausChannel& ch, double tol) {
  require(tol > 0.0, "verdict: tolerance must be positive");
  ChannelVerdict v;
  v.tp_residual =
      frobenius_distance(tp_gram(ch), ComplexMatrix::identity(ch.dim_in));
  v.unital_residual =
      frobenius_distance(unital_gram(ch), ComplexMatrix::identity(ch.dim_out));
  v.trace_preserving = v.tp_residual <= tol;
  v.unital = v.unital_residual <= tol;
  return v;
}

// ── Choi matrix ─────────────────────────────────────────────────────────────

ComplexMatrix choi_matrix(const KrausChannel& ch) {
  const std::size_t n = ch.dim_in;
  const std::size_t m = ch.dim_out;
  ComplexMatrix choi = ComplexMatrix::zeros(n * m, n * m);
  // Σᵢ wᵢ wᵢ† with w[(a, r)] = Kᵢ[r, a]: the outer-product form of
  // Σₐᵦ |a⟩⟨b| ⊗ E(|a⟩⟨b|), built with one pass per Kraus operator.
  for (const ComplexMatrix& k : ch.kraus) {
    std::vector<cxd> w(n * m);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t r = 0; r < m; ++r) w[a * m + r] = k(r, a);
    for (std::size_t p = 0; p < n * m; ++p) {
      if (w[p] == cxd{0.0, 0.0}) continue;
      for (std::size_t q = 0; q < n * m; ++q)
        choi(p, q) += w[p] * std::conj(w[q]);
    }
  }
  return choi;
}

ComplexMatrix choi_trace_out_output(const ComplexMatrix& choi, std::size_t n,
                                    std::size_t m) {
  require(choi.rows() == n * m && choi.cols() == n * m,
          "choi_trace_out_output: matrix must be nm x nm");
  ComplexMatrix out = ComplexMatrix::zeros(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t r = 0; r < m; ++r)
        out(a, b) += choi(a * m + r, b * m + r);
  return out;
}

ComplexMatrix choi_trace_out_input(const ComplexMatrix& choi, std::size_t n,
                                   std::size_t m) {
  require(choi.rows() == n * m && choi.cols() == n * m,
          "choi_trace_out_input: matrix must be nm x nm");
  ComplexMatrix out = ComplexMatrix::zeros(m, m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t a = 0; a < n; ++a)
        out(r, s) += choi(a * m + r, a * m + s);
  return out;
}

std::size_t kraus_rank(const KrausChannel& ch, const RankPolicy& policy) {
  // The Choi matrix is Hermitian PSD, so its singular values coincide with
  // its eigenvalues; count the eigenvalues above the policy cutoff.
  std::vector<double> eigs = hermitian_eigenvalues(choi_matrix(ch));
  std::vector<double> descending(eigs.rbegin(), eigs.rend());
  return rank_from_spectrum(descending, policy);
}

// ── Equality and conjugation ────────────────────────────────────────────────

double choi_distance(const KrausChannel& a, const KrausChannel& b) {
  require(a.dim_in == b.dim_in && a.dim_out == b.dim_out,
          "choi_distance: channel dimensions differ");
  return frobenius_distance(choi_matrix(a), choi_matrix(b));
}

bool same_channel(const KrausChannel& a, const KrausChannel& b, double tol) {
  require(tol > 0.0, "same_channel: tolerance must be positive");
  return choi_distance(a, b) <= tol;
}

KrausChannel conjugate(const KrausChannel& ch, const ComplexMatrix& u) {
  require(u.rows() == ch.dim_out && u.cols() == ch.dim_out,
          "conjugate: unitary must be " + std::to_string(ch.dim_out) + "x" +
              std::to_string(ch.dim_out));
  const double unitarity = frobenius_distance(
      u.adjoint() * u, ComplexMatrix::identity(u.rows()));
  require(unitarity <= 1e-10,
          "conjugate: matrix is not unitary (residual " +
              std::to_string(unitarity) + ")");
  std::vector<ComplexMatrix> rotated;
  rotated.reserve(ch.kraus.size());
  for (const ComplexMatrix& k : ch.kraus) rotated.push_back(u * k);
  return KrausChannel::create(std::move(rotated));
}

}  // namespace uqc
