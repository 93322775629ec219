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
 * Kraus-channel abstraction.
 *
 * A channel E acts on an n×n density matrix ρ through an operator sum
 *     E(ρ) = Σᵢ Kᵢ ρ Kᵢ†,
 * with every Kraus operator Kᵢ of shape m×n.  E is trace-preserving when
 * Σᵢ Kᵢ†Kᵢ = 1ₙ and unital when Σᵢ KᵢKᵢ† = 1ₘ.  This header provides
 * application, the TP/unital verdict with explicit residuals, the Choi
 * matrix Σₐᵦ |a⟩⟨b| ⊗ E(|a⟩⟨b|) (unnormalized: trace n for TP channels),
 * the Kraus rank (rank of the Choi matrix), channel equality through Choi
 * distance, and conjugation by a unitary.
 *
 * All operations are pure; values are immutable and thread-safe.
 */

#pragma once

#include "uqc/matrix.hpp"

#include <cstddef>
#include <vector>

namespace uqc {

/// Default tolerance for TP/unital verdicts and channel equality: the
/// toolkit's constructions are exact to machine precision, and 1e-10 leaves
/// ample headroom for SVD round-off.
inline constexpr double kDefaultVerdictTolerance = 1e-10;

// ── Types ───────────────────────────────────────────────────────────────────

struct KrausChannel {
  std::size_t dim_in = 0;   ///< n: input dimension (columns of each Kᵢ).
  std::size_t dim_out = 0;  ///< m: output dimension (rows of each Kᵢ).
  std::vector<ComplexMatrix> kraus;

  /// Build from a nonempty list of same-shaped, finite Kraus operators;
  /// dimensions are inferred from the first operator.
  static KrausChannel create(std::vector<ComplexMatrix> operators);
};

struct ChannelVerdict {
  bool trace_preserving = false;
  bool unital = false;
  double tp_residual = 0.0;      ///< ‖Σ Kᵢ†Kᵢ − 1ₙ‖_F
  double unital_residual = 0.0;  ///< ‖Σ KᵢKᵢ† − 1ₘ‖_F
};

// ── Operations ──────────────────────────────────────────────────────────────

/// E(ρ) = Σᵢ Kᵢ ρ Kᵢ†.  ρ must be n×n; the result is m×m.
ComplexMatrix apply(const KrausChannel& ch, const ComplexMatrix& rho);

/// Σᵢ Kᵢ†Kᵢ (n×n) — equals the identity exactly when E is trace-preserving.
ComplexMatrix tp_gram(const KrausChannel& ch);

/// Σᵢ KᵢKᵢ† (m×m) — equals the identity exactly when E is unital.
ComplexMatrix unital_gram(const KrausChannel& ch);

/// TP/unital flags with their Frobenius residuals, compared against tol.
ChannelVerdict verdict(const KrausChannel& ch,
                       double tol = kDefaultVerdictTolerance);

/// The nm×nm Choi matrix Σₐᵦ |a⟩⟨b| ⊗ E(|a⟩⟨b|); row index (a, r) maps to
/// a·m + r.  Positive semi-definite; trace n for TP channels.
ComplexMatrix choi_matrix(const KrausChannel& ch);

/// Trace out the output factor of an nm×nm Choi matrix: the n×n matrix
/// T[a,b] = Σᵣ C[(a,r),(b,r)].  Equals the transpose of Σ Kᵢ†Kᵢ, hence the
/// identity iff the channel is TP.
ComplexMatrix choi_trace_out_output(const ComplexMatrix& choi, std::size_t n,
                                    std::size_t m);

/// Trace out the input factor: the m×m matrix T[r,s] = Σₐ C[(a,r),(a,s)].
/// Equals Σ KᵢKᵢ†, hence the identity iff the channel is unital.
ComplexMatrix choi_trace_out_input(const ComplexMatrix& choi, std::size_t n,
                                   std::size_t m);

/// Kraus rank: the numerical rank of the Choi matrix, which equals the
/// cardinality of any minimal Kraus set for the same channel.
std::size_t kraus_rank(const KrausChannel& ch, const RankPolicy& policy = {});

/// Frobenius distance between the Choi matrices of two channels with
/// matching dimensions.
double choi_distance(const KrausChannel& a, const KrausChannel& b);

/// True iff the Choi matrices agree within tol in Frobenius norm — the
/// canonical, representation-independent notion of channel equality.
bool same_channel(const KrausChannel& a, const KrausChannel& b,
                  double tol = kDefaultVerdictTolerance);

/// The conjugated channel ρ ↦ U E(ρ) U†, i.e. the Kraus set {U Kᵢ}.
/// U must be m×m and unitary within 1e-10 (‖U†U − 1‖_F).
KrausChannel conjugate(const KrausChannel& ch, const ComplexMatrix& u);

}  // namespace uqc
