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
 * Heisenberg–Weyl operators and the two parametrized Kraus families.
 *
 * The shift–clock basis over dimension d is
 *     XᵢZⱼ = Σₖ ω^{kj} |k+i⟩⟨k|,   ω = e^{+2πi/d},
 * with every index sum reduced mod d.  A d×d coefficient matrix (α_ij)
 * parametrizes the rank-d family
 *     Kᵢ = Σⱼ α_ij XᵢZⱼ,
 * whose channel is trace-preserving and unital exactly when
 *     (norm)    Σᵢⱼ |α_ij|² = 1,
 *     (tp_l)    Σᵢⱼ α_{i,j+l} ᾱ_{ij} = 0              for l = 1..d−1,
 *     (uni_l)   Σᵢⱼ α_{i,j+l} ᾱ_{ij} ω^{−il} = 0      for l = 1..d−1.
 * For qutrits the same coefficients also feed a four-operator family whose
 * validity conditions are identical.
 *
 * This header also provides gauge fixing of column phases, a seeded sampler
 * that projects random coefficients onto the constraint set via damped
 * Newton iteration, and the measured tangent dimension of that set (the
 * Jacobian rank of the independent real constraints, minus the row-phase
 * gauge orbit), which equals 2d² − 3d + 1 at generic feasible points.
 */

#pragma once

#include "uqc/channel.hpp"
#include "uqc/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace uqc {

// ── Types ───────────────────────────────────────────────────────────────────

struct CoefficientMatrix {
  std::size_t d = 0;    ///< Dimension (≥ 2).
  ComplexMatrix alpha;  ///< d×d complex coefficients α_ij.

  /// Wrap a square matrix of coefficients; validates d ≥ 2 and finiteness.
  static CoefficientMatrix create(ComplexMatrix alpha);
};

struct ConditionReport {
  double norm_residual = 0.0;        ///< |Σ|α|² − 1|.
  std::vector<cxd> tp_residuals;     ///< tp_l for l = 1..d−1.
  std::vector<cxd> unital_residuals; ///< uni_l for l = 1..d−1.
  ComplexMatrix beta;                ///< β_il = Σⱼ α_{i,j+l} ᾱ_{ij} (diagnostic).
  /// For d = 3 only: the three chained quantities {R₀, ωR₁, ω²R₂} with
  /// Rᵢ = β_{i,1}; their mutual equality is equivalent to all tp/unital
  /// residuals vanishing.  Empty for d ≠ 3.
  std::vector<cxd> chained;

  /// Largest residual magnitude across norm, tp, and unital conditions.
  double max_residual() const;
  /// True iff every residual magnitude is below tol.
  bool feasible(double tol) const;
};

struct GaugeConvention {
  std::size_t fixed_column = 0;
};

struct GaugeFixResult {
  CoefficientMatrix fixed;
  /// Rows whose fixed-column entry was zero: their phase is undefined, the
  /// row is left unrotated, and the row index is recorded here.
  std::vector<std::size_t> unresolved_rows;
};

/// Thrown when the feasible-point sampler exhausts its restart budget.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& message, double best_residual)
      : std::runtime_error(message), best_residual(best_residual) {}
  double best_residual;
};

struct TangentReport {
  std::size_t dimension = 0;       ///< 2d² − rank(J) − d.
  std::size_t jacobian_rank = 0;
  std::vector<double> jacobian_singular_values;  ///< Descending.
};

// ── Operations ──────────────────────────────────────────────────────────────

/// ω^power for ω = e^{+2πi/d}, with the exponent reduced mod d first so
/// large indices cannot accumulate phase error.
cxd unit_root_power(std::size_t d, long long power);

/// The shift–clock operator XᵢZⱼ: entry ω^{kj} at row (k+i mod d), column k.
/// Unitary; trace-orthogonal family: trace(W†W′) = d·δ.
ComplexMatrix weyl(std::size_t d, std::size_t i, std::size_t j);

/// The row transform s_i(t) = Σⱼ α_ij ω^{tj}, returned as a d×d matrix with
/// row index i and column index t.  Kᵢ carries s_i(k) at entry (k+i, k).
ComplexMatrix row_transform(const CoefficientMatrix& c);

/// The rank-d family member: d Kraus operators Kᵢ = Σⱼ α_ij · weyl(d, i, j).
KrausChannel build_rank_d(const CoefficientMatrix& c);

/// The four-operator qutrit family built from the same coefficients (d must
/// be 3): writing s for the row transform,
///   K₀ = diag(s₀(0), s₀(1), s₀(2)),
///   K₁ = s₁(0)|1⟩⟨0| + s₁(1)|2⟩⟨1|,
///   K₂ = s₁(2)|0⟩⟨2| + s₂(0)|2⟩⟨0|,
///   K₃ = s₂(1)|0⟩⟨1| + s₂(2)|1⟩⟨2|.
KrausChannel build_rank4_qutrit(const CoefficientMatrix& c);

/// Residuals of the validity conditions, computed from the coefficients
/// alone (no channel is built).
ConditionReport condition_report(const CoefficientMatrix& c);

/// Rotate each row by the phase of its entry in the fixed column, making
/// that column real non-negative.  Rows with a zero fixed-column entry are
/// left unrotated and flagged.  The built channels are unchanged.
GaugeFixResult gauge_fix(const CoefficientMatrix& c,
                         const GaugeConvention& g = {});

/// Draw a feasible coefficient matrix: complex Gaussian seed, Frobenius
/// normalization, then damped Newton projection onto the remaining
/// constraints with re-normalization each step (50 iterations, 10 restarts).
/// Deterministic for a fixed seed.  Throws ConvergenceError (carrying the
/// best residual reached) if every restart fails.
CoefficientMatrix sample_feasible(std::size_t d, std::uint64_t seed);

/// Jacobian analysis of the constraint set at a feasible point (residuals
/// must be < 1e-8, else std::invalid_argument).  The Jacobian stacks the
/// 2(d−1)+1 independent real constraint gradients over the 2d² real
/// coordinates; the reported dimension subtracts both the rank and the
/// U(1)^d row-phase gauge orbit:  dimension = 2d² − rank(J) − d.
TangentReport tangent_report(const CoefficientMatrix& c);

/// Shorthand for tangent_report(c).dimension.
std::size_t tangent_dimension(const CoefficientMatrix& c);

}  // namespace uqc
