/*
 * This code is part of uqc, a toolkit for unital quantum channels.
 *
 * (C) Copyright 2026 The uqc authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef UQC_EXTREMALITY_HPP
#define UQC_EXTREMALITY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "uqc/channel.hpp"
#include "uqc/matrix.hpp"
#include "uqc/weyl_family.hpp"

namespace uqc {

// Extremality of a unital, trace-preserving, completely positive (UCPT)
// channel is decided by linear-independence tests on pairwise products of
// its Kraus operators:
//
//   • general_ls   — independence of the direct sums Kᵢ†Kⱼ ⊕ KᵢKⱼ†
//                    (extremality within the UCPT set),
//   • general_ucp  — independence of {KᵢKⱼ†} (extremality among unital
//                    completely positive maps),
//   • general_cpt  — independence of {Kᵢ†Kⱼ} (extremality among
//                    trace-preserving completely positive maps),
//   • family_rank_d — rank test of the condensed blocks (M_l | N_l) for the
//                    d-operator shift-phase family,
//   • family_rank4 — rank test of the condensed blocks for the 4-operator
//                    qutrit family.
//
// The family tests reach the same verdict as general_ls on the channels the
// family builders produce, at the cost of d small matrix ranks instead of a
// Gram matrix of all r² products.
enum class ExtremalityMethod {
  general_ls,
  general_ucp,
  general_cpt,
  family_rank_d,
  family_rank4,
};

// One tested block.  For the family methods this is the concatenation
// (M_l | N_l) at offset `label`; for the general methods it is the single
// Gram matrix of the product set (label 0).  `mirrored` marks family blocks
// that were obtained from their conjugate partner at offset d−l rather than
// rebuilt from scratch (the two have identical singular values).
struct BlockReport {
  std::size_t label = 0;
  ComplexMatrix block;
  std::vector<double> singular_values;  // descending
  bool full_rank = false;
  bool mirrored = false;
};

struct ExtremalityReport {
  ExtremalityMethod method = ExtremalityMethod::general_ls;
  bool extreme = false;
  RankPolicy policy;
  std::vector<BlockReport> blocks;
  // Populated by the general methods; for family methods all fields are 0.
  IndependenceReport independence{false, 0, 0, 0.0};
};

// ── General product-set tests ───────────────────────────────────────────────

// Direct-sum test deciding extremality in the UCPT set.  Requires the
// channel to be UCPT within 1e-9 and its Kraus set to be minimal (linearly
// independent); violations raise std::invalid_argument, the minimality
// failure naming the dependent operators.
ExtremalityReport extreme_general(const KrausChannel& ch,
                                  const RankPolicy& policy = RankPolicy{});

// Extremality among unital CP maps via {KᵢKⱼ†}.  Requires unitality within
// 1e-9 and a minimal Kraus set.  When the Kraus rank exceeds the output
// dimension the verdict is false without any Gram computation (the product
// set cannot be independent).
ExtremalityReport extreme_ucp(const KrausChannel& ch,
                              const RankPolicy& policy = RankPolicy{});

// Extremality among trace-preserving CP maps via {Kᵢ†Kⱼ}; same shortcut
// against the input dimension.
ExtremalityReport extreme_cpt(const KrausChannel& ch,
                              const RankPolicy& policy = RankPolicy{});

// ── Condensed blocks for the d-operator family ──────────────────────────────

// d×d block at offset l ∈ [0, d): row i holds the only nonzero diagonal of
// the product Kᵢ†K_{i+l}; M(i, k) = s_{i+l}(k−l)·conj(s_i(k)) with s the
// row transform of the coefficients and all indices mod d.
ComplexMatrix build_M(const CoefficientMatrix& c, std::size_t l);

// Companion block from the reversed products K_{i+l}Kᵢ†;
// N(i, k) = s_{i+l}(k−i)·conj(s_i(k−i)).
ComplexMatrix build_N(const CoefficientMatrix& c, std::size_t l);

// Full-rank test of (M_l | N_l) for l = 0..d−1.  Requires the validity
// conditions to hold within 1e-9.  Blocks at offsets l and d−l are complex
// conjugates of each other up to index relabeling, so only the first
// ⌈(d+1)/2⌉ offsets are built directly; the rest are mirrored, and the
// mirror identity is cross-checked numerically.
ExtremalityReport extreme_family_rank_d(
    const CoefficientMatrix& c, const RankPolicy& policy = RankPolicy{});

// ── Condensed blocks for the 4-operator qutrit family ───────────────────────

// Structural support of the products at offset l: the matrix cells
// (row-major sorted) on which any of the four products Kᵢ†K_{i+l} can be
// nonzero.  Three cells at l = 0, two at l = 1, 2, 3.  The reversed
// products K_{i+l}Kᵢ† share the same support.
std::vector<std::pair<std::size_t, std::size_t>> rank4_support(std::size_t l);

// 4×|support| blocks: row i lists the product Kᵢ†K_{i+l} (for M) or
// K_{i+l}Kᵢ† (for N) evaluated on the support cells, i ∈ Z₄.
ComplexMatrix build_M4(const CoefficientMatrix& c, std::size_t l);
ComplexMatrix build_N4(const CoefficientMatrix& c, std::size_t l);

// Full-rank test of (M′_l | N′_l) for l = 0..3 on the 4-operator qutrit
// family; requires d = 3 and validity within 1e-9.  Offsets 0..2 are built
// directly, offset 3 is mirrored from offset 1 (conjugate + row relabel)
// with the identity cross-checked numerically.
ExtremalityReport extreme_family_rank4(
    const CoefficientMatrix& c, const RankPolicy& policy = RankPolicy{});

}  // namespace uqc

#endif  // UQC_EXTREMALITY_HPP
