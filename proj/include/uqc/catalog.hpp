/*
 * This code is part of uqc, a toolkit for unital quantum channels.
 *
 * (C) Copyright 2026 The uqc authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef UQC_CATALOG_HPP
#define UQC_CATALOG_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uqc/channel.hpp"
#include "uqc/matrix.hpp"
#include "uqc/weyl_family.hpp"

namespace uqc {

// Named reference objects bundled with the toolkit: three qutrit coefficient
// matrices (each driving both the 3-operator and the 4-operator family), the
// antisymmetric Werner–Holevo channel, the cyclic permutation unitaries, and
// a basis-swap unitary.  Every entry carries the verdicts and singular-value
// lists the test suite holds it to.

enum class ExampleKind { coefficients, kraus_set, unitary };
enum class FamilyTag { none, rank_d, rank4 };

struct ExpectedRecord {
  bool trace_preserving = true;
  bool unital = true;
  // Extremality in the UCPT set (family verdict for coefficient entries,
  // general verdict for Kraus-set entries); empty when not asserted.
  std::optional<bool> extreme;
  // Reference singular values of the tested blocks, keyed by offset l.
  // Entries derived from closed forms are exact; the rest carry six decimals.
  std::vector<std::pair<std::size_t, std::vector<double>>> singular_values;
};

struct NamedExample {
  std::string name;
  ExampleKind kind = ExampleKind::coefficients;
  FamilyTag family = FamilyTag::none;
  std::optional<CoefficientMatrix> coefficients;
  std::optional<KrausChannel> channel;
  std::optional<ComplexMatrix> unitary;
  std::optional<ExpectedRecord> expected;
  std::string description;
};

// ── Coefficient matrices ────────────────────────────────────────────────────

// Generic feasible coefficient set whose channels are extreme in both
// families.  All entries are closed-form surds and unit phases.
CoefficientMatrix coeff_a();

// Column (1,1,1)/√3: the 3-operator channel it generates is the uniform
// mixture of the cyclic permutation unitaries; not extreme in either family.
CoefficientMatrix coeff_b();

// Phase pattern whose 3-operator channel is extreme; its 4-operator channel
// is not.
CoefficientMatrix coeff_c();

// ── Reference channels and unitaries ────────────────────────────────────────

// Antisymmetric Werner–Holevo channel on qutrits: three Kraus operators
// (|a⟩⟨b| − |b⟩⟨a|)/√2.  Unital, trace-preserving, and extreme.
KrausChannel werner_holevo_antisym3();

// The identity and the two cyclic permutations of the standard basis,
// each genuinely unitary (no normalization baked in).
std::vector<ComplexMatrix> cyclic_unitaries3();

// Self-inverse unitary exchanging basis states 0 and 1.
ComplexMatrix swap_unitary();

// Uniform mixture of cyclic_unitaries3() as a Kraus channel (weights 1/3,
// i.e. Kraus operators Uᵢ/√3).
KrausChannel cyclic_mixture3();

// ── Lookup ──────────────────────────────────────────────────────────────────

// All named entries: a, b, c (3-operator family), F_a, F_b, F_c (4-operator
// family), wh_antisym3, cyclic3, swap.
const std::vector<NamedExample>& catalog_entries();

// Entry by name, or nullptr when absent.
const NamedExample* find_example(const std::string& name);

}  // namespace uqc

#endif  // UQC_CATALOG_HPP
