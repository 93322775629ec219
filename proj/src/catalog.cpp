/*
 * This code is part of uqc, a toolkit for unital quantum channels.
 *
 * (C) Copyright 2026 The uqc authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "uqc/catalog.hpp"

#include <cmath>
#include <numbers>

namespace uqc {

namespace {

using std::numbers::pi;

// Unit-phase entry; angles landing exactly on a quarter turn produce exact
// axis values instead of trigonometric dust.
cxd phase(double modulus, double angle) {
  const double quarter = angle / (pi / 2.0);
  if (quarter == std::round(quarter)) {
    switch (std::llround(quarter) & 3) {
      case 0:
        return cxd{modulus, 0.0};
      case 1:
        return cxd{0.0, modulus};
      case 2:
        return cxd{-modulus, 0.0};
      default:
        return cxd{0.0, -modulus};
    }
  }
  return std::polar(modulus, angle);
}

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt5 = std::sqrt(5.0);

std::vector<NamedExample> make_entries() {
  std::vector<NamedExample> entries;

  const double r2 = 1.0 / kSqrt2;

  // 3-operator family verdicts for the three coefficient sets.
  {
    NamedExample e;
    e.name = "a";
    e.kind = ExampleKind::coefficients;
    e.family = FamilyTag::rank_d;
    e.coefficients = coeff_a();
    ExpectedRecord x;
    x.extreme = true;
    x.singular_values = {
        {0, {1.529263, 0.636396, 0.588519}},
        {1, {0.931879, 0.633202, 0.430880}},
        {2, {0.931879, 0.633202, 0.430880}},
    };
    e.expected = x;
    e.description =
        "Generic feasible coefficient set; its 3-operator channel is extreme.";
    entries.push_back(std::move(e));
  }
  {
    NamedExample e;
    e.name = "b";
    e.kind = ExampleKind::coefficients;
    e.family = FamilyTag::rank_d;
    e.coefficients = coeff_b();
    ExpectedRecord x;
    x.extreme = false;
    x.singular_values = {
        {0, {kSqrt2, 0.0, 0.0}},
        {1, {kSqrt2, 0.0, 0.0}},
        {2, {kSqrt2, 0.0, 0.0}},
    };
    e.expected = x;
    e.description =
        "Uniform cyclic-permutation mixture; not extreme in either family.";
    entries.push_back(std::move(e));
  }
  {
    NamedExample e;
    e.name = "c";
    e.kind = ExampleKind::coefficients;
    e.family = FamilyTag::rank_d;
    e.coefficients = coeff_c();
    ExpectedRecord x;
    x.extreme = true;
    x.singular_values = {
        {0, {kSqrt2, r2, r2}},
        {1, {r2, r2, r2}},
        {2, {r2, r2, r2}},
    };
    e.expected = x;
    e.description =
        "Phase-pattern coefficient set; its 3-operator channel is extreme.";
    entries.push_back(std::move(e));
  }

  // 4-operator family verdicts for the same coefficient sets.
  {
    NamedExample e;
    e.name = "F_a";
    e.kind = ExampleKind::coefficients;
    e.family = FamilyTag::rank4;
    e.coefficients = coeff_a();
    ExpectedRecord x;
    x.extreme = true;
    x.singular_values = {
        {0, {1.475000, 0.734676, 0.599598, 0.122919}},
        {1, {0.901545, 0.500915, 0.224512, 0.076781}},
        {2, {0.651109, 0.369786, 0.307536, 0.121399}},
        {3, {0.901545, 0.500915, 0.224512, 0.076781}},
    };
    e.expected = x;
    e.description =
        "Coefficient set a driving the 4-operator family; extreme, although "
        "it fails the unital-only and trace-preserving-only tests.";
    entries.push_back(std::move(e));
  }
  {
    NamedExample e;
    e.name = "F_b";
    e.kind = ExampleKind::coefficients;
    e.family = FamilyTag::rank4;
    e.coefficients = coeff_b();
    ExpectedRecord x;
    x.extreme = false;
    x.singular_values = {
        {0, {std::sqrt(14.0) / 3.0, kSqrt2 / 3.0, kSqrt2 / 3.0, 0.0}},
        {1, {std::sqrt(10.0) / 3.0, kSqrt2 / 3.0, 0.0, 0.0}},
        {2, {std::sqrt(10.0) / 3.0, kSqrt2 / 3.0, 0.0, 0.0}},
        {3, {std::sqrt(10.0) / 3.0, kSqrt2 / 3.0, 0.0, 0.0}},
    };
    e.expected = x;
    e.description = "Coefficient set b driving the 4-operator family.";
    entries.push_back(std::move(e));
  }
  {
    NamedExample e;
    e.name = "F_c";
    e.kind = ExampleKind::coefficients;
    e.family = FamilyTag::rank4;
    e.coefficients = coeff_c();
    ExpectedRecord x;
    x.extreme = false;
    x.singular_values = {
        {0, {kSqrt2 * std::cos(pi / 8.0), r2, r2, kSqrt2 * std::sin(pi / 8.0)}},
        {2, {r2, r2, 0.0, 0.0}},
    };
    e.expected = x;
    e.description = "Coefficient set c driving the 4-operator family.";
    entries.push_back(std::move(e));
  }

  // Reference channels and unitaries.
  {
    NamedExample e;
    e.name = "wh_antisym3";
    e.kind = ExampleKind::kraus_set;
    e.channel = werner_holevo_antisym3();
    ExpectedRecord x;
    x.extreme = true;
    e.expected = x;
    e.description = "Antisymmetric Werner–Holevo channel on qutrits.";
    entries.push_back(std::move(e));
  }
  {
    NamedExample e;
    e.name = "cyclic3";
    e.kind = ExampleKind::kraus_set;
    e.channel = cyclic_mixture3();
    ExpectedRecord x;
    x.extreme = false;
    e.expected = x;
    e.description = "Uniform mixture of the three cyclic permutation "
                    "unitaries; equals the 3-operator channel of set b.";
    entries.push_back(std::move(e));
  }
  {
    NamedExample e;
    e.name = "swap";
    e.kind = ExampleKind::unitary;
    e.unitary = swap_unitary();
    e.description = "Self-inverse unitary exchanging basis states 0 and 1.";
    entries.push_back(std::move(e));
  }

  return entries;
}

}  // namespace

// ── Coefficient matrices ────────────────────────────────────────────────────

CoefficientMatrix coeff_a() {
  const double p = kSqrt5 / 30.0;
  ComplexMatrix alpha = ComplexMatrix::from_rows({
      {cxd{3.0 * kSqrt3 * p, 0.0}, phase(6.0 * p, pi / 2.0),
       cxd{3.0 * kSqrt3 * p, 0.0}},
      {cxd{kSqrt3 * p, 0.0}, phase(kSqrt3 * p, 4.0 * pi / 3.0),
       phase(4.0 * kSqrt3 * p, 2.0 * pi / 3.0)},
      {cxd{3.0 * kSqrt2 * p, 0.0}, phase(3.0 * p, 5.0 * pi / 12.0),
       phase(3.0 * p, 13.0 * pi / 12.0)},
  });
  return CoefficientMatrix::create(std::move(alpha));
}

CoefficientMatrix coeff_b() {
  const double q = 1.0 / kSqrt3;
  ComplexMatrix alpha = ComplexMatrix::from_rows({
      {cxd{q, 0.0}, cxd{0.0, 0.0}, cxd{0.0, 0.0}},
      {cxd{q, 0.0}, cxd{0.0, 0.0}, cxd{0.0, 0.0}},
      {cxd{q, 0.0}, cxd{0.0, 0.0}, cxd{0.0, 0.0}},
  });
  return CoefficientMatrix::create(std::move(alpha));
}

CoefficientMatrix coeff_c() {
  const double q = kSqrt2 / 6.0;
  ComplexMatrix alpha = ComplexMatrix::from_rows({
      {cxd{2.0 * q, 0.0}, phase(q, 5.0 * pi / 3.0), phase(q, pi / 3.0)},
      {cxd{2.0 * q, 0.0}, phase(q, pi), phase(q, pi)},
      {cxd{2.0 * q, 0.0}, phase(q, pi / 3.0), phase(q, 5.0 * pi / 3.0)},
  });
  return CoefficientMatrix::create(std::move(alpha));
}

// ── Reference channels and unitaries ────────────────────────────────────────

KrausChannel werner_holevo_antisym3() {
  const double r2 = 1.0 / kSqrt2;
  ComplexMatrix k0 = ComplexMatrix::zeros(3, 3);
  k0(0, 1) = cxd{r2, 0.0};
  k0(1, 0) = cxd{-r2, 0.0};
  ComplexMatrix k1 = ComplexMatrix::zeros(3, 3);
  k1(0, 2) = cxd{r2, 0.0};
  k1(2, 0) = cxd{-r2, 0.0};
  ComplexMatrix k2 = ComplexMatrix::zeros(3, 3);
  k2(2, 1) = cxd{r2, 0.0};
  k2(1, 2) = cxd{-r2, 0.0};
  return KrausChannel::create({k0, k1, k2});
}

std::vector<ComplexMatrix> cyclic_unitaries3() {
  ComplexMatrix u0 = ComplexMatrix::identity(3);
  ComplexMatrix u1 = ComplexMatrix::zeros(3, 3);
  u1(0, 2) = cxd{1.0, 0.0};
  u1(1, 0) = cxd{1.0, 0.0};
  u1(2, 1) = cxd{1.0, 0.0};
  ComplexMatrix u2 = ComplexMatrix::zeros(3, 3);
  u2(0, 1) = cxd{1.0, 0.0};
  u2(1, 2) = cxd{1.0, 0.0};
  u2(2, 0) = cxd{1.0, 0.0};
  return {u0, u1, u2};
}

ComplexMatrix swap_unitary() {
  ComplexMatrix u = ComplexMatrix::zeros(3, 3);
  u(0, 1) = cxd{1.0, 0.0};
  u(1, 0) = cxd{1.0, 0.0};
  u(2, 2) = cxd{1.0, 0.0};
  return u;
}

KrausChannel cyclic_mixture3() {
  const double w = 1.0 / kSqrt3;
  std::vector<ComplexMatrix> kraus;
  for (const ComplexMatrix& u : cyclic_unitaries3())
    kraus.push_back(u * cxd{w, 0.0});
  return KrausChannel::create(std::move(kraus));
}

// ── Lookup ──────────────────────────────────────────────────────────────────

const std::vector<NamedExample>& catalog_entries() {
  static const std::vector<NamedExample> entries = make_entries();
  return entries;
}

const NamedExample* find_example(const std::string& name) {
  const auto& entries = catalog_entries();
  for (const NamedExample& entry : entries)
    if (entry.name == name) return &entry;
  return nullptr;
}

}  // namespace uqc
