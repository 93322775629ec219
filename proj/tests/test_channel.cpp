/*
 * This code is part of uqc, a toolkit for unital quantum channels.
 *
 * (C) Copyright 2026 The uqc authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "test_helpers.hpp"
#include "uqc/catalog.hpp"
#include "uqc/channel.hpp"
#include "uqc/matrix.hpp"
#include "uqc/weyl_family.hpp"

using namespace uqc;
using uqc_test::seeded_rng;
using uqc_test::random_matrix;
using uqc_test::random_mixed_unitary;
using uqc_test::random_unitary;

namespace {

ComplexMatrix diag3(double a, double b, double c) {
  ComplexMatrix m = ComplexMatrix::zeros(3, 3);
  m(0, 0) = cxd{a, 0.0};
  m(1, 1) = cxd{b, 0.0};
  m(2, 2) = cxd{c, 0.0};
  return m;
}

}  // namespace

TEST_CASE("KrausChannel construction validates shapes") {
  CHECK_THROWS_AS(KrausChannel::create({}), std::invalid_argument);
  auto rng = seeded_rng(1);
  CHECK_THROWS_AS(
      KrausChannel::create({random_matrix(rng, 2, 2), random_matrix(rng, 3, 3)}),
      std::invalid_argument);

  const KrausChannel ch =
      KrausChannel::create({random_matrix(rng, 2, 3), random_matrix(rng, 2, 3)});
  CHECK(ch.dim_in == 3);
  CHECK(ch.dim_out == 2);
  CHECK(ch.kraus.size() == 2);
}

TEST_CASE("Verdict residuals for the scaled identity") {
  // A single Kraus operator I/2 gives sum K†K = I/4, so both residuals are
  // ||I/4 - I||_F = (3/4)·√3.
  const KrausChannel ch =
      KrausChannel::create({ComplexMatrix::identity(3) * cxd{0.5, 0.0}});
  const ChannelVerdict v = verdict(ch);
  CHECK_FALSE(v.trace_preserving);
  CHECK_FALSE(v.unital);
  CHECK(v.tp_residual == doctest::Approx(0.75 * std::sqrt(3.0)).epsilon(1e-12));
  CHECK(v.unital_residual ==
        doctest::Approx(0.75 * std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("Verdict accepts mixed-unitary channels") {
  auto rng = seeded_rng(17);
  for (std::size_t d : {2u, 3u, 4u}) {
    const KrausChannel ch = random_mixed_unitary(rng, d, 3);
    const ChannelVerdict v = verdict(ch);
    CHECK(v.trace_preserving);
    CHECK(v.unital);
    CHECK(v.tp_residual < 1e-12);
    CHECK(v.unital_residual < 1e-12);
  }
}

TEST_CASE("Applying a channel") {
  // The uniform cyclic mixture sends |0><0| to the maximally mixed state.
  const KrausChannel eb = build_rank_d(coeff_b());
  const ComplexMatrix rho = diag3(1.0, 0.0, 0.0);
  const ComplexMatrix out = apply(eb, rho);
  CHECK(uqc_test::max_abs_diff(
            out, ComplexMatrix::identity(3) * cxd{1.0 / 3.0, 0.0}) < 1e-14);

  // Trace preservation on random states.
  auto rng = seeded_rng(23);
  const ComplexMatrix x = random_matrix(rng, 3, 3);
  const ComplexMatrix state = x * dagger(x);
  const ComplexMatrix mapped = apply(eb, state);
  CHECK(std::abs(mapped.trace() - state.trace()) < 1e-12);

  CHECK_THROWS_AS(apply(eb, random_matrix(rng, 2, 2)), std::invalid_argument);
}

TEST_CASE("Choi matrix of the identity channel") {
  const KrausChannel id = KrausChannel::create({ComplexMatrix::identity(3)});
  const ComplexMatrix choi = choi_matrix(id);
  REQUIRE(choi.rows() == 9);
  // C = 3 |Ω><Ω| with |Ω> the normalized maximally entangled vector:
  // entries C[(a,a),(b,b)] = 1, everything else 0.
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t s = 0; s < 3; ++s) {
          const double value = std::abs(choi(a * 3 + r, b * 3 + s));
          if (a == r && b == s)
            CHECK(value == doctest::Approx(1.0));
          else
            CHECK(value < 1e-15);
        }
  CHECK(std::abs(choi.trace() - cxd{3.0, 0.0}) < 1e-12);
  CHECK(kraus_rank(id) == 1);
}

TEST_CASE("Choi partial traces recover the two Gram sums") {
  auto rng = seeded_rng(29);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<ComplexMatrix> ops;
    for (int k = 0; k < 3; ++k) ops.push_back(random_matrix(rng, 3, 3));
    const KrausChannel ch = KrausChannel::create(ops);
    const ComplexMatrix choi = choi_matrix(ch);

    const ComplexMatrix out_traced = choi_trace_out_output(choi, 3, 3);
    CHECK(uqc_test::max_abs_diff(out_traced, tp_gram(ch).transpose()) < 1e-12);
    const ComplexMatrix in_traced = choi_trace_out_input(choi, 3, 3);
    CHECK(uqc_test::max_abs_diff(in_traced, unital_gram(ch)) < 1e-12);

    // The Choi matrix is Hermitian and positive semidefinite.
    CHECK(uqc_test::max_abs_diff(choi, choi.adjoint()) < 1e-12);
    const std::vector<double> eigs = hermitian_eigenvalues(choi);
    CHECK(eigs.front() > -1e-10);
  }
}

TEST_CASE("Kraus ranks of the named channels") {
  CHECK(kraus_rank(build_rank_d(coeff_b())) == 3);
  CHECK(kraus_rank(build_rank_d(coeff_c())) == 3);
  CHECK(kraus_rank(build_rank_d(coeff_a())) == 3);
  CHECK(kraus_rank(build_rank4_qutrit(coeff_a())) == 4);
  CHECK(kraus_rank(build_rank4_qutrit(coeff_b())) == 4);

  // A redundant representation does not change the Kraus rank.
  const ComplexMatrix u = ComplexMatrix::identity(3);
  const double w = 1.0 / std::sqrt(2.0);
  const KrausChannel redundant =
      KrausChannel::create({u * cxd{w, 0.0}, u * cxd{w, 0.0}});
  CHECK(kraus_rank(redundant) == 1);
}

TEST_CASE("Choi distance separates channels and vanishes on equality") {
  const KrausChannel eb = build_rank_d(coeff_b());
  const KrausChannel ec = build_rank_d(coeff_c());
  CHECK(choi_distance(eb, eb) < 1e-14);
  CHECK(choi_distance(eb, ec) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(same_channel(eb, eb));
  CHECK_FALSE(same_channel(eb, ec));

  // Unitary freedom: rotating the Kraus set by a unitary mixing matrix
  // leaves the channel unchanged.
  auto rng = seeded_rng(37);
  const ComplexMatrix mix = random_unitary(rng, 3);
  std::vector<ComplexMatrix> rotated;
  for (std::size_t i = 0; i < 3; ++i) {
    ComplexMatrix sum = ComplexMatrix::zeros(3, 3);
    for (std::size_t j = 0; j < 3; ++j)
      sum = sum + ec.kraus[j] * mix(j, i);
    rotated.push_back(sum);
  }
  CHECK(same_channel(ec, KrausChannel::create(rotated)));
}

TEST_CASE("Conjugation by a unitary") {
  const KrausChannel ec = build_rank_d(coeff_c());
  auto rng = seeded_rng(41);
  const ComplexMatrix u = random_unitary(rng, 3);

  const KrausChannel rotated = conjugate(ec, u);
  // Conjugation preserves unitality, trace preservation, and Kraus rank.
  const ChannelVerdict v = verdict(rotated);
  CHECK(v.trace_preserving);
  CHECK(v.unital);
  CHECK(kraus_rank(rotated) == kraus_rank(ec));

  // The rotated channel acts as rho -> U E(rho) U†.
  const ComplexMatrix x = random_matrix(rng, 3, 3);
  const ComplexMatrix rho = x * dagger(x);
  const ComplexMatrix left = apply(rotated, rho);
  const ComplexMatrix right = u * apply(ec, rho) * dagger(u);
  CHECK(uqc_test::max_abs_diff(left, right) < 1e-10);

  // Rotating by U and then U† restores the original channel.
  CHECK(same_channel(conjugate(rotated, dagger(u)), ec));

  // Non-unitary conjugators are rejected.
  CHECK_THROWS_AS(conjugate(ec, random_matrix(rng, 3, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(conjugate(ec, random_matrix(rng, 2, 2)),
                  std::invalid_argument);
}
