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

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "test_helpers.hpp"
#include "uqc/catalog.hpp"
#include "uqc/channel.hpp"
#include "uqc/extremality.hpp"
#include "uqc/matrix.hpp"
#include "uqc/weyl_family.hpp"

using namespace uqc;
using uqc_test::seeded_rng;
using uqc_test::random_matrix;
using uqc_test::random_unitary;

namespace {

CoefficientMatrix random_coefficients(std::mt19937_64& rng, std::size_t d) {
  ComplexMatrix alpha = random_matrix(rng, d, d);
  const double norm = alpha.frobenius_norm();
  alpha = alpha * cxd{1.0 / norm, 0.0};
  return CoefficientMatrix::create(alpha);
}

// Compare a computed 3×6 block against a reference matrix whose rows may be
// listed in any order; returns the smallest max-abs deviation over the six
// row permutations.
double min_row_permutation_diff(const ComplexMatrix& block,
                                const ComplexMatrix& reference) {
  REQUIRE(block.rows() == 3);
  REQUIRE(reference.rows() == 3);
  REQUIRE(block.cols() == reference.cols());
  std::array<std::size_t, 3> perm{0, 1, 2};
  double best = 1e300;
  do {
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < block.cols(); ++k)
        worst = std::max(worst,
                         std::abs(block(perm[i], k) - reference(i, k)));
    best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

void check_descending(const std::vector<double>& sv) {
  for (std::size_t k = 1; k < sv.size(); ++k) CHECK(sv[k - 1] >= sv[k]);
}

}  // namespace

TEST_CASE("A unitary channel is extreme in every sense") {
  auto rng = seeded_rng(211);
  const KrausChannel ch = KrausChannel::create({random_unitary(rng, 3)});

  for (auto* test : {&extreme_general, &extreme_ucp, &extreme_cpt}) {
    const ExtremalityReport report = (*test)(ch, RankPolicy{});
    CHECK(report.extreme);
    CHECK(report.independence.independent);
    CHECK(report.independence.set_size == 1);
    CHECK(report.independence.rank == 1);
    REQUIRE(report.blocks.size() == 1);
    CHECK(report.blocks[0].full_rank);
  }
}

TEST_CASE("General verdicts on the three-operator reference channels") {
  const ExtremalityReport a = extreme_general(build_rank_d(coeff_a()));
  CHECK(a.extreme);
  CHECK(a.method == ExtremalityMethod::general_ls);
  CHECK(a.independence.independent);
  CHECK(a.independence.set_size == 9);
  CHECK(a.independence.rank == 9);
  REQUIRE(a.blocks.size() == 1);
  CHECK(a.blocks[0].label == 0);
  CHECK(a.blocks[0].block.rows() == 9);  // Gram matrix of the product set
  CHECK(a.blocks[0].block.cols() == 9);
  check_descending(a.blocks[0].singular_values);

  const ExtremalityReport b = extreme_general(build_rank_d(coeff_b()));
  CHECK_FALSE(b.extreme);
  CHECK_FALSE(b.independence.independent);
  CHECK(b.independence.set_size == 9);
  CHECK(b.independence.rank < 9);

  CHECK(extreme_general(build_rank_d(coeff_c())).extreme);
}

TEST_CASE("Preconditions: validity and minimality") {
  // A non-UCPT set is rejected by all three product tests.
  const KrausChannel half =
      KrausChannel::create({ComplexMatrix::identity(3) * cxd{0.5, 0.0}});
  CHECK_THROWS_AS(extreme_general(half), std::invalid_argument);
  CHECK_THROWS_AS(extreme_ucp(half), std::invalid_argument);
  CHECK_THROWS_AS(extreme_cpt(half), std::invalid_argument);

  // A redundant Kraus list is rejected, and the message names the
  // operators carrying the dependency.
  auto rng = seeded_rng(223);
  const ComplexMatrix u = random_unitary(rng, 3);
  const cxd w{1.0 / std::numbers::sqrt2, 0.0};
  const KrausChannel redundant = KrausChannel::create({u * w, u * w});
  bool thrown = false;
  try {
    extreme_general(redundant);
  } catch (const std::invalid_argument& e) {
    thrown = true;
    const std::string msg = e.what();
    CHECK(msg.find("dependent") != std::string::npos);
    CHECK(msg.find("K0") != std::string::npos);
    CHECK(msg.find("K1") != std::string::npos);
  }
  CHECK(thrown);
}

TEST_CASE("UCP/CPT shortcut when the Kraus rank exceeds the dimension") {
  // The 4-operator channel from coefficients a: four independent operators
  // on a 3-dimensional space.  Both one-sided product sets (16 matrices in
  // a 9-dimensional space) are decided without computing a Gram matrix,
  // yet the combined direct-sum test certifies extremality.
  const KrausChannel fa = build_rank4_qutrit(coeff_a());
  REQUIRE(kraus_rank(fa) == 4);

  for (auto* test : {&extreme_ucp, &extreme_cpt}) {
    const ExtremalityReport report = (*test)(fa, RankPolicy{});
    CHECK_FALSE(report.extreme);
    CHECK(report.blocks.empty());
    CHECK_FALSE(report.independence.independent);
    CHECK(report.independence.set_size == 16);
    CHECK(report.independence.rank == 0);
  }

  const ExtremalityReport combined = extreme_general(fa);
  CHECK(combined.extreme);
  CHECK(combined.independence.set_size == 16);
  CHECK(combined.independence.rank == 16);

  // Kraus-rank bound for extreme points: r ≤ ⌊√(2d²)⌋ = 4 at d = 3.
  CHECK(kraus_rank(fa) <= static_cast<std::size_t>(std::sqrt(2.0 * 9.0)));
}

TEST_CASE("The cyclic mixture is not extreme among unital CP maps") {
  // Its products KᵢKⱼ† are all scalar multiples of the three cyclic
  // permutations, so the 9-element product set has rank 3.
  const KrausChannel eb = build_rank_d(coeff_b());
  const ExtremalityReport ucp = extreme_ucp(eb);
  CHECK_FALSE(ucp.extreme);
  CHECK(ucp.independence.set_size == 9);
  CHECK(ucp.independence.rank == 3);

  const ExtremalityReport cpt = extreme_cpt(eb);
  CHECK_FALSE(cpt.extreme);
  CHECK(cpt.independence.rank == 3);
}

TEST_CASE("Condensed blocks read off the Kraus products") {
  auto rng = seeded_rng(227);
  for (std::size_t d : {3u, 4u, 5u}) {
    const CoefficientMatrix c = random_coefficients(rng, d);
    const KrausChannel ch = build_rank_d(c);
    for (std::size_t l = 0; l < d; ++l) {
      const ComplexMatrix m = build_M(c, l);
      const ComplexMatrix n = build_N(c, l);
      REQUIRE(m.rows() == d);
      REQUIRE(n.cols() == d);
      for (std::size_t i = 0; i < d; ++i) {
        const ComplexMatrix p =
            dagger(ch.kraus[i]) * ch.kraus[(i + l) % d];
        const ComplexMatrix q =
            ch.kraus[(i + l) % d] * dagger(ch.kraus[i]);
        double p_mass = 0.0;
        double q_mass = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
          CHECK(std::abs(m(i, k) - p(k, (k + d - l) % d)) < 1e-13);
          CHECK(std::abs(n(i, k) - q((k + l) % d, k)) < 1e-13);
          p_mass += std::norm(m(i, k));
          q_mass += std::norm(n(i, k));
        }
        // The blocks capture the entire product: nothing lives outside
        // the single diagonal being read.
        const double pf = p.frobenius_norm();
        const double qf = q.frobenius_norm();
        CHECK(p_mass == doctest::Approx(pf * pf).epsilon(1e-12));
        CHECK(q_mass == doctest::Approx(qf * qf).epsilon(1e-12));
      }
    }
    CHECK_THROWS_AS(build_M(c, d), std::invalid_argument);
    CHECK_THROWS_AS(build_N(c, d + 2), std::invalid_argument);
  }
}

TEST_CASE("Blocks at offsets l and d−l mirror each other") {
  auto rng = seeded_rng(229);
  for (std::size_t d : {3u, 4u, 5u}) {
    const CoefficientMatrix c = random_coefficients(rng, d);
    for (std::size_t l = 1; l < d; ++l) {
      const ComplexMatrix m_l = build_M(c, l);
      const ComplexMatrix n_l = build_N(c, l);
      const ComplexMatrix m_mirror = build_M(c, d - l);
      const ComplexMatrix n_mirror = build_N(c, d - l);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
          CHECK(std::abs(m_mirror((i + l) % d, (k + d - l) % d) -
                         std::conj(m_l(i, k))) < 1e-14);
          CHECK(std::abs(n_mirror((i + l) % d, (k + l) % d) -
                         std::conj(n_l(i, k))) < 1e-14);
        }
      // Singular values of the concatenated blocks coincide exactly.
      const std::vector<double> sv_l = svd_values(hstack(m_l, n_l));
      const std::vector<double> sv_m =
          svd_values(hstack(m_mirror, n_mirror));
      for (std::size_t k = 0; k < sv_l.size(); ++k)
        CHECK(std::abs(sv_l[k] - sv_m[k]) < 1e-13);
    }
  }
}

TEST_CASE("Reference blocks at offset zero match their published form") {
  // Offset-zero blocks have entries |sᵢ(k)|², so they are real and can be
  // compared entrywise; the reference lists rows in a different order.
  {
    const ComplexMatrix block =
        hstack(build_M(coeff_a(), 0), build_N(coeff_a(), 0));
    ComplexMatrix ref = ComplexMatrix::zeros(3, 6);
    const double grid[3][6] = {{16, 7, 7, 16, 7, 7},
                               {3, 12, 3, 3, 3, 12},
                               {1, 1, 10, 1, 10, 1}};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 6; ++k)
        ref(i, k) = cxd{grid[i][k] / 20.0, 0.0};
    CHECK(min_row_permutation_diff(block, ref) < 1e-8);
  }
  {
    const ComplexMatrix block =
        hstack(build_M(coeff_c(), 0), build_N(coeff_c(), 0));
    ComplexMatrix ref = ComplexMatrix::zeros(3, 6);
    const double grid[3][6] = {{0, 1, 1, 1, 0, 1},
                               {1, 1, 0, 1, 1, 0},
                               {1, 0, 1, 0, 1, 1}};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 6; ++k)
        ref(i, k) = cxd{grid[i][k] / 2.0, 0.0};
    CHECK(min_row_permutation_diff(block, ref) < 1e-8);
  }
  // Every block of the cyclic mixture is the constant matrix 1/3.
  for (std::size_t l = 0; l < 3; ++l) {
    const ComplexMatrix block =
        hstack(build_M(coeff_b(), l), build_N(coeff_b(), l));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 6; ++k)
        CHECK(std::abs(block(i, k) - cxd{1.0 / 3.0, 0.0}) < 1e-14);
  }
}

TEST_CASE("Family verdicts and singular values for the d-operator blocks") {
  const ExtremalityReport a = extreme_family_rank_d(coeff_a());
  CHECK(a.method == ExtremalityMethod::family_rank_d);
  CHECK(a.extreme);
  REQUIRE(a.blocks.size() == 3);
  CHECK_FALSE(a.blocks[0].mirrored);
  CHECK_FALSE(a.blocks[1].mirrored);
  CHECK(a.blocks[2].mirrored);
  const double a0[] = {1.529263, 0.636396, 0.588519};
  const double a1[] = {0.931879, 0.633202, 0.430880};
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(std::abs(a.blocks[0].singular_values[k] - a0[k]) < 1e-5);
    CHECK(std::abs(a.blocks[1].singular_values[k] - a1[k]) < 1e-5);
    // Mirrored offsets share the spectrum to machine precision.
    CHECK(std::abs(a.blocks[2].singular_values[k] -
                   a.blocks[1].singular_values[k]) < 1e-12);
  }
  for (const BlockReport& block : a.blocks) {
    CHECK(block.full_rank);
    CHECK(block.block.rows() == 3);
    CHECK(block.block.cols() == 6);
    check_descending(block.singular_values);
  }

  const ExtremalityReport b = extreme_family_rank_d(coeff_b());
  CHECK_FALSE(b.extreme);
  for (const BlockReport& block : b.blocks) {
    CHECK_FALSE(block.full_rank);
    CHECK(std::abs(block.singular_values[0] - std::numbers::sqrt2) < 1e-10);
    CHECK(block.singular_values[1] < 1e-10);
    CHECK(block.singular_values[2] < 1e-10);
  }

  const ExtremalityReport c = extreme_family_rank_d(coeff_c());
  CHECK(c.extreme);
  const double inv_r2 = 1.0 / std::numbers::sqrt2;
  CHECK(std::abs(c.blocks[0].singular_values[0] - std::numbers::sqrt2) <
        1e-10);
  CHECK(std::abs(c.blocks[0].singular_values[1] - inv_r2) < 1e-10);
  CHECK(std::abs(c.blocks[0].singular_values[2] - inv_r2) < 1e-10);
  for (std::size_t l : {1u, 2u})
    for (std::size_t k = 0; k < 3; ++k)
      CHECK(std::abs(c.blocks[l].singular_values[k] - inv_r2) < 1e-10);
}

TEST_CASE("Support cells of the 4-operator products") {
  using cell = std::pair<std::size_t, std::size_t>;
  const std::vector<cell> s0{{0, 0}, {1, 1}, {2, 2}};
  const std::vector<cell> s1{{1, 0}, {2, 1}};
  const std::vector<cell> s2{{0, 2}, {2, 0}};
  const std::vector<cell> s3{{0, 1}, {1, 2}};
  CHECK(rank4_support(0) == s0);
  CHECK(rank4_support(1) == s1);
  CHECK(rank4_support(2) == s2);
  CHECK(rank4_support(3) == s3);
  CHECK_THROWS_AS(rank4_support(4), std::invalid_argument);
}

TEST_CASE("The 4-operator block builders read the products exactly") {
  CHECK_THROWS_AS(
      build_M4(CoefficientMatrix::create(ComplexMatrix::identity(4) *
                                         cxd{0.5, 0.0}),
               0),
      std::invalid_argument);

  auto rng = seeded_rng(233);
  const CoefficientMatrix c = random_coefficients(rng, 3);
  const KrausChannel ch = build_rank4_qutrit(c);
  for (std::size_t l = 0; l < 4; ++l) {
    const auto cells = rank4_support(l);
    const ComplexMatrix m = build_M4(c, l);
    const ComplexMatrix n = build_N4(c, l);
    REQUIRE(m.rows() == 4);
    REQUIRE(m.cols() == cells.size());
    for (std::size_t i = 0; i < 4; ++i) {
      const ComplexMatrix p = dagger(ch.kraus[i]) * ch.kraus[(i + l) % 4];
      const ComplexMatrix q = ch.kraus[(i + l) % 4] * dagger(ch.kraus[i]);
      double p_mass = 0.0;
      double q_mass = 0.0;
      for (std::size_t t = 0; t < cells.size(); ++t) {
        CHECK(std::abs(m(i, t) - p(cells[t].first, cells[t].second)) <
              1e-14);
        CHECK(std::abs(n(i, t) - q(cells[t].first, cells[t].second)) <
              1e-14);
        p_mass += std::norm(m(i, t));
        q_mass += std::norm(n(i, t));
      }
      const double pf = p.frobenius_norm();
      const double qf = q.frobenius_norm();
      CHECK(p_mass == doctest::Approx(pf * pf).epsilon(1e-12));
      CHECK(q_mass == doctest::Approx(qf * qf).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(build_M4(c, 4), std::invalid_argument);
  CHECK_THROWS_AS(build_N4(c, 5), std::invalid_argument);
}

TEST_CASE("Family verdicts and singular values for the 4-operator blocks") {
  const ExtremalityReport fa = extreme_family_rank4(coeff_a());
  CHECK(fa.method == ExtremalityMethod::family_rank4);
  CHECK(fa.extreme);
  REQUIRE(fa.blocks.size() == 4);
  CHECK(fa.blocks[0].block.cols() == 6);
  CHECK(fa.blocks[1].block.cols() == 4);
  CHECK_FALSE(fa.blocks[1].mirrored);
  CHECK(fa.blocks[3].mirrored);
  const double fa0[] = {1.475000, 0.734676, 0.599598, 0.122919};
  const double fa1[] = {0.901545, 0.500915, 0.224512, 0.076781};
  const double fa2[] = {0.651109, 0.369786, 0.307536, 0.121399};
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(std::abs(fa.blocks[0].singular_values[k] - fa0[k]) < 1e-5);
    CHECK(std::abs(fa.blocks[1].singular_values[k] - fa1[k]) < 1e-5);
    CHECK(std::abs(fa.blocks[2].singular_values[k] - fa2[k]) < 1e-5);
    CHECK(std::abs(fa.blocks[3].singular_values[k] -
                   fa.blocks[1].singular_values[k]) < 1e-12);
    for (const BlockReport& block : fa.blocks) CHECK(block.full_rank);
  }

  const ExtremalityReport fb = extreme_family_rank4(coeff_b());
  CHECK_FALSE(fb.extreme);
  const double r2_3 = std::numbers::sqrt2 / 3.0;
  CHECK(std::abs(fb.blocks[0].singular_values[0] - std::sqrt(14.0) / 3.0) <
        1e-10);
  CHECK(std::abs(fb.blocks[0].singular_values[1] - r2_3) < 1e-10);
  CHECK(std::abs(fb.blocks[0].singular_values[2] - r2_3) < 1e-10);
  CHECK(fb.blocks[0].singular_values[3] < 1e-10);
  for (std::size_t l : {1u, 2u, 3u}) {
    CHECK(std::abs(fb.blocks[l].singular_values[0] -
                   std::sqrt(10.0) / 3.0) < 1e-10);
    CHECK(std::abs(fb.blocks[l].singular_values[1] - r2_3) < 1e-10);
    CHECK(fb.blocks[l].singular_values[2] < 1e-10);
    CHECK_FALSE(fb.blocks[l].full_rank);
  }

  const ExtremalityReport fc = extreme_family_rank4(coeff_c());
  CHECK_FALSE(fc.extreme);
  const double inv_r2 = 1.0 / std::numbers::sqrt2;
  const double pi8 = std::numbers::pi / 8.0;
  const double fc0[] = {std::numbers::sqrt2 * std::cos(pi8), inv_r2, inv_r2,
                        std::numbers::sqrt2 * std::sin(pi8)};
  for (std::size_t k = 0; k < 4; ++k)
    CHECK(std::abs(fc.blocks[0].singular_values[k] - fc0[k]) < 1e-10);
  CHECK(fc.blocks[0].full_rank);
  // The offset-2 block is rank-deficient, which breaks extremality.
  CHECK(std::abs(fc.blocks[2].singular_values[0] - inv_r2) < 1e-10);
  CHECK(std::abs(fc.blocks[2].singular_values[1] - inv_r2) < 1e-10);
  CHECK(fc.blocks[2].singular_values[2] < 1e-10);
  CHECK(fc.blocks[2].singular_values[3] < 1e-10);
  CHECK_FALSE(fc.blocks[2].full_rank);
}

TEST_CASE("Family tests reject infeasible coefficients") {
  auto rng = seeded_rng(239);
  const CoefficientMatrix bad = random_coefficients(rng, 3);
  REQUIRE(condition_report(bad).max_residual() > 1e-6);
  CHECK_THROWS_AS(extreme_family_rank_d(bad), std::invalid_argument);
  CHECK_THROWS_AS(extreme_family_rank4(bad), std::invalid_argument);
}

TEST_CASE("Family and general tests agree on sampled channels") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const CoefficientMatrix c = sample_feasible(3, 300 + seed);
    const bool family3 = extreme_family_rank_d(c).extreme;
    const bool general3 = extreme_general(build_rank_d(c)).extreme;
    CHECK(family3 == general3);

    const bool family4 = extreme_family_rank4(c).extreme;
    const bool general4 = extreme_general(build_rank4_qutrit(c)).extreme;
    CHECK(family4 == general4);
  }
  // And at d = 4, where the mirrored half is larger.
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const CoefficientMatrix c = sample_feasible(4, 400 + seed);
    CHECK(extreme_family_rank_d(c).extreme ==
          extreme_general(build_rank_d(c)).extreme);
  }
}

TEST_CASE("Row phases of the coefficients do not change the blocks' spectra") {
  const CoefficientMatrix c = sample_feasible(3, 555);
  ComplexMatrix twisted = c.alpha;
  const double angles[3] = {0.9, -2.1, 0.4};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      twisted(i, j) *= std::polar(1.0, angles[i]);
  const CoefficientMatrix ct = CoefficientMatrix::create(twisted);

  const ExtremalityReport r1 = extreme_family_rank_d(c);
  const ExtremalityReport r2 = extreme_family_rank_d(ct);
  CHECK(r1.extreme == r2.extreme);
  for (std::size_t l = 0; l < 3; ++l)
    for (std::size_t k = 0; k < 3; ++k)
      CHECK(std::abs(r1.blocks[l].singular_values[k] -
                     r2.blocks[l].singular_values[k]) < 1e-12);
}

TEST_CASE("Block ranks are robust to row permutation and honor the policy") {
  const ComplexMatrix block =
      hstack(build_M(coeff_a(), 0), build_N(coeff_a(), 0));
  const std::size_t base_rank = numerical_rank(block);
  CHECK(base_rank == 3);
  // Swap two rows: rank unchanged.
  ComplexMatrix permuted = ComplexMatrix::zeros(3, 6);
  const std::size_t order[3] = {2, 0, 1};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 6; ++k) permuted(i, k) = block(order[i], k);
  CHECK(numerical_rank(permuted) == base_rank);

  // A deliberately coarse policy collapses the verdict: with a relative
  // cutoff of 0.5 only the leading singular value survives.
  RankPolicy coarse;
  coarse.relative_tol = 0.5;
  const ExtremalityReport report = extreme_family_rank_d(coeff_a(), coarse);
  CHECK_FALSE(report.extreme);
  CHECK_FALSE(report.blocks[0].full_rank);
  CHECK(report.policy.relative_tol == 0.5);
  CHECK(rank_from_spectrum(report.blocks[0].singular_values, coarse) == 1);

  // The same σ values are reported regardless of the policy.
  const ExtremalityReport fine = extreme_family_rank_d(coeff_a());
  for (std::size_t k = 0; k < 3; ++k)
    CHECK(report.blocks[0].singular_values[k] ==
          fine.blocks[0].singular_values[k]);
}
