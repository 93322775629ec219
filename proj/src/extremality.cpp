/*
 * This code is part of uqc, a toolkit for unital quantum channels.
 *
 * (C) Copyright 2026 The uqc authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "uqc/extremality.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace uqc {

namespace {

void require(bool cond, const std::string& message) {
  if (!cond) throw std::invalid_argument(message);
}

std::size_t wrap(long long value, std::size_t d) {
  const long long m = static_cast<long long>(d);
  return static_cast<std::size_t>(((value % m) + m) % m);
}

ComplexMatrix gram_of(const std::vector<ComplexMatrix>& set) {
  const std::size_t r = set.size();
  ComplexMatrix gram = ComplexMatrix::zeros(r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      cxd sum{0.0, 0.0};
      const std::vector<cxd>& pa = set[a].data();
      const std::vector<cxd>& pb = set[b].data();
      for (std::size_t k = 0; k < pa.size(); ++k)
        sum += std::conj(pa[k]) * pb[k];
      gram(a, b) = sum;
    }
  return gram;
}

// Reject a linearly dependent Kraus set, naming the operators that carry
// significant weight in the null combination.
void check_minimal(const std::vector<ComplexMatrix>& kraus,
                   const RankPolicy& policy, const std::string& caller) {
  const IndependenceReport report = linear_independence(kraus, policy);
  if (report.independent) return;

  const ComplexMatrix gram = gram_of(kraus);
  Eigen::MatrixXcd g(kraus.size(), kraus.size());
  for (std::size_t a = 0; a < kraus.size(); ++a)
    for (std::size_t b = 0; b < kraus.size(); ++b) g(a, b) = gram(a, b);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(g);
  const Eigen::VectorXcd null_vec = solver.eigenvectors().col(0);

  double largest = 0.0;
  for (Eigen::Index k = 0; k < null_vec.size(); ++k)
    largest = std::max(largest, std::abs(null_vec(k)));
  std::ostringstream msg;
  msg << caller << ": Kraus set is not minimal (rank " << report.rank
      << " of " << report.set_size << "); dependent operators:";
  for (Eigen::Index k = 0; k < null_vec.size(); ++k)
    if (std::abs(null_vec(k)) > 0.1 * largest) msg << " K" << k;
  throw std::invalid_argument(msg.str());
}

ExtremalityReport run_product_test(ExtremalityMethod method,
                                   const std::vector<ComplexMatrix>& products,
                                   const RankPolicy& policy) {
  ExtremalityReport report;
  report.method = method;
  report.policy = policy;
  report.independence = linear_independence(products, policy);
  report.extreme = report.independence.independent;

  BlockReport block;
  block.label = 0;
  block.block = gram_of(products);
  block.singular_values = svd_values(block.block);
  block.full_rank = report.independence.independent;
  report.blocks.push_back(std::move(block));
  return report;
}

ExtremalityReport shortcut_report(ExtremalityMethod method,
                                  std::size_t set_size,
                                  const RankPolicy& policy) {
  ExtremalityReport report;
  report.method = method;
  report.policy = policy;
  report.extreme = false;
  report.independence = IndependenceReport{false, 0, set_size, 0.0};
  return report;
}

std::string residual_text(const ChannelVerdict& v) {
  std::ostringstream msg;
  msg << "tp residual " << v.tp_residual << ", unital residual "
      << v.unital_residual;
  return msg.str();
}

constexpr double kPreconditionTolerance = 1e-9;
constexpr double kMirrorTolerance = 1e-12;

void check_feasible(const CoefficientMatrix& c, const std::string& caller) {
  const ConditionReport report = condition_report(c);
  if (!report.feasible(kPreconditionTolerance)) {
    std::ostringstream msg;
    msg << caller
        << ": coefficients do not satisfy the validity conditions within "
        << kPreconditionTolerance << " (max residual " << report.max_residual()
        << ")";
    throw std::invalid_argument(msg.str());
  }
}

void check_mirror(const ComplexMatrix& mirrored, const ComplexMatrix& direct,
                  const std::string& caller, std::size_t l) {
  const double dist = frobenius_distance(mirrored, direct);
  if (dist > kMirrorTolerance * std::max(1.0, direct.frobenius_norm())) {
    std::ostringstream msg;
    msg << caller << ": conjugate-mirror identity violated at offset " << l
        << " (distance " << dist << ")";
    throw std::runtime_error(msg.str());
  }
}

BlockReport make_block(std::size_t label, ComplexMatrix m, ComplexMatrix n,
                       std::size_t expected_rank, const RankPolicy& policy,
                       bool mirrored) {
  BlockReport block;
  block.label = label;
  block.block = hstack(m, n);
  block.singular_values = svd_values(block.block);
  block.full_rank =
      rank_from_spectrum(block.singular_values, policy) == expected_rank;
  block.mirrored = mirrored;
  return block;
}

// Sparsity pattern of the four Kraus operators produced by
// build_rank4_qutrit, used to derive product supports structurally.
const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>&
rank4_masks() {
  static const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>
      masks = {
          {{0, 0}, {1, 1}, {2, 2}},
          {{1, 0}, {2, 1}},
          {{0, 2}, {2, 0}},
          {{0, 1}, {1, 2}},
      };
  return masks;
}

}  // namespace

// ── General product-set tests ───────────────────────────────────────────────

ExtremalityReport extreme_general(const KrausChannel& ch,
                                  const RankPolicy& policy) {
  const ChannelVerdict v = verdict(ch, kPreconditionTolerance);
  require(v.trace_preserving && v.unital,
          "extreme_general: channel is not unital trace-preserving within "
          "1e-9 (" + residual_text(v) + ")");
  check_minimal(ch.kraus, policy, "extreme_general");

  std::vector<ComplexMatrix> products;
  products.reserve(ch.kraus.size() * ch.kraus.size());
  for (const ComplexMatrix& ki : ch.kraus)
    for (const ComplexMatrix& kj : ch.kraus)
      products.push_back(
          direct_sum(dagger(ki) * kj, ki * dagger(kj)));
  return run_product_test(ExtremalityMethod::general_ls, products, policy);
}

ExtremalityReport extreme_ucp(const KrausChannel& ch,
                              const RankPolicy& policy) {
  const ChannelVerdict v = verdict(ch, kPreconditionTolerance);
  require(v.unital, "extreme_ucp: channel is not unital within 1e-9 (" +
                        residual_text(v) + ")");
  check_minimal(ch.kraus, policy, "extreme_ucp");

  const std::size_t r = ch.kraus.size();
  if (r > ch.dim_out)
    return shortcut_report(ExtremalityMethod::general_ucp, r * r, policy);

  std::vector<ComplexMatrix> products;
  products.reserve(r * r);
  for (const ComplexMatrix& ki : ch.kraus)
    for (const ComplexMatrix& kj : ch.kraus)
      products.push_back(ki * dagger(kj));
  return run_product_test(ExtremalityMethod::general_ucp, products, policy);
}

ExtremalityReport extreme_cpt(const KrausChannel& ch,
                              const RankPolicy& policy) {
  const ChannelVerdict v = verdict(ch, kPreconditionTolerance);
  require(v.trace_preserving,
          "extreme_cpt: channel is not trace-preserving within 1e-9 (" +
              residual_text(v) + ")");
  check_minimal(ch.kraus, policy, "extreme_cpt");

  const std::size_t r = ch.kraus.size();
  if (r > ch.dim_in)
    return shortcut_report(ExtremalityMethod::general_cpt, r * r, policy);

  std::vector<ComplexMatrix> products;
  products.reserve(r * r);
  for (const ComplexMatrix& ki : ch.kraus)
    for (const ComplexMatrix& kj : ch.kraus)
      products.push_back(dagger(ki) * kj);
  return run_product_test(ExtremalityMethod::general_cpt, products, policy);
}

// ── Condensed blocks for the d-operator family ──────────────────────────────

ComplexMatrix build_M(const CoefficientMatrix& c, std::size_t l) {
  require(l < c.d, "build_M: offset out of range");
  const std::size_t d = c.d;
  const ComplexMatrix s = row_transform(c);
  ComplexMatrix m = ComplexMatrix::zeros(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      m(i, k) = s(wrap(i + l, d),
                  wrap(static_cast<long long>(k) - static_cast<long long>(l),
                       d)) *
                std::conj(s(i, k));
  return m;
}

ComplexMatrix build_N(const CoefficientMatrix& c, std::size_t l) {
  require(l < c.d, "build_N: offset out of range");
  const std::size_t d = c.d;
  const ComplexMatrix s = row_transform(c);
  ComplexMatrix n = ComplexMatrix::zeros(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const std::size_t shifted =
          wrap(static_cast<long long>(k) - static_cast<long long>(i), d);
      n(i, k) = s(wrap(i + l, d), shifted) * std::conj(s(i, shifted));
    }
  return n;
}

ExtremalityReport extreme_family_rank_d(const CoefficientMatrix& c,
                                        const RankPolicy& policy) {
  check_feasible(c, "extreme_family_rank_d");
  const std::size_t d = c.d;

  ExtremalityReport report;
  report.method = ExtremalityMethod::family_rank_d;
  report.policy = policy;

  // Offsets l and d−l are conjugate mirrors of each other; build the first
  // half directly and derive the rest.
  const std::size_t direct_count = d / 2 + 1;
  std::vector<ComplexMatrix> m_parts(direct_count), n_parts(direct_count);
  for (std::size_t l = 0; l < direct_count; ++l) {
    m_parts[l] = build_M(c, l);
    n_parts[l] = build_N(c, l);
    report.blocks.push_back(
        make_block(l, m_parts[l], n_parts[l], d, policy, false));
  }
  for (std::size_t l = direct_count; l < d; ++l) {
    const std::size_t p = d - l;  // partner offset, already built
    ComplexMatrix m = ComplexMatrix::zeros(d, d);
    ComplexMatrix n = ComplexMatrix::zeros(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) {
        m(wrap(i + p, d),
          wrap(static_cast<long long>(k) - static_cast<long long>(p), d)) =
            std::conj(m_parts[p](i, k));
        n(wrap(i + p, d), wrap(k + p, d)) = std::conj(n_parts[p](i, k));
      }
    check_mirror(m, build_M(c, l), "extreme_family_rank_d", l);
    check_mirror(n, build_N(c, l), "extreme_family_rank_d", l);
    report.blocks.push_back(make_block(l, m, n, d, policy, true));
  }

  report.extreme = std::all_of(report.blocks.begin(), report.blocks.end(),
                               [](const BlockReport& b) { return b.full_rank; });
  return report;
}

// ── Condensed blocks for the 4-operator qutrit family ───────────────────────

std::vector<std::pair<std::size_t, std::size_t>> rank4_support(std::size_t l) {
  require(l < 4, "rank4_support: offset out of range");
  const auto& masks = rank4_masks();

  // Support of Kᵢ†K_{i+l}: cell (a, b) is reachable when some row t is
  // occupied in both factors' columns a and b.
  bool forward[3][3] = {};
  bool reversed[3][3] = {};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& left = masks[i];
    const auto& right = masks[(i + l) % 4];
    for (const auto& [t1, a] : left)
      for (const auto& [t2, b] : right)
        if (t1 == t2) forward[a][b] = true;
    // Support of K_{i+l}Kᵢ†: cell (a, b) via a shared column.
    for (const auto& [a, t1] : right)
      for (const auto& [b, t2] : left)
        if (t1 == t2) reversed[a][b] = true;
  }
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      if (forward[a][b] != reversed[a][b])
        throw std::runtime_error(
            "rank4_support: forward and reversed product supports disagree");

  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      if (forward[a][b]) cells.emplace_back(a, b);
  return cells;
}

namespace {

ComplexMatrix read_support(const std::vector<ComplexMatrix>& products,
                           std::size_t l, const std::string& caller) {
  const auto cells = rank4_support(l);
  ComplexMatrix out = ComplexMatrix::zeros(products.size(), cells.size());
  for (std::size_t i = 0; i < products.size(); ++i) {
    double on_support = 0.0;
    for (std::size_t t = 0; t < cells.size(); ++t) {
      const cxd value = products[i](cells[t].first, cells[t].second);
      out(i, t) = value;
      on_support += std::norm(value);
    }
    const double total = products[i].frobenius_norm();
    if (std::abs(on_support - total * total) >
        1e-12 * std::max(1.0, total * total))
      throw std::runtime_error(
          caller + ": product carries weight outside the structural support");
  }
  return out;
}

}  // namespace

ComplexMatrix build_M4(const CoefficientMatrix& c, std::size_t l) {
  require(c.d == 3, "build_M4: coefficients must be 3x3");
  require(l < 4, "build_M4: offset out of range");
  const KrausChannel ch = build_rank4_qutrit(c);
  std::vector<ComplexMatrix> products;
  products.reserve(4);
  for (std::size_t i = 0; i < 4; ++i)
    products.push_back(dagger(ch.kraus[i]) * ch.kraus[(i + l) % 4]);
  return read_support(products, l, "build_M4");
}

ComplexMatrix build_N4(const CoefficientMatrix& c, std::size_t l) {
  require(c.d == 3, "build_N4: coefficients must be 3x3");
  require(l < 4, "build_N4: offset out of range");
  const KrausChannel ch = build_rank4_qutrit(c);
  std::vector<ComplexMatrix> products;
  products.reserve(4);
  for (std::size_t i = 0; i < 4; ++i)
    products.push_back(ch.kraus[(i + l) % 4] * dagger(ch.kraus[i]));
  return read_support(products, l, "build_N4");
}

ExtremalityReport extreme_family_rank4(const CoefficientMatrix& c,
                                       const RankPolicy& policy) {
  require(c.d == 3, "extreme_family_rank4: coefficients must be 3x3");
  check_feasible(c, "extreme_family_rank4");

  ExtremalityReport report;
  report.method = ExtremalityMethod::family_rank4;
  report.policy = policy;

  std::vector<ComplexMatrix> m_parts(3), n_parts(3);
  for (std::size_t l = 0; l < 3; ++l) {
    m_parts[l] = build_M4(c, l);
    n_parts[l] = build_N4(c, l);
    report.blocks.push_back(
        make_block(l, m_parts[l], n_parts[l], 4, policy, false));
  }
  // Offset 3 mirrors offset 1: row i is the conjugate of row (i−1 mod 4),
  // columns unpermuted.
  {
    const std::size_t cols = m_parts[1].cols();
    ComplexMatrix m = ComplexMatrix::zeros(4, cols);
    ComplexMatrix n = ComplexMatrix::zeros(4, cols);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t t = 0; t < cols; ++t) {
        m(wrap(i + 1, 4), t) = std::conj(m_parts[1](i, t));
        n(wrap(i + 1, 4), t) = std::conj(n_parts[1](i, t));
      }
    check_mirror(m, build_M4(c, 3), "extreme_family_rank4", 3);
    check_mirror(n, build_N4(c, 3), "extreme_family_rank4", 3);
    report.blocks.push_back(make_block(3, m, n, 4, policy, true));
  }

  report.extreme = std::all_of(report.blocks.begin(), report.blocks.end(),
                               [](const BlockReport& b) { return b.full_rank; });
  return report;
}

}  // namespace uqc
