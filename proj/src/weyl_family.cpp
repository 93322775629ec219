/*
 * This code is part of uqc, a toolkit for unital quantum channels.
 *
 * (C) Copyright 2026 The uqc authors.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "uqc/weyl_family.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
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

// Newton projection internals -- the sampler and the tangent analysis share
// one constraint system: the 2(d-1)+1 independent real components
//   [ norm - 1,
//     Re tp_l, Im tp_l, Re uni_l, Im uni_l   for l = 1..floor((d-1)/2),
//     Re tp_{d/2}, Re uni_{d/2}              when d is even ]
// over the 2d^2 real coordinates (x = Re alpha row-major, then y = Im alpha).
// The omitted components are forced: the l and d-l conditions are complex
// conjugates of each other, so the imaginary part at l = d/2 is identically
// zero and every l > d/2 row would duplicate an existing one.

std::size_t constraint_count(std::size_t d) { return 2 * (d - 1) + 1; }

Eigen::VectorXd constraint_values(const ConditionReport& report,
                                  std::size_t d) {
  Eigen::VectorXd g(constraint_count(d));
  std::size_t row = 0;
  // condition_report stores |norm - 1|; recompute the signed value from beta.
  cxd norm_sum{0.0, 0.0};
  for (std::size_t i = 0; i < d; ++i) norm_sum += report.beta(i, 0);
  g(row++) = norm_sum.real() - 1.0;
  for (std::size_t l = 1; 2 * l <= d; ++l) {
    const bool self_conjugate = (d % 2 == 0 && l == d / 2);
    const cxd tp = report.tp_residuals[l - 1];
    const cxd uni = report.unital_residuals[l - 1];
    g(row++) = tp.real();
    if (!self_conjugate) g(row++) = tp.imag();
    g(row++) = uni.real();
    if (!self_conjugate) g(row++) = uni.imag();
  }
  return g;
}

Eigen::MatrixXd constraint_jacobian(const ComplexMatrix& alpha) {
  const std::size_t d = alpha.rows();
  const std::size_t vars = 2 * d * d;
  Eigen::MatrixXd jac(constraint_count(d), vars);
  std::size_t row = 0;

  // Gradient of the norm constraint: 2x, 2y.
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      jac(row, p * d + q) = 2.0 * alpha(p, q).real();
      jac(row, d * d + p * d + q) = 2.0 * alpha(p, q).imag();
    }
  ++row;

  // Each remaining constraint is F = sum_{ij} alpha_{i,j+l} conj(alpha_{ij})
  // * phase(i), whose Wirtinger partials are
  //   dF/d alpha_{pq}       = conj(alpha_{p,q-l}) * phase(p)   (= A)
  //   dF/d conj(alpha_{pq}) = alpha_{p,q+l} * phase(p)          (= B)
  // so with alpha = x + iy:  dF/dx = A + B  and  dF/dy = i(A - B).
  for (std::size_t l = 1; 2 * l <= d; ++l) {
    const bool self_conjugate = (d % 2 == 0 && l == d / 2);
    for (int kind = 0; kind < 2; ++kind) {  // 0: tp_l, 1: uni_l
      Eigen::MatrixXcd a(d, d), b(d, d);
      for (std::size_t p = 0; p < d; ++p) {
        const cxd phase = kind == 1
                              ? unit_root_power(
                                    d, -static_cast<long long>(p * l))
                              : cxd{1.0, 0.0};
        for (std::size_t q = 0; q < d; ++q) {
          a(p, q) = std::conj(alpha(p, wrap(static_cast<long long>(q) -
                                               static_cast<long long>(l),
                                           d))) *
                    phase;
          b(p, q) = alpha(p, wrap(q + l, d)) * phase;
        }
      }
      const Eigen::MatrixXcd sum = a + b;
      const Eigen::MatrixXcd diff = a - b;
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) {
          jac(row, p * d + q) = sum(p, q).real();
          jac(row, d * d + p * d + q) = -diff(p, q).imag();
        }
      ++row;
      if (!self_conjugate) {
        for (std::size_t p = 0; p < d; ++p)
          for (std::size_t q = 0; q < d; ++q) {
            jac(row, p * d + q) = sum(p, q).imag();
            jac(row, d * d + p * d + q) = diff(p, q).real();
          }
        ++row;
      }
    }
  }
  return jac;
}

ComplexMatrix coords_to_matrix(const Eigen::VectorXd& x, std::size_t d) {
  ComplexMatrix alpha = ComplexMatrix::zeros(d, d);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q)
      alpha(p, q) = cxd{x(p * d + q), x(d * d + p * d + q)};
  return alpha;
}

void frobenius_normalize(Eigen::VectorXd& x) { x /= x.norm(); }

double residual_norm_at(const Eigen::VectorXd& x, std::size_t d) {
  const CoefficientMatrix c = CoefficientMatrix::create(coords_to_matrix(x, d));
  return constraint_values(condition_report(c), d).norm();
}

// Portable standard-normal draws: a fixed Box-Muller transform over
// mt19937_64 keeps sampler output identical across standard libraries
// (std::normal_distribution's sequence is implementation-defined).
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : gen_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  double uniform01() {
    // 53 random bits shifted into (0, 1); the half-bit offset keeps the
    // value strictly positive so log() is always defined.
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1p-53;
  }

  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

constexpr int kNewtonIterations = 50;
constexpr int kNewtonRestarts = 10;
constexpr double kNewtonTarget = 1e-12;

}  // namespace

// ── Basic constructions ─────────────────────────────────────────────────────

CoefficientMatrix CoefficientMatrix::create(ComplexMatrix alpha) {
  require(alpha.rows() == alpha.cols(),
          "CoefficientMatrix: matrix must be square");
  require(alpha.rows() >= 2, "CoefficientMatrix: dimension must be >= 2");
  require(alpha.is_finite(), "CoefficientMatrix: entries must be finite");
  CoefficientMatrix c;
  c.d = alpha.rows();
  c.alpha = std::move(alpha);
  return c;
}

cxd unit_root_power(std::size_t d, long long power) {
  require(d >= 1, "unit_root_power: dimension must be positive");
  const std::size_t reduced = wrap(power, d);
  if (reduced == 0) return cxd{1.0, 0.0};
  return std::polar(1.0, 2.0 * std::numbers::pi *
                             static_cast<double>(reduced) /
                             static_cast<double>(d));
}

ComplexMatrix weyl(std::size_t d, std::size_t i, std::size_t j) {
  require(d >= 1, "weyl: dimension must be positive");
  require(i < d && j < d, "weyl: indices must lie in [0, d)");
  ComplexMatrix w = ComplexMatrix::zeros(d, d);
  for (std::size_t k = 0; k < d; ++k)
    w(wrap(k + i, d), k) = unit_root_power(d, static_cast<long long>(k * j));
  return w;
}

ComplexMatrix row_transform(const CoefficientMatrix& c) {
  const std::size_t d = c.d;
  ComplexMatrix s = ComplexMatrix::zeros(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t t = 0; t < d; ++t) {
      cxd sum{0.0, 0.0};
      for (std::size_t j = 0; j < d; ++j)
        sum += c.alpha(i, j) * unit_root_power(d, static_cast<long long>(t * j));
      s(i, t) = sum;
    }
  return s;
}

KrausChannel build_rank_d(const CoefficientMatrix& c) {
  const std::size_t d = c.d;
  const ComplexMatrix s = row_transform(c);
  std::vector<ComplexMatrix> ops;
  ops.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    ComplexMatrix k = ComplexMatrix::zeros(d, d);
    for (std::size_t t = 0; t < d; ++t) k(wrap(t + i, d), t) = s(i, t);
    ops.push_back(std::move(k));
  }
  return KrausChannel::create(std::move(ops));
}

KrausChannel build_rank4_qutrit(const CoefficientMatrix& c) {
  require(c.d == 3, "build_rank4_qutrit: coefficients must be 3x3");
  const ComplexMatrix s = row_transform(c);
  ComplexMatrix k0 = ComplexMatrix::zeros(3, 3);
  k0(0, 0) = s(0, 0);
  k0(1, 1) = s(0, 1);
  k0(2, 2) = s(0, 2);
  ComplexMatrix k1 = ComplexMatrix::zeros(3, 3);
  k1(1, 0) = s(1, 0);
  k1(2, 1) = s(1, 1);
  ComplexMatrix k2 = ComplexMatrix::zeros(3, 3);
  k2(0, 2) = s(1, 2);
  k2(2, 0) = s(2, 0);
  ComplexMatrix k3 = ComplexMatrix::zeros(3, 3);
  k3(0, 1) = s(2, 1);
  k3(1, 2) = s(2, 2);
  return KrausChannel::create({k0, k1, k2, k3});
}

// ── Validity conditions ─────────────────────────────────────────────────────

ConditionReport condition_report(const CoefficientMatrix& c) {
  const std::size_t d = c.d;
  ConditionReport report;
  report.beta = ComplexMatrix::zeros(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t l = 0; l < d; ++l) {
      cxd sum{0.0, 0.0};
      for (std::size_t j = 0; j < d; ++j)
        sum += c.alpha(i, wrap(j + l, d)) * std::conj(c.alpha(i, j));
      report.beta(i, l) = sum;
    }

  cxd norm_sum{0.0, 0.0};
  for (std::size_t i = 0; i < d; ++i) norm_sum += report.beta(i, 0);
  report.norm_residual = std::abs(norm_sum - cxd{1.0, 0.0});

  report.tp_residuals.resize(d - 1);
  report.unital_residuals.resize(d - 1);
  for (std::size_t l = 1; l < d; ++l) {
    cxd tp{0.0, 0.0};
    cxd uni{0.0, 0.0};
    for (std::size_t i = 0; i < d; ++i) {
      tp += report.beta(i, l);
      uni += report.beta(i, l) *
             unit_root_power(d, -static_cast<long long>(i * l));
    }
    report.tp_residuals[l - 1] = tp;
    report.unital_residuals[l - 1] = uni;
  }

  if (d == 3) {
    const cxd omega = unit_root_power(3, 1);
    report.chained = {report.beta(0, 1), omega * report.beta(1, 1),
                      omega * omega * report.beta(2, 1)};
  }
  return report;
}

double ConditionReport::max_residual() const {
  double largest = norm_residual;
  for (const cxd& z : tp_residuals) largest = std::max(largest, std::abs(z));
  for (const cxd& z : unital_residuals)
    largest = std::max(largest, std::abs(z));
  return largest;
}

bool ConditionReport::feasible(double tol) const {
  return max_residual() < tol;
}

// ── Gauge fixing ────────────────────────────────────────────────────────────

GaugeFixResult gauge_fix(const CoefficientMatrix& c, const GaugeConvention& g) {
  require(g.fixed_column < c.d, "gauge_fix: fixed column out of range");
  ComplexMatrix fixed = c.alpha;
  GaugeFixResult result;
  for (std::size_t i = 0; i < c.d; ++i) {
    const cxd pivot = c.alpha(i, g.fixed_column);
    if (std::abs(pivot) == 0.0) {
      result.unresolved_rows.push_back(i);
      continue;
    }
    const cxd rotation = std::polar(1.0, -std::arg(pivot));
    for (std::size_t j = 0; j < c.d; ++j) fixed(i, j) *= rotation;
    // Kill the residual imaginary dust on the pivot itself.
    fixed(i, g.fixed_column) = cxd{std::abs(pivot), 0.0};
  }
  result.fixed = CoefficientMatrix::create(std::move(fixed));
  return result;
}

// ── Feasible-point sampling ─────────────────────────────────────────────────

CoefficientMatrix sample_feasible(std::size_t d, std::uint64_t seed) {
  require(d >= 2, "sample_feasible: dimension must be >= 2");
  GaussianSource noise(seed);
  double best_residual = std::numeric_limits<double>::infinity();

  for (int restart = 0; restart < kNewtonRestarts; ++restart) {
    Eigen::VectorXd x(2 * d * d);
    for (Eigen::Index k = 0; k < x.size(); ++k) x(k) = noise.next();
    frobenius_normalize(x);

    for (int iter = 0; iter < kNewtonIterations; ++iter) {
      const ComplexMatrix alpha = coords_to_matrix(x, d);
      const CoefficientMatrix c = CoefficientMatrix::create(alpha);
      const Eigen::VectorXd g = constraint_values(condition_report(c), d);
      const double gnorm = g.norm();
      best_residual = std::min(best_residual, gnorm);
      if (gnorm < kNewtonTarget) return c;

      const Eigen::MatrixXd jac = constraint_jacobian(alpha);
      // Minimum-norm Newton step: delta = J^T (J J^T)^{-1} (-g).
      const Eigen::MatrixXd jjt = jac * jac.transpose();
      const Eigen::VectorXd lambda = jjt.ldlt().solve(-g);
      const Eigen::VectorXd delta = jac.transpose() * lambda;
      if (!delta.allFinite()) break;

      double step = 1.0;
      bool accepted = false;
      for (int backtrack = 0; backtrack < 20; ++backtrack) {
        Eigen::VectorXd trial = x + step * delta;
        frobenius_normalize(trial);
        if (!trial.allFinite()) {
          step *= 0.5;
          continue;
        }
        const double trial_residual = residual_norm_at(trial, d);
        if (trial_residual < gnorm * (1.0 - 0.25 * step) ||
            trial_residual < kNewtonTarget) {
          x = trial;
          accepted = true;
          break;
        }
        step *= 0.5;
      }
      if (!accepted) break;
    }
    // Final check for the last accepted iterate of this restart.
    if (residual_norm_at(x, d) < kNewtonTarget)
      return CoefficientMatrix::create(coords_to_matrix(x, d));
  }

  throw ConvergenceError(
      "sample_feasible: Newton projection failed after " +
          std::to_string(kNewtonRestarts) +
          " restarts (best residual " + std::to_string(best_residual) + ")",
      best_residual);
}

// ── Tangent dimension ───────────────────────────────────────────────────────

TangentReport tangent_report(const CoefficientMatrix& c) {
  const ConditionReport conditions = condition_report(c);
  require(conditions.feasible(1e-8),
          "tangent_report: coefficients are infeasible (max residual " +
              std::to_string(conditions.max_residual()) + ")");

  const Eigen::MatrixXd jac = constraint_jacobian(c.alpha);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
  const auto& sv = svd.singularValues();

  TangentReport report;
  report.jacobian_singular_values.assign(sv.data(), sv.data() + sv.size());
  std::sort(report.jacobian_singular_values.begin(),
            report.jacobian_singular_values.end(), std::greater<double>());
  report.jacobian_rank =
      rank_from_spectrum(report.jacobian_singular_values, RankPolicy{});
  const std::size_t ambient = 2 * c.d * c.d;
  report.dimension = ambient - report.jacobian_rank - c.d;
  return report;
}

std::size_t tangent_dimension(const CoefficientMatrix& c) {
  return tangent_report(c).dimension;
}

}  // namespace uqc
