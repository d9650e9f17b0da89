// Haar-average fidelity (exact trace formula and Monte Carlo oracle),
// Schmidt decomposition, singlet-fraction conversions, and the (x, theta)
// basis optimizer.
#pragma once

#include <functional>
#include <vector>

#include "qr/protocol.hpp"
#include "qr/rng.hpp"
#include "qr/single_path.hpp"

namespace qr {

// Exact Haar average over single-qubit inputs of sum_i |<psi|K_i|psi>|^2 for
// a Kraus family: F = sum_i (|tr K_i|^2 + tr(K_i^dag K_i)) / 6.
inline double avg_fidelity(const std::vector<Mat2>& kraus) {
  double f = 0.0;
  for (const auto& K : kraus) {
    f += std::norm(K.trace()) + (K.adjoint() * K).trace().real();
  }
  return f / 6.0;
}

inline double avg_fidelity(const std::vector<BranchOperator>& branches) {
  double f = 0.0;
  for (const auto& br : branches)
    f += std::norm(br.K.trace()) + (br.K.adjoint() * br.K).trace().real();
  return f / 6.0;
}

inline double completeness_dev(const std::vector<Mat2>& kraus) {
  Mat2 s = Mat2::Zero();
  for (const auto& K : kraus) s += K.adjoint() * K;
  return (s - Mat2::Identity()).cwiseAbs().maxCoeff();
}

inline double completeness_dev(const std::vector<BranchOperator>& branches) {
  Mat2 s = Mat2::Zero();
  for (const auto& br : branches) s += br.K.adjoint() * br.K;
  return (s - Mat2::Identity()).cwiseAbs().maxCoeff();
}

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t seed = 0;
  std::size_t n_samples = 0;
};

// Monte Carlo oracle for avg_fidelity: Haar-random inputs, per-sample
// fidelity sum_i |<psi|K_i|psi>|^2.
inline McEstimate mc_fidelity(const std::vector<Mat2>& kraus,
                              std::size_t n_samples, std::uint64_t seed) {
  Rng rng(seed);
  double sum = 0.0, sumsq = 0.0;
  for (std::size_t s = 0; s < n_samples; ++s) {
    const Vec2 psi = haar_qubit(rng);
    double f = 0.0;
    for (const auto& K : kraus) f += std::norm(psi.dot(K * psi));
    sum += f;
    sumsq += f * f;
  }
  const double mean = sum / double(n_samples);
  const double var =
      (sumsq / double(n_samples) - mean * mean) / double(n_samples - 1);
  return {mean, std::sqrt(std::max(0.0, var)), seed, n_samples};
}

struct SchmidtData {
  double lambda_plus = 1.0, lambda_minus = 0.0;
  Vec2 left_plus, left_minus, right_plus, right_minus;
};

// Schmidt decomposition of a normalized two-qubit pure state.
inline SchmidtData schmidt(const Vec& two_qubit) {
  Mat2 M;
  M << two_qubit(0), two_qubit(1), two_qubit(2), two_qubit(3);
  Eigen::JacobiSVD<Mat2> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SchmidtData s;
  const double s0 = svd.singularValues()(0), s1 = svd.singularValues()(1);
  s.lambda_plus = s0 * s0;
  s.lambda_minus = s1 * s1;
  s.left_plus = svd.matrixU().col(0);
  s.left_minus = svd.matrixU().col(1);
  s.right_plus = svd.matrixV().col(0).conjugate();
  s.right_minus = svd.matrixV().col(1).conjugate();
  return s;
}

// Maximal singlet fraction of a pure two-qubit state (Eq. 20 context):
// F_max = (1 + 2 sqrt(lambda+ lambda-)) / 2.
inline double singlet_fraction(const SchmidtData& s) {
  return 0.5 * (1.0 + 2.0 * std::sqrt(s.lambda_plus * s.lambda_minus));
}

// Teleportation fidelity from singlet fraction (Eq. 21): f = (2F + 1)/3.
inline double fidelity_from_F(double F) { return (2.0 * F + 1.0) / 3.0; }

struct BasisOptimum {
  double x = 0.0, theta = 0.0, value = 0.0;
};

// Grid search over [0,1] x [0,2pi) followed by golden-section refinement on
// each coordinate; deterministic tie-break toward smaller x, then smaller
// theta.
inline BasisOptimum optimize_basis(
    const std::function<double(double, double)>& objective, int grid = 41) {
  BasisOptimum best;
  best.value = -1e300;
  const double two_pi = 2.0 * M_PI;
  for (int i = 0; i < grid; ++i) {
    const double x = double(i) / double(grid - 1);
    for (int j = 0; j < grid; ++j) {
      const double th = two_pi * double(j) / double(grid);
      const double v = objective(x, th);
      if (v > best.value + 1e-12) best = {x, th, v};
    }
  }
  auto golden = [](const std::function<double(double)>& f, double lo,
                   double hi) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 80; ++it) {
      // ">=" keeps ties drifting toward the lower end (smaller x / theta)
      if (fc >= fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - gr * (b - a);
        fc = f(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + gr * (b - a);
        fd = f(d);
      }
    }
    return 0.5 * (a + b);
  };
  const double dx = 1.0 / double(grid - 1);
  const double dth = two_pi / double(grid);
  for (int round = 0; round < 3; ++round) {
    const double th_fixed = best.theta;
    best.x = golden([&](double x) { return objective(x, th_fixed); },
                    std::max(0.0, best.x - dx), std::min(1.0, best.x + dx));
    const double x_fixed = best.x;
    best.theta =
        golden([&](double th) { return objective(x_fixed, th); },
               std::max(0.0, best.theta - dth),
               std::min(two_pi, best.theta + dth));
    best.value = objective(best.x, best.theta);
  }
  return best;
}

}  // namespace qr
