// Dense complex linear algebra on few-qubit registers: tensor products,
// operator application on selected qubits, projective measurement branching,
// and partial trace.  Qubit 0 is the leftmost ket label (most significant bit
// of the amplitude index); registers never exceed 7 qubits here.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qr {

using cxd = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using Mat2 = Eigen::Matrix2cd;
using Vec2 = Eigen::Vector2cd;

inline constexpr double kTolStructural = 1e-10;   // structural checks
inline constexpr double kTolNorm = 1e-12;         // normalization checks
inline constexpr double kTolFormula = 1e-9;       // formula-vs-simulation

// Kronecker product of two matrices (row-major index convention).
inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Vec kron_vec(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

inline int num_qubits_of(const Vec& state) {
  int n = 0;
  while ((Eigen::Index(1) << n) < state.size()) ++n;
  if ((Eigen::Index(1) << n) != state.size())
    throw std::invalid_argument("state dimension is not a power of two");
  return n;
}

// Apply a 2^k x 2^k operator on the ordered qubit list `targets` of an
// n-qubit pure state (identity elsewhere).  targets[0] is the most
// significant bit of the operator's index.
inline Vec apply_on_qubits(const Vec& state, const Mat& op,
                           const std::vector<int>& targets, int n) {
  const int k = static_cast<int>(targets.size());
  if (op.rows() != (1 << k) || op.cols() != (1 << k))
    throw std::invalid_argument("operator dimension mismatch");
  for (int t : targets)
    if (t < 0 || t >= n) throw std::invalid_argument("target out of range");
  for (size_t i = 0; i < targets.size(); ++i)
    for (size_t j = i + 1; j < targets.size(); ++j)
      if (targets[i] == targets[j])
        throw std::invalid_argument("duplicate target qubit");

  const Eigen::Index dim = Eigen::Index(1) << n;
  Vec out = Vec::Zero(dim);
  // bit position (from MSB) of qubit t is t; shift = n-1-t.
  std::vector<int> shift(targets.size());
  for (size_t i = 0; i < targets.size(); ++i) shift[i] = n - 1 - targets[i];

  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    // row index into op from the target bits of idx
    int row = 0;
    for (size_t i = 0; i < targets.size(); ++i)
      row = (row << 1) | static_cast<int>((idx >> shift[i]) & 1);
    for (int col = 0; col < (1 << k); ++col) {
      const cxd c = op(row, col);
      if (c == cxd(0, 0)) continue;
      // source index: idx with target bits replaced by col's bits
      Eigen::Index src = idx;
      for (size_t i = 0; i < targets.size(); ++i) {
        const Eigen::Index bit = (col >> (k - 1 - static_cast<int>(i))) & 1;
        src = (src & ~(Eigen::Index(1) << shift[i])) | (bit << shift[i]);
      }
      out(idx) += c * state(src);
    }
  }
  return out;
}

// Same-kind overload for density matrices: U rho U^dagger with U extended by
// identity on non-target qubits.
inline Mat apply_on_qubits(const Mat& rho, const Mat& op,
                           const std::vector<int>& targets, int n) {
  const Eigen::Index dim = Eigen::Index(1) << n;
  Mat big = Mat::Identity(dim, dim);
  // build the extended operator column by column via the pure-state routine
  Mat ext(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    Vec e = Vec::Zero(dim);
    e(c) = 1.0;
    ext.col(c) = apply_on_qubits(e, op, targets, n);
  }
  return ext * rho * ext.adjoint();
}

// Project the ordered qubit list `targets` onto <bra| and return the residual
// (unnormalized) state on the remaining qubits, kept in ascending qubit
// order.  bra has dimension 2^|targets|; bra[0..] indexed with targets[0] as
// the most significant bit.
inline Vec project_out(const Vec& state, const Vec& bra,
                       const std::vector<int>& targets, int n) {
  const int k = static_cast<int>(targets.size());
  if (bra.size() != (Eigen::Index(1) << k))
    throw std::invalid_argument("bra dimension mismatch");
  const int m = n - k;
  const Eigen::Index dim = Eigen::Index(1) << n;
  Vec out = Vec::Zero(Eigen::Index(1) << m);

  std::vector<int> tshift(targets.size());
  for (size_t i = 0; i < targets.size(); ++i) tshift[i] = n - 1 - targets[i];
  std::vector<bool> is_target(n, false);
  for (int t : targets) is_target[t] = true;
  std::vector<int> rest;  // remaining qubits in ascending order
  for (int q = 0; q < n; ++q)
    if (!is_target[q]) rest.push_back(q);

  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    int j = 0;
    for (size_t i = 0; i < targets.size(); ++i)
      j = (j << 1) | static_cast<int>((idx >> tshift[i]) & 1);
    Eigen::Index r = 0;
    for (int q : rest) r = (r << 1) | ((idx >> (n - 1 - q)) & 1);
    out(r) += std::conj(bra(j)) * state(idx);
  }
  return out;
}

// Partial trace of an n-qubit density matrix keeping the listed qubits (in
// the order given).
inline Mat partial_trace(const Mat& rho, const std::vector<int>& keep, int n) {
  for (int q : keep)
    if (q < 0 || q >= n) throw std::invalid_argument("keep index out of range");
  const int m = static_cast<int>(keep.size());
  const Eigen::Index dim = Eigen::Index(1) << n;
  Mat out = Mat::Zero(Eigen::Index(1) << m, Eigen::Index(1) << m);
  std::vector<bool> kept(n, false);
  for (int q : keep) kept[q] = true;
  std::vector<int> traced;
  for (int q = 0; q < n; ++q)
    if (!kept[q]) traced.push_back(q);

  auto sub_index = [&](Eigen::Index full, const std::vector<int>& qs) {
    Eigen::Index s = 0;
    for (int q : qs) s = (s << 1) | ((full >> (n - 1 - q)) & 1);
    return s;
  };
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      if (sub_index(i, traced) != sub_index(j, traced)) continue;
      out(sub_index(i, keep), sub_index(j, keep)) += rho(i, j);
    }
  }
  return out;
}

// One projective-measurement branch: outcome index into the basis, outcome
// probability, and the unnormalized post-measurement residual state.
struct MeasurementBranch {
  int outcome;
  double probability;
  Vec post_state;  // unnormalized residual on the unmeasured qubits
};

// Measure the listed qubits in an orthonormal basis (vector list over 2^k).
inline std::vector<MeasurementBranch> measure(
    const Vec& state, const std::vector<Vec>& basis,
    const std::vector<int>& targets, int n) {
  const int k = static_cast<int>(targets.size());
  if (basis.size() != size_t(1) << k)
    throw std::invalid_argument("incomplete measurement basis");
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < basis.size(); ++j) {
      const cxd ip = basis[i].adjoint() * basis[j];
      const double want = (i == j) ? 1.0 : 0.0;
      if (std::abs(ip - want) > kTolStructural)
        throw std::invalid_argument("basis not orthonormal");
    }
  }
  std::vector<MeasurementBranch> out;
  out.reserve(basis.size());
  for (size_t b = 0; b < basis.size(); ++b) {
    Vec post = project_out(state, basis[b], targets, n);
    out.push_back({static_cast<int>(b), post.squaredNorm(), std::move(post)});
  }
  return out;
}

}  // namespace qr
