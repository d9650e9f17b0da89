// Channel-state constructors (gGHZ, gW), Pauli operators, the Bell basis,
// and the (x, theta) rank-one measurement basis.
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "qr/tensor.hpp"

namespace qr {

enum class Family { GGHZ, GW };

struct ChannelParams {
  Family family = Family::GGHZ;
  double alpha = 0.5;
  double beta = 0.0;  // gW only
  double phi = 0.0;   // gGHZ only
};

inline Mat2 pauli_i() { return Mat2::Identity(); }
inline Mat2 pauli_x() {
  Mat2 m;
  m << 0, 1, 1, 0;
  return m;
}
inline Mat2 pauli_y() {
  Mat2 m;
  m << 0, cxd(0, -1), cxd(0, 1), 0;
  return m;
}
inline Mat2 pauli_z() {
  Mat2 m;
  m << 1, 0, 0, -1;
  return m;
}

// Pauli group in the fixed tie-break order I < X < Y < Z.
inline const std::array<Mat2, 4>& paulis() {
  static const std::array<Mat2, 4> p = {pauli_i(), pauli_x(), pauli_y(),
                                        pauli_z()};
  return p;
}
inline const char* pauli_name(int i) {
  static const char* names[] = {"I", "X", "Y", "Z"};
  return names[i];
}

// Bell outcomes in fixed order: phi+, phi-, psi+, psi-.
enum BellOutcome { kPhiPlus = 0, kPhiMinus = 1, kPsiPlus = 2, kPsiMinus = 3 };

inline const std::array<Vec, 4>& bell_basis() {
  static const std::array<Vec, 4> basis = [] {
    const double s2 = 1.0 / std::sqrt(2.0);
    std::array<Vec, 4> b;
    for (auto& v : b) v = Vec::Zero(4);
    b[kPhiPlus](0) = s2;
    b[kPhiPlus](3) = s2;
    b[kPhiMinus](0) = s2;
    b[kPhiMinus](3) = -s2;
    b[kPsiPlus](1) = s2;
    b[kPsiPlus](2) = s2;
    b[kPsiMinus](1) = s2;
    b[kPsiMinus](2) = -s2;
    return b;
  }();
  return basis;
}

inline bool bell_is_psi(int b) { return b >= 2; }   // psi class
inline bool bell_is_minus(int b) { return b & 1; }  // minus sign

// |gGHZ(alpha,phi)> = sqrt(alpha)|000> + sqrt(1-alpha) e^{i phi} |111>
inline Vec make_gghz(double alpha, double phi = 0.0) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("gGHZ requires 0 < alpha < 1");
  Vec v = Vec::Zero(8);
  v(0) = std::sqrt(alpha);
  v(7) = std::sqrt(1.0 - alpha) * std::exp(cxd(0, phi));
  return v;
}

// |gW(alpha,beta)> = sqrt(alpha)|001> + sqrt(beta)|010> + sqrt(gamma)|100>
inline Vec make_gw(double alpha, double beta) {
  if (!(alpha > 0.0 && beta > 0.0 && alpha + beta < 1.0))
    throw std::invalid_argument("gW requires alpha,beta>0 and alpha+beta<1");
  Vec v = Vec::Zero(8);
  v(1) = std::sqrt(alpha);
  v(2) = std::sqrt(beta);
  v(4) = std::sqrt(1.0 - alpha - beta);
  return v;
}

inline Vec make_channel_state(const ChannelParams& cp) {
  return cp.family == Family::GGHZ ? make_gghz(cp.alpha, cp.phi)
                                   : make_gw(cp.alpha, cp.beta);
}

// Second copy of the channel state with party roles (B, C1', C2') mapped to
// register order (C1', C2', B): out[x0 x1 x2] = in[x2 x0 x1].
inline Vec mirror_copy(const Vec& chan) {
  Vec out = Vec::Zero(8);
  for (int x0 = 0; x0 < 2; ++x0)
    for (int x1 = 0; x1 < 2; ++x1)
      for (int x2 = 0; x2 < 2; ++x2)
        out(4 * x0 + 2 * x1 + x2) = chan(4 * x2 + 2 * x0 + x1);
  return out;
}

// Rank-one projective basis of Eqs. 15-16:
// |M>  = sqrt(x)|0> + e^{i theta} sqrt(1-x)|1>
// |M_> = sqrt(1-x)|0> - sqrt(x) e^{i theta}|1>
inline std::array<Vec, 2> mbasis(double x, double theta) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::invalid_argument("mbasis requires 0 <= x <= 1");
  std::array<Vec, 2> b;
  b[0] = Vec::Zero(2);
  b[1] = Vec::Zero(2);
  const cxd ph = std::exp(cxd(0, theta));
  b[0](0) = std::sqrt(x);
  b[0](1) = ph * std::sqrt(1.0 - x);
  b[1](0) = std::sqrt(1.0 - x);
  b[1](1) = -std::sqrt(x) * ph;
  return b;
}

inline std::array<Vec, 2> computational_basis() { return mbasis(1.0, 0.0); }
inline std::array<Vec, 2> plus_minus_basis() { return mbasis(0.5, 0.0); }

}  // namespace qr
