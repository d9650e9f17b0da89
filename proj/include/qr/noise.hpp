// The five Appendix-B single-qubit noise channels as labeled Kraus families.
// Convention (Appendix B, literal): flip channels keep the state with
// probability p and flip with 1-p; damping channels damp with probability p.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "qr/states.hpp"

namespace qr {

enum class NoiseModel {
  None,
  BitFlip,
  PhaseFlip,
  BitPhaseFlip,
  AmplitudeDamping,
  PhaseDamping
};

struct NoiseChannel {
  NoiseModel name = NoiseModel::None;
  double p = 0.0;
  // (label, operator); label 0 is the "no event" element.
  std::vector<std::pair<int, Mat2>> kraus;
};

inline NoiseChannel make_noise(NoiseModel name, double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("noise parameter p must lie in [0,1]");
  NoiseChannel ch;
  ch.name = name;
  ch.p = p;
  switch (name) {
    case NoiseModel::None:
      ch.kraus = {{0, pauli_i()}};
      break;
    case NoiseModel::BitFlip:
      ch.kraus = {{0, std::sqrt(p) * pauli_i()},
                  {1, std::sqrt(1.0 - p) * pauli_x()}};
      break;
    case NoiseModel::PhaseFlip:
      ch.kraus = {{0, std::sqrt(p) * pauli_i()},
                  {1, std::sqrt(1.0 - p) * pauli_z()}};
      break;
    case NoiseModel::BitPhaseFlip:
      ch.kraus = {{0, std::sqrt(p) * pauli_i()},
                  {1, std::sqrt(1.0 - p) * pauli_y()}};
      break;
    case NoiseModel::AmplitudeDamping: {
      Mat2 m0 = Mat2::Zero(), m1 = Mat2::Zero();
      m0(0, 0) = 1.0;
      m0(1, 1) = std::sqrt(1.0 - p);
      m1(0, 1) = std::sqrt(p);
      ch.kraus = {{0, m0}, {1, m1}};
      break;
    }
    case NoiseModel::PhaseDamping: {
      Mat2 m1 = Mat2::Zero(), m2 = Mat2::Zero();
      m1(0, 0) = std::sqrt(p);
      m2(1, 1) = std::sqrt(p);
      ch.kraus = {{0, std::sqrt(1.0 - p) * pauli_i()}, {1, m1}, {2, m2}};
      break;
    }
  }
  return ch;
}

inline double kraus_completeness_dev(const NoiseChannel& ch) {
  Mat2 s = Mat2::Zero();
  for (const auto& [j, k] : ch.kraus) s += k.adjoint() * k;
  return (s - Mat2::Identity()).cwiseAbs().maxCoeff();
}

inline NoiseModel parse_noise(const std::string& s) {
  if (s == "none") return NoiseModel::None;
  if (s == "bitflip") return NoiseModel::BitFlip;
  if (s == "phaseflip") return NoiseModel::PhaseFlip;
  if (s == "bitphaseflip") return NoiseModel::BitPhaseFlip;
  if (s == "ampdamp") return NoiseModel::AmplitudeDamping;
  if (s == "phasedamp") return NoiseModel::PhaseDamping;
  throw std::invalid_argument("unknown noise model: " + s);
}

inline std::string noise_name(NoiseModel m) {
  switch (m) {
    case NoiseModel::None: return "none";
    case NoiseModel::BitFlip: return "bitflip";
    case NoiseModel::PhaseFlip: return "phaseflip";
    case NoiseModel::BitPhaseFlip: return "bitphaseflip";
    case NoiseModel::AmplitudeDamping: return "ampdamp";
    case NoiseModel::PhaseDamping: return "phasedamp";
  }
  return "?";
}

}  // namespace qr
