#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qr/closed_form.hpp"
#include "qr/fidelity.hpp"
#include "qr/protocol.hpp"

using namespace qr;

namespace {
ProtocolSpec gghz_spec(double a, double phi = 0.0) {
  ProtocolSpec s;
  s.channel = {Family::GGHZ, a, 0.0, phi};
  return s;
}
ProtocolSpec gw_spec(double a, double b) {
  ProtocolSpec s;
  s.channel = {Family::GW, a, b, 0.0};
  return s;
}
}  // namespace

TEST_CASE("noiseless gGHZ TD-TC reproduces Eq. 9") {
  for (double a = 0.1; a < 0.95; a += 0.1) {
    const auto brs = run_tdtc(gghz_spec(a));
    CHECK(completeness_dev(brs) < kTolStructural);
    CHECK(std::abs(avg_fidelity(brs) - cf::eq9_gghz_tdtc(a)) < kTolFormula);
  }
  CHECK(std::abs(avg_fidelity(run_tdtc(gghz_spec(0.5))) - 1.0) < kTolFormula);
}

TEST_CASE("phase handling: Eq. 8 without absorption, Eq. 9 with") {
  for (const double phi : {0.4, 1.3, 2.8}) {
    ProtocolSpec s = gghz_spec(0.3, phi);
    s.phase_absorption = false;
    CHECK(std::abs(avg_fidelity(run_tdtc(s)) - cf::eq8_gghz_phase(0.3, phi)) <
          kTolFormula);
    s.phase_absorption = true;
    CHECK(std::abs(avg_fidelity(run_tdtc(s)) - cf::eq9_gghz_tdtc(0.3)) <
          kTolFormula);
  }
}

TEST_CASE("noiseless gW TD-TC reproduces Eq. 12") {
  const double pts[4][2] = {{0.2, 0.3}, {1.0 / 3, 1.0 / 3}, {0.1, 0.7}, {0.5, 0.25}};
  for (const auto& pt : pts) {
    const auto brs = run_tdtc(gw_spec(pt[0], pt[1]));
    CHECK(completeness_dev(brs) < kTolStructural);
    CHECK(std::abs(avg_fidelity(brs) - cf::eq12_gw_tdtc(pt[0], pt[1])) <
          kTolFormula);
  }
}

TEST_CASE("derived corrections match the closed-form gGHZ rule on support") {
  const auto table = derive_bob_corrections({Family::GGHZ, 0.3, 0.0, 0.0});
  for (const auto& [key, pauli] : table) {
    const auto [a, c1, c2] = key;
    CHECK(pauli == gghz_correction_pauli(a, c1, c2));
  }
  // noiseless support: eight (c1,c2) outcomes per Alice outcome
  CHECK(table.size() == 4 * 8);
}

TEST_CASE("noisy TD-TC branch sets stay trace preserving") {
  for (const auto n : {NoiseModel::BitFlip, NoiseModel::PhaseFlip,
                       NoiseModel::BitPhaseFlip, NoiseModel::AmplitudeDamping,
                       NoiseModel::PhaseDamping}) {
    ProtocolSpec s = gw_spec(0.2, 0.3);
    s.noise = n;
    s.p1 = s.p2 = 0.35;
    CHECK(completeness_dev(run_tdtc(s)) < kTolStructural);
  }
}

TEST_CASE("rectification restores the noiseless gGHZ value") {
  for (const double p : {0.15, 0.5, 0.85}) {
    ProtocolSpec s = gghz_spec(0.25);
    s.p1 = s.p2 = p;
    s.noise = NoiseModel::BitFlip;
    s.policy = CorrectionPolicy::BitFlipRectify;
    CHECK(std::abs(avg_fidelity(run_tdtc(s)) - cf::eq9_gghz_tdtc(0.25)) <
          kTolFormula);
    s.noise = NoiseModel::BitPhaseFlip;
    s.policy = CorrectionPolicy::BitPhaseFlipRectify;
    CHECK(std::abs(avg_fidelity(run_tdtc(s)) - cf::eq9_gghz_tdtc(0.25)) <
          kTolFormula);
  }
}

TEST_CASE("bit-phase rectifier is sigma_z times the bit-flip rectifier") {
  for (int c1 = 0; c1 < 4; ++c1)
    for (int c2 = 0; c2 < 4; ++c2) {
      if (bell_is_psi(c1) == bell_is_psi(c2)) {
        CHECK(rectify_pauli(c1, c2) == -1);
        continue;
      }
      const Mat2 ubf =
          bob_correction(Family::GGHZ, CorrectionPolicy::BitFlipRectify, 0, c1, c2);
      const Mat2 ubpf = bob_correction(
          Family::GGHZ, CorrectionPolicy::BitPhaseFlipRectify, 0, c1, c2);
      CHECK((ubpf - pauli_z() * ubf).norm() < 1e-14);
    }
}

TEST_CASE("outcome-correlation classifier") {
  auto branches = [](NoiseModel n) {
    ProtocolSpec s = gghz_spec(0.4);
    s.noise = n;
    s.p1 = s.p2 = 0.25;
    return run_tdtc(s);
  };
  CHECK(detect_noise_class(branches(NoiseModel::None)) ==
        NoiseClass::SameBellClass);
  CHECK(detect_noise_class(branches(NoiseModel::PhaseFlip)) ==
        NoiseClass::SameBellClass);
  CHECK(detect_noise_class(branches(NoiseModel::PhaseDamping)) ==
        NoiseClass::SameBellClass);
  // flips: the flipped component carries the cross-class signature
  CHECK(detect_noise_class(
            flip_component_branches(branches(NoiseModel::BitFlip))) ==
        NoiseClass::OppositeBellClass);
  CHECK(detect_noise_class(
            flip_component_branches(branches(NoiseModel::BitPhaseFlip))) ==
        NoiseClass::OppositeBellClass);
  CHECK(detect_noise_class(branches(NoiseModel::AmplitudeDamping)) ==
        NoiseClass::Mixed);
}

TEST_CASE("Table III and IV multipath spot cells") {
  // gGHZ phase flip
  {
    ProtocolSpec s = gghz_spec(0.3);
    s.noise = NoiseModel::PhaseFlip;
    s.p1 = s.p2 = 0.2;
    CHECK(std::abs(avg_fidelity(run_tdtc(s)) -
                   cf::table3_multipath(NoiseModel::PhaseFlip, 0.3, 0.2)) <
          kTolFormula);
  }
  // gGHZ amplitude damping (the cell that fixes the noise placement)
  {
    ProtocolSpec s = gghz_spec(0.3);
    s.noise = NoiseModel::AmplitudeDamping;
    s.p1 = s.p2 = 0.4;
    CHECK(std::abs(avg_fidelity(run_tdtc(s)) -
                   cf::table3_multipath(NoiseModel::AmplitudeDamping, 0.3, 0.4)) <
          kTolFormula);
  }
  // gW bit flip and amplitude damping
  for (const auto n : {NoiseModel::BitFlip, NoiseModel::AmplitudeDamping}) {
    ProtocolSpec s = gw_spec(0.2, 0.3);
    s.noise = n;
    s.p1 = s.p2 = 0.3;
    CHECK(std::abs(avg_fidelity(run_tdtc(s)) -
                   cf::table4_multipath(n, 0.2, 0.3, 0.3)) < kTolFormula);
  }
}
