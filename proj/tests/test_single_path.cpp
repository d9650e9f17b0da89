#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qr/closed_form.hpp"
#include "qr/fidelity.hpp"
#include "qr/single_path.hpp"

using namespace qr;

namespace {
ProtocolSpec sp_spec(Family fam, double a, double b) {
  ProtocolSpec s;
  s.channel = {fam, a, b, 0.0};
  s.mode = Mode::SinglePathMeasured;
  s.c2_basis = fam == Family::GGHZ ? plus_minus_basis() : computational_basis();
  return s;
}
}  // namespace

TEST_CASE("one teleportation hop over a Bell pair is perfect") {
  Vec bell = Vec::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const auto ks = hop_kraus(bell, derive_hop_corrections(bell));
  CHECK(completeness_dev(ks) < kTolStructural);
  CHECK(std::abs(avg_fidelity(ks) - 1.0) < kTolFormula);
}

TEST_CASE("gGHZ single path at the +/- basis reproduces Eq. 19") {
  for (const double a : {0.15, 0.3, 0.5, 0.75}) {
    const auto r = run_single_path(sp_spec(Family::GGHZ, a, 0.0));
    CHECK(r.cptp);
    CHECK(completeness_dev(r.kraus) < kTolStructural);
    CHECK(std::abs(avg_fidelity(r.kraus) - cf::eq19_gghz_single(a)) <
          kTolFormula);
  }
}

TEST_CASE("gW single path at the computational basis reproduces Eq. 23") {
  const double pts[4][2] = {{0.2, 0.3}, {1.0 / 3, 1.0 / 3}, {0.1, 0.6}, {0.5, 0.2}};
  for (const auto& pt : pts) {
    const auto r = run_single_path(sp_spec(Family::GW, pt[0], pt[1]));
    CHECK(completeness_dev(r.kraus) < kTolStructural);
    CHECK(std::abs(avg_fidelity(r.kraus) - cf::eq23_gw_single(pt[0], pt[1])) <
          kTolFormula);
  }
}

TEST_CASE("traced-out variant reproduces Eq. 24") {
  const double pts[3][2] = {{0.2, 0.3}, {1.0 / 3, 1.0 / 3}, {0.4, 0.1}};
  for (const auto& pt : pts) {
    const auto r = run_single_path_mixed(sp_spec(Family::GW, pt[0], pt[1]));
    CHECK(completeness_dev(r.kraus) < kTolStructural);
    CHECK(std::abs(avg_fidelity(r.kraus) - cf::eq24_gw_mixed(pt[0], pt[1])) <
          kTolFormula);
  }
  // gGHZ traced-out channel is classical
  const auto g = run_single_path_mixed(sp_spec(Family::GGHZ, 0.3, 0.0));
  CHECK(std::abs(avg_fidelity(g.kraus) - 2.0 / 3.0) < kTolFormula);
}

TEST_CASE("W-state values: 8/9 multipath vs 22/27 single path") {
  const double a = 1.0 / 3.0;
  const auto r = run_single_path(sp_spec(Family::GW, a, a));
  CHECK(std::abs(avg_fidelity(r.kraus) - 22.0 / 27.0) < 1e-12);
}

TEST_CASE("gGHZ single-path noise cells (Table III)") {
  for (const double a : {0.25, 0.6}) {
    for (const double p : {0.2, 0.65}) {
      for (const auto n :
           {NoiseModel::BitFlip, NoiseModel::PhaseFlip, NoiseModel::BitPhaseFlip,
            NoiseModel::AmplitudeDamping, NoiseModel::PhaseDamping}) {
        ProtocolSpec s = sp_spec(Family::GGHZ, a, 0.0);
        s.noise = n;
        s.p1 = s.p2 = p;
        const auto r = run_single_path(s);
        CHECK(r.cptp);
        CHECK(completeness_dev(r.kraus) < kTolStructural);
        CHECK(std::abs(avg_fidelity(r.kraus) - cf::table3_single(n, a, p)) <
              kTolFormula);
      }
    }
  }
}

TEST_CASE("gW single-path noise cells (Table IV)") {
  for (const double p : {0.2, 0.65}) {
    for (const auto n :
         {NoiseModel::BitFlip, NoiseModel::PhaseFlip, NoiseModel::BitPhaseFlip,
          NoiseModel::AmplitudeDamping, NoiseModel::PhaseDamping}) {
      ProtocolSpec s = sp_spec(Family::GW, 0.2, 0.3);
      s.noise = n;
      s.p1 = s.p2 = p;
      const auto r = run_single_path(s);
      CHECK(std::abs(avg_fidelity(r.kraus) - cf::table4_single(n, 0.2, 0.3, p)) <
            kTolFormula);
      // the flip/amplitude-damping branch sets are effective (fidelity-exact,
      // not trace preserving) and must be flagged as such
      const bool effective = n == NoiseModel::BitFlip ||
                             n == NoiseModel::BitPhaseFlip ||
                             n == NoiseModel::AmplitudeDamping;
      CHECK(r.cptp == !effective);
      if (r.cptp) CHECK(completeness_dev(r.kraus) < kTolStructural);
    }
  }
}

TEST_CASE("single-error gW flip class really is non-trace-preserving") {
  ProtocolSpec s = sp_spec(Family::GW, 0.2, 0.3);
  s.noise = NoiseModel::BitFlip;
  s.p1 = s.p2 = 0.3;
  const auto r = run_single_path(s);
  CHECK(completeness_dev(r.kraus) > 1e-3);  // documented deviation
}
