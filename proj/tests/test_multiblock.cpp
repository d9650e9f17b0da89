#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qr/closed_form.hpp"
#include "qr/multiblock.hpp"
#include "qr/rng.hpp"

using namespace qr;

namespace {
ProtocolSpec spec_of(Family fam, double a, double b, Mode mode) {
  ProtocolSpec s;
  s.channel = {fam, a, b, 0.0};
  s.mode = mode;
  s.c2_basis = fam == Family::GGHZ ? plus_minus_basis() : computational_basis();
  return s;
}
}  // namespace

TEST_CASE("Choi compression preserves the channel and the fidelity") {
  Rng rng(3);
  std::vector<Mat2> ks;
  for (int i = 0; i < 7; ++i) {
    Mat2 k;
    k << cxd(rng.next_normal(), rng.next_normal()),
        cxd(rng.next_normal(), rng.next_normal()),
        cxd(rng.next_normal(), rng.next_normal()),
        cxd(rng.next_normal(), rng.next_normal());
    ks.push_back(0.2 * k);
  }
  const auto comp = choi_compress(ks);
  CHECK(comp.size() <= 4);
  CHECK(std::abs(avg_fidelity(comp) - avg_fidelity(ks)) < 1e-12);
  // channel action on a random density matrix is unchanged
  Mat2 rho;
  rho << 0.7, cxd(0.1, 0.2), cxd(0.1, -0.2), 0.3;
  Mat2 out1 = Mat2::Zero(), out2 = Mat2::Zero();
  for (const auto& k : ks) out1 += k * rho * k.adjoint();
  for (const auto& k : comp) out2 += k * rho * k.adjoint();
  CHECK((out1 - out2).norm() < 1e-12);
}

TEST_CASE("single block composition is the identity operation") {
  const auto spec = spec_of(Family::GW, 0.25, 0.3, Mode::MultipathTDTC);
  const auto block = block_kraus(spec);
  CHECK(std::abs(avg_fidelity(compose_blocks(block, 1)) -
                 avg_fidelity(block)) < 1e-12);
}

TEST_CASE("gGHZ chains reproduce Eq. 26") {
  for (int m = 1; m <= 4; ++m)
    for (const double a : {0.2, 0.45, 0.7}) {
      const auto spec = spec_of(Family::GGHZ, a, 0.0, Mode::MultipathTDTC);
      CHECK(std::abs(multiblock_fidelity(spec, m) - cf::eq26_gghz_mblock(a, m)) <
            kTolFormula);
    }
}

TEST_CASE("gW chains reproduce Eq. 28 and corrected Eq. 29") {
  for (int m = 1; m <= 3; ++m) {
    const auto mp = spec_of(Family::GW, 0.2, 0.3, Mode::MultipathTDTC);
    CHECK(std::abs(multiblock_fidelity(mp, m) - cf::eq28_gw_mblock(0.2, 0.3, m)) <
          kTolFormula);
    const auto sp = spec_of(Family::GW, 0.2, 0.3, Mode::SinglePathMeasured);
    CHECK(std::abs(multiblock_fidelity(sp, m) -
                   cf::eq29_gw_single_mblock(0.2, 0.3, m)) < kTolFormula);
  }
}

TEST_CASE("fidelity decreases with m toward the classical value") {
  const auto spec = spec_of(Family::GGHZ, 0.35, 0.0, Mode::MultipathTDTC);
  double prev = 2.0;
  for (int m = 1; m <= 6; ++m) {
    const double f = multiblock_fidelity(spec, m);
    CHECK(f < prev);
    prev = f;
  }
  // Eq. 26 decays like (4 a(1-a))^m / 3; at a=0.35, m=40 the excess over the
  // classical value 2/3 is below 0.01
  CHECK(multiblock_fidelity(spec, 40) - 2.0 / 3.0 < 0.01);
  CHECK(multiblock_fidelity(spec, 40) - 2.0 / 3.0 > 0.0);
}

TEST_CASE("heterogeneous chain reproduces Eq. A3") {
  const double pts[4][2] = {{0.3, 0.7}, {0.5, 0.5}, {0.2, 0.9}, {0.44, 0.61}};
  for (const auto& pt : pts)
    CHECK(std::abs(heterogeneous_chain_sim(pt[0], pt[1]) -
                   cf::eqA3_hetero_chain(pt[0], pt[1])) < kTolFormula);
  CHECK(std::abs(heterogeneous_chain_sim(0.5, 0.5) - 1.0) < kTolFormula);
  CHECK(std::abs(cf::eqA3_hetero_chain(0.3, 0.3) - cf::eqA4_equal_alpha(0.3)) <
        1e-15);
}
