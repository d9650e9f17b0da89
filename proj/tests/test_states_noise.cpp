#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qr/noise.hpp"
#include "qr/rng.hpp"
#include "qr/states.hpp"

using namespace qr;

TEST_CASE("channel-state amplitudes") {
  const Vec g = make_gghz(0.36, 0.7);
  CHECK(std::abs(g(0) - cxd(0.6)) < 1e-14);
  CHECK(std::abs(std::abs(g(7)) - 0.8) < 1e-14);
  CHECK(std::abs(std::arg(g(7)) - 0.7) < 1e-14);
  CHECK(std::abs(g.squaredNorm() - 1.0) < kTolNorm);

  const Vec w = make_gw(0.25, 0.5);
  CHECK(std::abs(w(1) - cxd(0.5)) < 1e-14);              // |001>
  CHECK(std::abs(w(2) - cxd(std::sqrt(0.5))) < 1e-14);   // |010>
  CHECK(std::abs(w(4) - cxd(0.5)) < 1e-14);              // |100>
  CHECK(std::abs(w.squaredNorm() - 1.0) < kTolNorm);

  CHECK_THROWS_AS(make_gghz(0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_gghz(1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_gw(0.5, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(make_gw(-0.1, 0.3), std::invalid_argument);
}

TEST_CASE("mirror copy index permutation") {
  Vec v(8);
  for (int i = 0; i < 8; ++i) v(i) = cxd(i, -i);
  const Vec m = mirror_copy(v);
  for (int x0 = 0; x0 < 2; ++x0)
    for (int x1 = 0; x1 < 2; ++x1)
      for (int x2 = 0; x2 < 2; ++x2)
        CHECK(std::abs(m(4 * x0 + 2 * x1 + x2) -
                       v(4 * x2 + 2 * x0 + x1)) < 1e-15);
}

TEST_CASE("mbasis is orthonormal everywhere") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto b = mbasis(rng.next_double(), 2 * M_PI * rng.next_double());
    CHECK(std::abs(b[0].squaredNorm() - 1.0) < kTolNorm);
    CHECK(std::abs(b[1].squaredNorm() - 1.0) < kTolNorm);
    CHECK(std::abs(cxd(b[0].adjoint() * b[1])) < kTolNorm);
  }
  const auto comp = computational_basis();
  CHECK(std::abs(comp[0](0) - cxd(1)) < 1e-15);
  CHECK(std::abs(comp[1](1) + cxd(1)) < 1e-15);  // |M_> = -|1> at x=1
}

TEST_CASE("noise channels are trace preserving for all p") {
  Rng rng(11);
  const NoiseModel models[] = {NoiseModel::None,         NoiseModel::BitFlip,
                               NoiseModel::PhaseFlip,    NoiseModel::BitPhaseFlip,
                               NoiseModel::AmplitudeDamping,
                               NoiseModel::PhaseDamping};
  for (int i = 0; i < 100; ++i) {
    const double p = rng.next_double();
    for (const auto m : models)
      CHECK(kraus_completeness_dev(make_noise(m, p)) < kTolNorm);
  }
  // flip channels keep the state with probability p (Appendix B literal)
  const auto bf1 = make_noise(NoiseModel::BitFlip, 1.0);
  CHECK((bf1.kraus[0].second - Mat2::Identity()).norm() < 1e-15);
  CHECK(bf1.kraus[1].second.norm() < 1e-15);
  // damping channels are inactive at p=0
  const auto ad0 = make_noise(NoiseModel::AmplitudeDamping, 0.0);
  CHECK((ad0.kraus[0].second - Mat2::Identity()).norm() < 1e-15);
  CHECK(ad0.kraus[1].second.norm() < 1e-15);
  CHECK_THROWS_AS(make_noise(NoiseModel::BitFlip, 1.5), std::invalid_argument);
}

TEST_CASE("noise model name round trip") {
  for (const auto m : {NoiseModel::None, NoiseModel::BitFlip,
                       NoiseModel::PhaseFlip, NoiseModel::BitPhaseFlip,
                       NoiseModel::AmplitudeDamping, NoiseModel::PhaseDamping})
    CHECK(parse_noise(noise_name(m)) == m);
  CHECK_THROWS_AS(parse_noise("gauss"), std::invalid_argument);
}

TEST_CASE("Haar qubit sampling moments") {
  Rng rng(2024);
  const int n = 200000;
  double m2 = 0, m4 = 0, cross = 0;
  for (int i = 0; i < n; ++i) {
    const Vec2 v = haar_qubit(rng);
    const double a2 = std::norm(v(0)), b2 = std::norm(v(1));
    m2 += a2;
    m4 += a2 * a2;
    cross += a2 * b2;
  }
  m2 /= n;
  m4 /= n;
  cross /= n;
  CHECK(std::abs(m2 - 0.5) < 0.005);         // E|a|^2 = 1/2
  CHECK(std::abs(m4 - 1.0 / 3.0) < 0.005);   // E|a|^4 = 1/3
  CHECK(std::abs(cross - 1.0 / 6.0) < 0.005);  // E|a|^2|b|^2 = 1/6
}

TEST_CASE("rng determinism and stream splitting") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  Rng base(42);
  Rng s0 = base.split(0), s1 = base.split(1);
  CHECK(s0.next_u64() != s1.next_u64());
  // splitting does not advance the parent
  Rng base2(42);
  (void)base.split(7);
  CHECK(base.next_u64() == base2.next_u64());
}
