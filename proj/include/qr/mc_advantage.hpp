// Monte Carlo estimate of how often the multipath protocol beats the
// single-path protocol over randomly drawn channel parameters at a fixed
// noise strength.  Per-sample parameter draws come from a counter-based
// stream keyed by the sample index, so the tally is independent of the
// worker count and of reduction order.
#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "qr/closed_form.hpp"
#include "qr/rng.hpp"
#include "qr/states.hpp"

namespace qr {

enum class SampleMeasure { Simplex, Angles };
enum class TiePolicy { Exclude, Include };

struct AdvantageSpec {
  Family family = Family::GW;
  NoiseModel noise = NoiseModel::None;
  double p = 0.0;
  SampleMeasure measure = SampleMeasure::Simplex;
  TiePolicy ties = TiePolicy::Exclude;
  // Compare noisy multipath against the noiseless single path instead of the
  // equally-noisy one (the reading that reproduces the paper's
  // amplitude-damping percentage).
  bool noiseless_single_baseline = false;
  std::size_t n_samples = 100000;
  std::uint64_t seed = 1;
  unsigned n_threads = 0;  // 0 = hardware concurrency
};

struct AdvantageResult {
  double advantage_pct = 0.0;
  std::size_t n_advantage = 0, n_tie = 0, n_samples = 0;
  std::uint64_t seed = 0;
};

// Draw channel parameters for one sample.  Simplex: uniform over the open
// parameter simplex (alpha for gGHZ; {alpha, beta} for gW).  Angles: the
// amplitude vector uniform in spherical angles, alpha = cos^2(t1) (gGHZ) or
// alpha = cos^2(t1), beta = sin^2(t1) cos^2(t2) with t1, t2 ~ U(0, pi/2).
inline ChannelParams draw_params(Family fam, SampleMeasure measure, Rng& rng) {
  ChannelParams cp;
  cp.family = fam;
  if (measure == SampleMeasure::Simplex) {
    if (fam == Family::GGHZ) {
      cp.alpha = rng.next_double();
    } else {
      // uniform on {a, b > 0, a + b < 1} by rejection-free folding
      double u = rng.next_double(), v = rng.next_double();
      if (u + v > 1.0) {
        u = 1.0 - u;
        v = 1.0 - v;
      }
      cp.alpha = u;
      cp.beta = v;
    }
  } else {
    const double t1 = rng.next_double() * M_PI / 2.0;
    const double c1 = std::cos(t1);
    if (fam == Family::GGHZ) {
      cp.alpha = c1 * c1;
    } else {
      const double t2 = rng.next_double() * M_PI / 2.0;
      const double c2 = std::cos(t2);
      cp.alpha = c1 * c1;
      cp.beta = (1.0 - c1 * c1) * c2 * c2;
    }
  }
  return cp;
}

// Closed-form fidelities for one sampled channel.  The table expressions are
// verified branch-by-branch against the simulator elsewhere, which keeps the
// per-sample cost trivial.
inline std::pair<double, double> sample_pair(const AdvantageSpec& spec,
                                             const ChannelParams& cp) {
  const NoiseModel sp_noise =
      spec.noiseless_single_baseline ? NoiseModel::None : spec.noise;
  if (spec.family == Family::GGHZ) {
    return {cf::table3_multipath(spec.noise, cp.alpha, spec.p),
            cf::table3_single(sp_noise, cp.alpha, spec.p)};
  }
  return {cf::table4_multipath(spec.noise, cp.alpha, cp.beta, spec.p),
          cf::table4_single(sp_noise, cp.alpha, cp.beta, spec.p)};
}

inline AdvantageResult mc_advantage(const AdvantageSpec& spec) {
  const std::size_t n = spec.n_samples;
  unsigned workers = spec.n_threads ? spec.n_threads
                                    : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<std::size_t>(workers, std::max<std::size_t>(1, n));
  const Rng root(spec.seed);

  std::atomic<std::size_t> adv{0}, tie{0};
  auto work = [&](std::size_t lo, std::size_t hi) {
    std::size_t a = 0, t = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      Rng rng = root.split(i);  // per-sample stream: order-independent
      const ChannelParams cp = draw_params(spec.family, spec.measure, rng);
      const auto [mp, sp] = sample_pair(spec, cp);
      if (std::abs(mp - sp) <= 1e-12)
        ++t;
      else if (mp > sp)
        ++a;
    }
    adv += a;
    tie += t;
  };

  std::vector<std::thread> pool;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = std::min<std::size_t>(n, w * chunk);
    const std::size_t hi = std::min<std::size_t>(n, lo + chunk);
    if (lo < hi) pool.emplace_back(work, lo, hi);
  }
  for (auto& th : pool) th.join();

  AdvantageResult res;
  res.n_advantage = adv.load();
  res.n_tie = tie.load();
  res.n_samples = n;
  res.seed = spec.seed;
  const std::size_t denom =
      spec.ties == TiePolicy::Exclude ? n - res.n_tie : n;
  res.advantage_pct = denom ? 100.0 * double(res.n_advantage) / double(denom)
                            : 0.0;
  return res;
}

}  // namespace qr
