// Splittable counter-based random number generation (splitmix64 core).
// Every Monte Carlo consumer receives an explicitly derived stream, so
// results are bit-reproducible regardless of worker count.
#pragma once

#include <cmath>
#include <cstdint>

#include "qr/tensor.hpp"

namespace qr {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return splitmix64_next(state_); }

  // uniform in [0,1)
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // standard normal (Box-Muller; consumes exactly two uniforms per pair)
  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = next_double(), u2 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * M_PI * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  // Derive an independent stream for work item `index` without advancing
  // this generator (counter-based split).
  Rng split(std::uint64_t index) const {
    std::uint64_t s = state_ ^ (0x9e3779b97f4a7c15ULL * (index + 1));
    splitmix64_next(s);  // decorrelate
    return Rng(s);
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Haar-random single-qubit pure state: four independent standard normals,
// normalized (exactly uniform on the amplitude 3-sphere).
inline Vec2 haar_qubit(Rng& rng) {
  const double x0 = rng.next_normal(), x1 = rng.next_normal();
  const double x2 = rng.next_normal(), x3 = rng.next_normal();
  Vec2 v;
  v << cxd(x0, x1), cxd(x2, x3);
  const double n = std::sqrt(v.squaredNorm());
  return v / n;
}

}  // namespace qr
