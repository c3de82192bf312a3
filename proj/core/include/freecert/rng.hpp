#ifndef FREECERT_RNG_HPP
#define FREECERT_RNG_HPP

#include <cmath>
#include <cstdint>

namespace freecert {

// Counter-based generator: stream(seed, i) is a pure function of (seed, i),
// so sampling is reproducible under any evaluation order or concurrency.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // uniform in [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // standard normal, Box-Muller
  double gauss() {
    double u1 = uniform(), u2 = uniform();
    while (u1 == 0.0) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

// Derives a decorrelated child stream; used to split sample streams.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mix(seed ^ (0x5851f42d4c957f2dULL * (index + 1)));
  mix.next();
  return mix;
}

}  // namespace freecert

#endif  // FREECERT_RNG_HPP
