#ifndef ACCUT_RNG_HPP
#define ACCUT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace accut {

// Deterministic random stream. Every randomized choice in the solver draws
// from this wrapper, never from library distributions, so a run depends only
// on its seed and not on platform details or thread scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on {0, 1}.
  int coin() { return static_cast<int>(engine_() >> 63); }

  // Uniform on [0, 1).
  double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller; consumes two draws per call.
  double next_gaussian() {
    double u1 = next_unit();
    double u2 = next_unit();
    double radius = std::sqrt(-2.0 * std::log1p(-u1));
    return radius * std::cos(6.283185307179586 * u2);
  }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; the basis for derived-seed construction.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Derives an independent stream seed from a master seed and up to two indices
// (restart number, population round, member slot). Members computed on
// different threads get identical streams regardless of scheduling.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
  return mix64(mix64(mix64(master) ^ a) ^ b);
}

}  // namespace accut

#endif
