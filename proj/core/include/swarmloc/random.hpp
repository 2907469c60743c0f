#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace swarmloc {

using Rng = std::mt19937_64;

/// Independent stream tags. Mixing a tag into a seed keeps e.g. the noise
/// stream of trial 3 unrelated to the particle stream of particle 3.
enum class Stream : std::uint64_t {
  kDeploy = 0x6465706c6f79ULL,
  kNoise = 0x6e6f697365ULL,
  kParticle = 0x7061727469636c65ULL,
  kSchedule = 0x7363686564ULL,
};

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derives a substream seed from a master seed and a path of indices.
constexpr std::uint64_t derive_seed(std::uint64_t master, Stream stream,
                                    std::initializer_list<std::uint64_t> path = {}) {
  std::uint64_t h = mix64(master ^ mix64(static_cast<std::uint64_t>(stream)));
  for (std::uint64_t v : path) h = mix64(h ^ mix64(v + 0x632be59bd9b4e019ULL));
  return h;
}

inline Rng make_rng(std::uint64_t master, Stream stream,
                    std::initializer_list<std::uint64_t> path = {}) {
  return Rng(derive_seed(master, stream, path));
}

/// Uniform draw on [0, 1) with 53 random bits; identical on every platform.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

}  // namespace swarmloc
