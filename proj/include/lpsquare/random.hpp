#pragma once

#include <cstdint>
#include <random>

namespace lpsquare {

// splitmix64 step; used to derive independent stream seeds from
// (master seed, coordinates) without correlation between nearby inputs.
inline std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b = 0) noexcept {
  return mix64(mix64(master ^ mix64(a)) ^ mix64(b ^ 0x5851f42d4c957f2dull));
}

// Raw engine output only. std::uniform_* distributions are not pinned down
// across standard library implementations, so everything derives from the
// specified mt19937_64 bit stream.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

inline double uniform_pm1(std::mt19937_64& rng) {
  return 2.0 * uniform01(rng) - 1.0;
}

}  // namespace lpsquare
