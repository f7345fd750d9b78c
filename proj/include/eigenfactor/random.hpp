#ifndef EIGENFACTOR_RANDOM_HPP_
#define EIGENFACTOR_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace eigenfactor {

// The standard distributions are implementation-defined, so everything that
// has to reproduce byte-identically across platforms maps mt19937_64 output
// by hand instead.

inline std::uint64_t splitmix64(std::uint64_t state) {
  state += 0x9E3779B97F4A7C15ULL;
  state = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9ULL;
  state = (state ^ (state >> 27)) * 0x94D049BB133111EBULL;
  return state ^ (state >> 31);
}

/// Engine for stream `index` of a seeded experiment. Streams are independent
/// of how many other streams exist, so trials can run in any order (or
/// concurrently) without changing results.
inline std::mt19937_64 stream_engine(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(index + 1)));
}

/// Uniform draw from [0, bound). Modulo bias is irrelevant at the bounds
/// used here and the mapping is fully portable.
inline std::uint64_t uniform_index(std::mt19937_64& engine, std::uint64_t bound) {
  return engine() % bound;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_real(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace eigenfactor

#endif  // EIGENFACTOR_RANDOM_HPP_
