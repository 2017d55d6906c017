// Seed derivation and uniform/exponential draws.
//
// All randomness in the library flows through std::mt19937_64 engines seeded
// through derive_seed, so every result is a pure function of the master seed
// and is reproducible across runs and worker counts.  Variates are produced
// by explicit inverse-CDF transforms rather than std::*_distribution, which
// keeps the generated streams independent of the standard library version.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace twostage {

// splitmix64 finalizer; good avalanche, used only for seed mixing.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Child seed for a tagged substream, e.g. (master, replicate) or
// (replicate_seed, window).  Order-sensitive.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a,
                                 std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ a);
  h = mix64(h ^ b);
  h = mix64(h ^ c);
  return h;
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
  return std::mt19937_64(mix64(seed));
}

// Uniform double in [0, 1), 53 random bits.
inline double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Exponential(rate) via inverse CDF; -log1p(-u) maps u in [0,1) to (0, inf).
inline double exponential(std::mt19937_64& gen, double rate) {
  return -std::log1p(-uniform01(gen)) / rate;
}

// Uniform integer in [0, n).
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t n) {
  // Multiply-shift rejection-free mapping is fine for our non-cryptographic
  // use; bias is O(n / 2^64).
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(gen()) * n) >> 64);
}

}  // namespace twostage
