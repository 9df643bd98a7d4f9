#pragma once

#include <cstdint>
#include <string_view>

#include "parlaw/matrix.hpp"

namespace parlaw {

// Counter-mode deterministic stream built from the SplitMix64 finalizer
// (Steele, Lea & Flood, "Fast splittable pseudorandom number generators").
// Any implementation language reproduces the stream from this recipe:
//
//   GAMMA  = 0x9E3779B97F4A7C15 (all arithmetic mod 2^64)
//   mix(z) = z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
//            z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31
//   key    = mix(mix(seed ^ fnv1a64(role)) + GAMMA * (trial + 1))
//   out[i] = mix(key + GAMMA * (i + 1)),  i = 0, 1, 2, ...
//
// with fnv1a64 the standard 64-bit FNV-1a hash of the role-tag bytes
// (offset 0xCBF29CE484222325, prime 0x100000001B3). Derived values:
//
//   uniform01: (out >> 11) * 2^-53, in [0, 1)
//   gaussian pair (Box-Muller): u1 = 1 - uniform01 in (0, 1], u2 = uniform01,
//     z0 = sqrt(-2 ln u1) cos(2 pi u2), z1 = sqrt(-2 ln u1) sin(2 pi u2)
//   gaussian()  consumes one pair and returns z0
//   cgaussian() consumes one pair and returns z0 + i z1
//
// Distinct (seed, trial, role) triples give independent substreams; no
// state is shared between streams.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t trial, std::string_view role);

    std::uint64_t next_u64();
    double uniform01();                       // [0, 1)
    double uniform(double lo, double hi);     // lo + (hi - lo) * uniform01
    double gaussian();                        // N(0, 1)
    Complex cgaussian();                      // independent N(0, 1) parts

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

std::uint64_t fnv1a64(std::string_view s);
std::uint64_t splitmix64_mix(std::uint64_t z);

}  // namespace parlaw
