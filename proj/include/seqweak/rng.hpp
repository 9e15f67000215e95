// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace seqweak {

// splitmix64 step; used to spread seeds and derive substreams.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seedable, splittable generator for trajectory sampling. Wraps mt19937_64
// and draws raw bits only (never std::*_distribution), so identical seeds
// give bit-identical sequences on every platform and compiler.
//
// A trajectory consumes exactly one choice draw and one uniform draw per
// step, in that order.
class TrajectoryRng {
  public:
    explicit TrajectoryRng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream),
          engine_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 1))) {}

    // Independent substream k of the same master seed.
    TrajectoryRng split(std::uint64_t k) const {
        return TrajectoryRng(seed_, splitmix64(stream_) + k + 1);
    }

    // Uniform bit: 0 or 1.
    int choice_bit() { return static_cast<int>(engine_() & 1ULL); }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
};

} // namespace seqweak
