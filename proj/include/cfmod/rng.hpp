#pragma once

#include <cstdint>

#include "cfmod/bigint.hpp"

namespace cfmod {

/// Seedable Mersenne-Twister random source for arbitrary-precision
/// integers. Uniform ranges are produced by rejection sampling on raw
/// bit blocks, never by a modulo, so there is no bias at any size.
///
/// Stream splitting: worker w out of W draws its own seed as the w-th
/// output of a splitmix64 generator seeded with the run seed, and owns a
/// contiguous block of the sample indices. Results are therefore
/// deterministic for a fixed (seed, W) regardless of scheduling.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    /// The generator for worker `worker` of a run seeded with `seed`.
    static Rng worker_stream(std::uint64_t seed, unsigned worker);

    /// Uniform integer in [0, bound); bound must be positive.
    Int below(const Int& bound);

    /// Uniform integer in [lo, hi], inclusive.
    Int in_range(const Int& lo, const Int& hi);

    /// Uniform integer with exactly `bits` bits (top bit set).
    Int with_bits(unsigned bits);

private:
    gmp_randclass gen_;
};

/// One splitmix64 step (public because the worker-seed derivation is
/// part of the reproducibility contract).
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace cfmod
