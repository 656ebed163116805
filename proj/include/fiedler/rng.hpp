#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace fiedler {

// All experiment randomness comes from std::mt19937_64, whose output sequence
// is fixed by the standard. The std distributions are implementation-defined,
// so bounded draws use the helpers below instead.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed for a named substream, e.g. derive_seed(42, "train-sampling").
std::uint64_t derive_seed(std::uint64_t master, std::string_view label) noexcept;

Rng make_rng(std::uint64_t master, std::string_view label);

/// Uniform integer in [0, bound), bound > 0, by rejection (no modulo bias).
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(Rng& rng);

}  // namespace fiedler
