#pragma once

/**
 * @file sampling.hpp
 * @brief Seeded random subsets, reproducible across platforms.
 */

#include <cstdint>
#include <random>

#include "ieq/cyclic.hpp"

namespace ieq {

/// Uniform draw from [0, bound) by rejection, independent of the standard library's distributions.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// k distinct residues of Z/pZ chosen uniformly (partial Fisher-Yates).
ResidueSet random_residue_set(PrimeCyclicGroup group, std::size_t k, std::uint64_t seed);

/// k distinct integers of [1, N] chosen uniformly.
IntervalSet random_interval_set(std::int64_t length, std::size_t k, std::uint64_t seed);

}  // namespace ieq
