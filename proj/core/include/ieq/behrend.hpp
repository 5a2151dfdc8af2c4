#pragma once

/**
 * @file behrend.hpp
 * @brief Digit/sphere construction of dense sets with few solutions to
 *        x_1 + ... + x_{k-1} = (k-1) x_k.
 *
 * With N = M^{d + d'}, T collects the n in [0, N) whose d low-order base-M
 * digits are all below M/k, and A is the most populated sphere
 * ||D(x)||^2 = r, r in {1, ..., d M^2}, inside T. Internally everything is
 * 0-indexed; as_interval_set() shifts to {1, ..., N}.
 */

#include <cstdint>
#include <vector>

#include "ieq/cyclic.hpp"

namespace ieq {

struct BehrendParams {
    std::int64_t base = 0;            ///< M >= 2
    std::int64_t constrained = 0;     ///< d >= 1
    std::int64_t free_digits = 0;     ///< d' >= 0
    std::int64_t arity = 0;           ///< k >= 4

    /// Throws InvalidArgument when out of range or when M^{d+d'} overflows.
    void validate() const;
    std::int64_t universe() const;  ///< N = M^{d+d'}
};

struct BehrendOutput {
    std::int64_t universe = 0;             ///< N
    std::vector<std::int64_t> members;     ///< A, 0-indexed, increasing
    std::int64_t radius = 0;               ///< r
    std::int64_t t_size = 0;               ///< |T|

    IntervalSet as_interval_set() const;
    /// A as residues in Z/pZ (0-indexed values taken as residues).
    ResidueSet as_residue_set(PrimeCyclicGroup group) const;
};

/// Low-order d digits of n in base M, least significant first.
std::vector<std::int64_t> digit_map(std::int64_t n, std::int64_t base, std::int64_t digits);

/// Throws InvalidArgument("parameters admit no sphere") when M/k <= 1.
BehrendOutput build_behrend(const BehrendParams& params);

struct BehrendVerification {
    std::int64_t count = 0;           ///< solutions of x_1 + ... + x_{k-1} = (k-1) x_k in A, over the integers
    std::int64_t diagonal_count = 0;  ///< solutions with D(x_1) = ... = D(x_k)
    std::int64_t bound = 0;           ///< |A| M^{d'(k-2)}
    bool diagonal_ok = false;         ///< count == diagonal_count
    bool within_bound = false;        ///< count <= bound
};

/// Exact count via iterated sum histograms over the integers, split by digit class.
BehrendVerification verify_behrend(const BehrendOutput& out, const BehrendParams& params);

struct ChooseOptions {
    double c = 0.25;
};

struct ChosenParams {
    BehrendParams params;
    double predicted_density = 0.0;  ///< exact |A| / N implied by the digit counts
};

/// d = ceil(c ln(2/alpha)), M = max(ceil(alpha^{-c}), k + 1), d' = 0 (the density
/// |A|/N does not depend on d'). Throws InvalidArgument("no valid parameters")
/// when the resulting density falls below alpha.
ChosenParams choose_params(double alpha, std::int64_t arity, const ChooseOptions& options = {});

}  // namespace ieq
