#pragma once

/**
 * @file increment.hpp
 * @brief Density-increment iteration.
 *
 * Starting from (A, Z/pZ), each step looks for a Bohr set B* and a translate
 * x with |(A - x) ∩ B*| >= (1 + 1/16k) alpha |B*|, then continues with
 * ((A - x) ∩ B*, B*). Two mechanisms are tried in order: the coefficient
 * translates construction (when the current Bohr set is regular) and a direct
 * search over a bounded family of Bohr sets.
 */

#include <cstdint>
#include <string_view>
#include <vector>

#include "ieq/bohr.hpp"
#include "ieq/cyclic.hpp"
#include "ieq/invariant_equation.hpp"

namespace ieq {

enum class IncrementMechanism { Initial, CoefficientTranslates, BohrSearch };
enum class TerminalReason { DensityCap, NoIncrementFound, SizeFloor, StepBudget };

std::string_view to_string(IncrementMechanism m) noexcept;
std::string_view to_string(TerminalReason r) noexcept;

struct IncrementConfig {
    std::size_t max_dim = 1;     ///< largest |Gamma| in the direct search
    std::size_t min_size = 2;    ///< smallest Bohr set a step may move to
    std::size_t max_steps = 64;  ///< increments before stopping with StepBudget
    std::uint64_t seed = 0;      ///< recorded for provenance; the driver itself draws no randomness
    bool use_coefficient_translates = true;
};

struct IncrementStep {
    ResidueSet set;   ///< A^(i), a subset of enumerate(bohr)
    BohrSet bohr;     ///< B^(i)
    std::size_t bohr_size = 0;
    double alpha = 0.0;  ///< |A^(i)| / |B^(i)|
    IncrementMechanism mechanism = IncrementMechanism::Initial;
    Residue translate = 0;  ///< A^(i) = (A^(i-1) - translate) ∩ B^(i)
};

struct IncrementTrace {
    std::vector<IncrementStep> steps;
    TerminalReason terminal_reason = TerminalReason::NoIncrementFound;
    double increment_factor = 1.0;  ///< 1 + 1/16k
};

/// Throws InvalidArgument for an empty A, max_dim == 0 or min_size == 0.
IncrementTrace increment_driver(const ResidueSet& a, const InvariantEquation& eq, const IncrementConfig& config);

}  // namespace ieq
