#pragma once

/**
 * @file equations.hpp
 * @brief Solution counting for invariant linear equations.
 *
 * Counts are over ordered tuples (x_1, ..., x_k) in A^k. For a ResidueSet the
 * equation is read modulo p; for an IntervalSet it is read over the integers.
 */

#include <cstdint>

#include "ieq/cyclic.hpp"
#include "ieq/invariant_equation.hpp"

namespace ieq {

enum class TrivialityPredicate {
    AllEqual,       ///< x_1 = x_2 = ... = x_k
    SidonMultiset,  ///< {x_1, x_2} = {x_3, x_4}; only for (1, 1, -1, -1)
};

struct SolutionCount {
    std::int64_t total = 0;
    std::int64_t trivial = 0;
    std::int64_t nontrivial() const noexcept { return total - trivial; }
    friend bool operator==(const SolutionCount&, const SolutionCount&) = default;
};

/// Enumerates A^{k-1} and solves for the last variable. The oracle for every fast path.
SolutionCount count_solutions_bruteforce(const ResidueSet& a, const InvariantEquation& eq,
                                         TrivialityPredicate pred = TrivialityPredicate::AllEqual);
SolutionCount count_solutions_bruteforce(const IntervalSet& a, const InvariantEquation& eq,
                                         TrivialityPredicate pred = TrivialityPredicate::AllEqual);

/// (1_{a_1 A} * ... * 1_{a_k A})(0) through exact convolution.
SolutionCount count_solutions_fast(const ResidueSet& a, const InvariantEquation& eq,
                                   TrivialityPredicate pred = TrivialityPredicate::AllEqual);
/// Integer count obtained by embedding into Z/pZ without wraparound.
SolutionCount count_solutions_fast(const IntervalSet& a, const InvariantEquation& eq,
                                   TrivialityPredicate pred = TrivialityPredicate::AllEqual);

/// Stops at the first nontrivial solution.
bool has_nontrivial_solution(const ResidueSet& a, const InvariantEquation& eq,
                             TrivialityPredicate pred = TrivialityPredicate::AllEqual);
bool has_nontrivial_solution(const IntervalSet& a, const InvariantEquation& eq,
                             TrivialityPredicate pred = TrivialityPredicate::AllEqual);

/// Distinct unordered pair sums.
bool is_sidon(const IntervalSet& s);
bool is_sidon(const ResidueSet& s);
/// Quadruple enumeration over S^4.
bool is_sidon_bruteforce(const IntervalSet& s);
bool is_sidon_bruteforce(const ResidueSet& s);

struct SolutionDensityReport {
    std::int64_t ambient_size = 0;  ///< p for residue sets, N for interval sets
    std::size_t set_size = 0;
    double alpha = 0.0;
    std::int64_t total = 0;
    std::int64_t trivial = 0;
    double normalized_total = 0.0;  ///< total / ambient^{k-1}
};

SolutionDensityReport solution_density_report(const ResidueSet& a, const InvariantEquation& eq);
SolutionDensityReport solution_density_report(const IntervalSet& a, const InvariantEquation& eq);

}  // namespace ieq
