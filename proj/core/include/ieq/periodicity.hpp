#pragma once

/**
 * @file periodicity.hpp
 * @brief Almost periods of convolutions and the constructive density-increment lemmas.
 *
 * The existence statements behind these lemmas are probabilistic or carry
 * unspecified constants; here every hypothesis is checked on the data and
 * every conclusion is verified before it is returned.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ieq/bohr.hpp"
#include "ieq/cyclic.hpp"
#include "ieq/fourier.hpp"

namespace ieq {

/// Relative slack granted to floating comparisons against a bound.
inline constexpr double kPeriodTolerance = 1e-9;

struct AlmostPeriodSet {
    double epsilon = 0.0;
    double norm = 1.0;  ///< q; kInfinityNorm for the sup norm
    double bound = 0.0;  ///< deviation allowed for a period
    ResidueSet periods;
};

/// ||f(. + t) - f||_q
double shift_deviation(const GroupFunction& f, std::int64_t t, double q);

/// Shifts t with ||1_A*1_L(. + t) - 1_A*1_L||_q <= eps |A| |L|^{1/q} (eps |A| for q = inf).
AlmostPeriodSet almost_periods(const ResidueSet& a, const ResidueSet& l, double epsilon, double q);

/// Shifts t with ||g(. + t) - g||_inf <= eps |A_1|...|A_n| |M| for g = 1_{A_1}*...*1_{A_n}*1_M*1_L.
AlmostPeriodSet multi_almost_periods(std::span<const ResidueSet> as, const ResidueSet& m, const ResidueSet& l,
                                     double epsilon);

/// Every member of b_prime is an almost period in the multi_almost_periods sense.
bool verify_bohr_periods(const BohrSet& b_prime, std::span<const ResidueSet> as, const ResidueSet& m,
                         const ResidueSet& l, double epsilon);

/// Largest Bohr set (by size) of dimension 1..max_dim contained in `target`.
/// Frequencies range over [1, (p-1)/2] since t and -t give the same set; widths
/// over the critical widths. Ties go to the lexicographically first frequency
/// set, then the smaller width. Returns nullopt if nothing beyond {0} fits.
std::optional<BohrSet> largest_bohr_within(const ResidueSet& target, std::size_t max_dim);

struct TranslateDensity {
    Residue x = 0;
    double density = 0.0;  ///< achieved density of the translate inside the Bohr set
    double alpha = 0.0;    ///< density of A used in the guarantee
    double guarantee = 0.0;
};

/// Almost periods -> increment. Checks
///   (i)   ||f*1_A(. + t) - f*1_A||_inf <= eps for every t in B,
///   (ii)  ||f||_1 <= 1 / (2 alpha), alpha = |A| / p,
///   (iii) f*1_A(0) >= 1 - eps,
/// then returns x maximising (1_A * mu_B)(x) = |(A - x) ∩ B| / |B| (smallest x on ties),
/// whose density is at least 2 alpha (1 - 2 eps).
TranslateDensity increment_from_periods(const GroupFunction& f, const ResidueSet& a, const BohrSet& b,
                                        double epsilon);

/// Dense translate inside a small dilate. Requires A ⊆ B, B regular, delta <= alpha/(240 d)
/// with alpha = |A|/|B|, and |B_{1+delta}| <= 1.01 |B|. Returns x in B maximising
/// |A ∩ (x + B_delta)| / |B_delta|, which is at least 0.9 alpha.
TranslateDensity dense_translate(const ResidueSet& a, const BohrSet& b, double delta);

enum class TranslateOutcome {
    AllDense,   ///< |a_i A_i ∩ B'_{delta_i}| >= (7/8) alpha |B'_{delta_i}| for every i
    Increment,  ///< >= (1 + 1/16k) alpha |B'_{delta_i}| for some i
};

struct CoefficientTranslates {
    TranslateOutcome outcome = TranslateOutcome::AllDense;
    Residue x = 0;
    double alpha = 0.0;
    double epsilon = 0.0;
    std::vector<ResidueSet> parts;      ///< A_i = (A - x) ∩ B^i
    std::vector<BohrSet> part_bohr;     ///< B^i = (prod_{j != i} a_j) B_{eps delta_i}
    BohrSet b_prime;                    ///< (prod_j a_j) B_eps
    std::vector<BohrSet> target_bohr;   ///< B'_{delta_i}
    std::vector<double> densities;      ///< |a_i A_i ∩ B'_{delta_i}| / |B'_{delta_i}|
    std::size_t increment_index = 0;    ///< meaningful for Increment
};

/// Translates adapted to the coefficients a_1..a_k and dilations delta_1..delta_k.
/// Throws PreconditionError("lemma hypothesis violated") when no x in B reaches
/// sum_i (mu_{B^i} * 1_A)(x) >= (k - 1/16) alpha.
CoefficientTranslates coefficient_translates(const ResidueSet& a, const BohrSet& b,
                                             std::span<const std::int64_t> coefficients,
                                             std::span<const double> dilations);

struct PopularSumSet {
    ResidueSet popular;
    double threshold = 0.0;
    GroupFunction function;
};

/// f = 1_{S_1} * ... * 1_{S_n}; Q = (alpha/8) |S_2| ... |S_n|; P = {x : f(x) >= Q}.
/// Callers apply any coefficient dilations beforehand. An optional domain restricts P.
PopularSumSet popular_sums(std::span<const ResidueSet> sets, double alpha,
                           const std::optional<ResidueSet>& domain = std::nullopt);

/// enumerate(B~) ⊆ wA - wA with w = 3^{m+1}.
bool bohr_in_sumset_check(const BohrSet& b_tilde, const ResidueSet& a, std::int64_t m);

}  // namespace ieq
