#pragma once

/**
 * @file bohr.hpp
 * @brief Bohr sets Bohr(Gamma, rho) = {x : |1 - gamma_t(x)| <= rho for all t in Gamma} in Z/pZ.
 *
 * Membership is decided through the identity |1 - e^{i theta}| = 2|sin(theta/2)|,
 * i.e. x belongs when its height max_t 2|sin(pi t x / p)| is at most the width
 * (absolute tolerance 1e-12). Because heights take finitely many values, the
 * size of a dilate B_delta is a step function of delta, which is what makes
 * the regularity test below exact.
 */

#include <cstdint>
#include <span>
#include <vector>

#include "ieq/cyclic.hpp"

namespace ieq {

inline constexpr double kBohrMembershipTolerance = 1e-12;

class BohrSet {
public:
    /// Frequencies are reduced mod p and deduplicated; width must lie in (0, 2].
    BohrSet(PrimeCyclicGroup group, std::vector<Residue> frequencies, double width);

    /// Bohr(empty, 2): the whole group.
    static BohrSet whole(PrimeCyclicGroup group);

    const PrimeCyclicGroup& group() const noexcept { return group_; }
    std::span<const Residue> frequencies() const noexcept { return frequencies_; }
    double width() const noexcept { return width_; }
    std::size_t dimension() const noexcept { return frequencies_.size(); }
    /// Set when a dilation asked for a width above 2 and was clamped.
    bool clamped() const noexcept { return clamped_; }

    /// max over the frequencies of 2|sin(pi t x / p)|; 0 when there are none.
    double height(Residue x) const noexcept;
    bool contains(Residue x) const noexcept { return height(x) <= width_ + kBohrMembershipTolerance; }

    friend bool operator==(const BohrSet&, const BohrSet&) = default;

private:
    friend BohrSet dilate(const BohrSet& b, double delta);

    PrimeCyclicGroup group_;
    std::vector<Residue> frequencies_;
    double width_;
    bool clamped_ = false;
};

bool membership(const BohrSet& b, Residue x);
ResidueSet enumerate(const BohrSet& b);
/// Heights of every x in [0, p), indexed by x.
std::vector<double> heights(const BohrSet& b);
/// Sorted distinct heights: the widths at which membership changes.
std::vector<double> critical_widths(const BohrSet& b);

/// Same frequencies, width rho * delta (clamped to 2). Throws for delta <= 0.
BohrSet dilate(const BohrSet& b, double delta);
/// aB: frequencies multiplied by a^{-1}, so that enumerate(aB) = a * enumerate(B).
BohrSet scale(const BohrSet& b, std::int64_t a);

struct RegularityReport {
    bool is_regular = false;
    /// Largest amount by which either inequality fails; <= 0 exactly when regular.
    double worst_ratio_violation = 0.0;
    std::size_t critical_deltas_checked = 0;
};

/// Exact test of 1 - 12d|delta| <= |B_{1+delta}| / |B| <= 1 + 12d|delta| for all |delta| <= 1/(12d),
/// evaluated at every jump of the step function and at both endpoints.
RegularityReport is_regular(const BohrSet& b);

/// Some delta in [1/2, 1] with B_delta regular. Scans delta = 1 and then the
/// midpoints between consecutive critical widths, descending. Throws
/// InvariantViolation("no regular dilate found") if the scan comes up empty.
double find_regular_dilate(const BohrSet& b);

struct SizeBoundCheck {
    std::size_t base_size = 0;
    std::size_t dilate_size = 0;
    double lower_bound = 0.0;  ///< (delta/2)^{3d} |B|
    bool holds = false;
};

SizeBoundCheck size_bound_check(const BohrSet& b, double delta);

}  // namespace ieq
