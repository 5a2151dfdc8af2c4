#include "ieq/bohr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ieq/error.hpp"

namespace ieq {

BohrSet::BohrSet(PrimeCyclicGroup group, std::vector<Residue> frequencies, double width)
    : group_(group), frequencies_(std::move(frequencies)), width_(width) {
    if (!(width_ > 0.0 && width_ <= 2.0)) {
        throw InvalidArgument("Bohr width must lie in (0, 2], got " + std::to_string(width_));
    }
    for (auto& t : frequencies_) t = group_.reduce(t);
    std::sort(frequencies_.begin(), frequencies_.end());
    frequencies_.erase(std::unique(frequencies_.begin(), frequencies_.end()), frequencies_.end());
}

BohrSet BohrSet::whole(PrimeCyclicGroup group) { return BohrSet(group, {}, 2.0); }

double BohrSet::height(Residue x) const noexcept {
    const std::int64_t p = group_.order();
    const Residue xr = group_.reduce(x);
    double h = 0.0;
    for (Residue t : frequencies_) {
        const Residue r = group_.mul(t, xr);
        // Fold onto [0, p/2] so that x and -x produce bit-identical heights.
        const Residue m = std::min(r, p - r);
        h = std::max(h, 2.0 * std::sin(std::numbers::pi * static_cast<double>(m) / static_cast<double>(p)));
    }
    return h;
}

bool membership(const BohrSet& b, Residue x) { return b.contains(x); }

ResidueSet enumerate(const BohrSet& b) {
    std::vector<Residue> members;
    for (Residue x = 0; x < b.group().order(); ++x) {
        if (b.contains(x)) members.push_back(x);
    }
    return ResidueSet(b.group(), std::move(members));
}

std::vector<double> heights(const BohrSet& b) {
    std::vector<double> h(static_cast<std::size_t>(b.group().order()));
    for (std::size_t x = 0; x < h.size(); ++x) h[x] = b.height(static_cast<Residue>(x));
    return h;
}

std::vector<double> critical_widths(const BohrSet& b) {
    auto h = heights(b);
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
    return h;
}

BohrSet dilate(const BohrSet& b, double delta) {
    if (!(delta > 0.0)) throw InvalidArgument("dilation factor must be positive");
    const double w = b.width() * delta;
    BohrSet out(b.group(), std::vector<Residue>(b.frequencies().begin(), b.frequencies().end()), std::min(w, 2.0));
    out.clamped_ = w > 2.0;
    return out;
}

BohrSet scale(const BohrSet& b, std::int64_t a) {
    const auto& g = b.group();
    if (!g.is_unit(a)) throw InvalidArgument("cannot scale a Bohr set by a multiple of p");
    const Residue inv = g.inverse(a);
    std::vector<Residue> freq;
    freq.reserve(b.dimension());
    for (Residue t : b.frequencies()) freq.push_back(g.mul(t, inv));
    return BohrSet(g, std::move(freq), b.width());
}

namespace {

// Number of sorted heights h with h <= w + tol.
std::size_t size_at_width(std::span<const double> sorted_heights, double w) {
    return static_cast<std::size_t>(
        std::upper_bound(sorted_heights.begin(), sorted_heights.end(), w + kBohrMembershipTolerance) -
        sorted_heights.begin());
}

// Regularity of Bohr(Gamma, width) given the sorted heights of all points.
RegularityReport regularity_from_heights(std::span<const double> sorted_heights, double width, std::size_t dim) {
    RegularityReport report;
    if (dim == 0) {
        report.is_regular = true;
        return report;
    }
    const double d = static_cast<double>(dim);
    const double range = 1.0 / (12.0 * d);
    const double base = static_cast<double>(size_at_width(sorted_heights, width));
    double worst = -std::numeric_limits<double>::infinity();

    auto note_upper = [&](double ratio, double delta) { worst = std::max(worst, ratio - (1.0 + 12.0 * d * delta)); };
    auto note_lower = [&](double ratio, double delta) {
        worst = std::max(worst, (1.0 - 12.0 * d * std::abs(delta)) - ratio);
    };

    // Endpoints.
    note_upper(static_cast<double>(size_at_width(sorted_heights, width * (1.0 + range))) / base, range);
    note_lower(static_cast<double>(size_at_width(sorted_heights, width * (1.0 - range))) / base, -range);
    report.critical_deltas_checked = 2;

    // Each distinct height hv is a jump of the step function, located at the
    // delta where width (1 + delta) + tol = hv. At a jump the new value is
    // attained; just below it only the points of smaller height are present.
    const double lo_width = width * (1.0 - range) + kBohrMembershipTolerance;
    const double hi_width = width * (1.0 + range) + kBohrMembershipTolerance;
    auto it = std::lower_bound(sorted_heights.begin(), sorted_heights.end(), lo_width);
    while (it != sorted_heights.end() && *it <= hi_width) {
        const double hv = *it;
        const auto first = it;
        const auto last = std::upper_bound(it, sorted_heights.end(), hv);
        const double delta = (hv - kBohrMembershipTolerance) / width - 1.0;
        const double at = static_cast<double>(last - sorted_heights.begin()) / base;
        const double before = static_cast<double>(first - sorted_heights.begin()) / base;
        if (delta >= 0.0) note_upper(at, delta);
        if (delta <= 0.0) note_lower(before, delta);
        ++report.critical_deltas_checked;
        it = last;
    }
    report.worst_ratio_violation = worst;
    report.is_regular = worst <= 0.0;
    return report;
}

}  // namespace

RegularityReport is_regular(const BohrSet& b) {
    auto h = heights(b);
    std::sort(h.begin(), h.end());
    return regularity_from_heights(h, b.width(), b.dimension());
}

double find_regular_dilate(const BohrSet& b) {
    auto h = heights(b);
    std::sort(h.begin(), h.end());
    const double rho = b.width();
    auto regular_at = [&](double delta) { return regularity_from_heights(h, rho * delta, b.dimension()).is_regular; };

    if (regular_at(1.0)) return 1.0;

    // Breakpoints in width space: rho > interior critical widths > rho/2.
    std::vector<double> points{rho};
    for (auto it = h.rbegin(); it != h.rend(); ++it) {
        if (*it < rho && *it > rho / 2.0 && *it < points.back()) points.push_back(*it);
    }
    points.push_back(rho / 2.0);

    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        const double delta = 0.5 * (points[i] + points[i + 1]) / rho;
        if (regular_at(delta)) return delta;
    }
    // Finer pass over each gap before giving up.
    constexpr int kSubdivisions = 16;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        for (int j = 1; j < kSubdivisions; ++j) {
            const double w = points[i] - (points[i] - points[i + 1]) * j / kSubdivisions;
            if (regular_at(w / rho)) return w / rho;
        }
    }
    if (regular_at(0.5)) return 0.5;
    throw InvariantViolation("no regular dilate found");
}

SizeBoundCheck size_bound_check(const BohrSet& b, double delta) {
    if (!(delta > 0.0 && delta <= 1.0)) throw InvalidArgument("size bound check needs delta in (0, 1]");
    SizeBoundCheck c;
    c.base_size = enumerate(b).size();
    c.dilate_size = enumerate(dilate(b, delta)).size();
    c.lower_bound = std::pow(delta / 2.0, 3.0 * static_cast<double>(b.dimension())) * static_cast<double>(c.base_size);
    c.holds = static_cast<double>(c.dilate_size) >= c.lower_bound;
    return c;
}

}  // namespace ieq
