#include "ieq/periodicity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ieq/error.hpp"

namespace ieq {

namespace {

bool within(double value, double bound) { return value <= bound + kPeriodTolerance * std::max(1.0, std::abs(bound)); }

AlmostPeriodSet periods_of(const GroupFunction& g, double epsilon, double q, double bound) {
    std::vector<Residue> periods;
    for (Residue t = 0; t < g.group().order(); ++t) {
        if (within(shift_deviation(g, t, q), bound)) periods.push_back(t);
    }
    return {epsilon, q, bound, ResidueSet(g.group(), std::move(periods))};
}

void require_nonempty(const ResidueSet& s, const char* what) {
    if (s.empty()) throw InvalidArgument(std::string(what) + " must be nonempty");
}

// argmax over candidates of counts[x], smallest x on ties.
std::pair<Residue, std::int64_t> argmax_over(std::span<const std::int64_t> counts, std::span<const Residue> candidates) {
    Residue best = candidates.front();
    std::int64_t best_value = counts[static_cast<std::size_t>(best)];
    for (Residue x : candidates) {
        const auto v = counts[static_cast<std::size_t>(x)];
        if (v > best_value) {
            best = x;
            best_value = v;
        }
    }
    return {best, best_value};
}

std::int64_t product_mod(const PrimeCyclicGroup& g, std::span<const std::int64_t> values, std::size_t skip) {
    Residue acc = 1;
    for (std::size_t j = 0; j < values.size(); ++j) {
        if (j != skip) acc = g.mul(acc, g.reduce(values[j]));
    }
    return acc;
}

}  // namespace

double shift_deviation(const GroupFunction& f, std::int64_t t, double q) {
    const auto values = f.values();
    const auto p = values.size();
    const auto s = static_cast<std::size_t>(f.group().reduce(t));
    std::vector<double> diff(p);
    for (std::size_t x = 0; x < p; ++x) {
        std::size_t y = x + s;
        if (y >= p) y -= p;
        diff[x] = values[y] - values[x];
    }
    return lp_norm(diff, q);
}

AlmostPeriodSet almost_periods(const ResidueSet& a, const ResidueSet& l, double epsilon, double q) {
    require_nonempty(a, "A");
    require_nonempty(l, "L");
    if (!(epsilon > 0.0)) throw InvalidArgument("epsilon must be positive");
    if (std::isnan(q) || q < 1.0) throw InvalidArgument("norm exponent must be >= 1");
    const std::vector<ResidueSet> sets{a, l};
    const auto g = GroupFunction::from_counts(a.group(), convolve_indicators(sets));
    const double size_a = static_cast<double>(a.size());
    const double bound =
        std::isinf(q) ? epsilon * size_a : epsilon * size_a * std::pow(static_cast<double>(l.size()), 1.0 / q);
    return periods_of(g, epsilon, q, bound);
}

AlmostPeriodSet multi_almost_periods(std::span<const ResidueSet> as, const ResidueSet& m, const ResidueSet& l,
                                     double epsilon) {
    if (as.empty()) throw InvalidArgument("need at least one set A_i");
    for (const auto& s : as) require_nonempty(s, "A_i");
    require_nonempty(m, "M");
    require_nonempty(l, "L");
    if (!(epsilon > 0.0)) throw InvalidArgument("epsilon must be positive");
    std::vector<ResidueSet> sets(as.begin(), as.end());
    sets.push_back(m);
    sets.push_back(l);
    const auto g = GroupFunction::from_counts(m.group(), convolve_indicators(sets));
    double bound = epsilon * static_cast<double>(m.size());
    for (const auto& s : as) bound *= static_cast<double>(s.size());
    return periods_of(g, epsilon, kInfinityNorm, bound);
}

bool verify_bohr_periods(const BohrSet& b_prime, std::span<const ResidueSet> as, const ResidueSet& m,
                         const ResidueSet& l, double epsilon) {
    const auto periods = multi_almost_periods(as, m, l, epsilon);
    return enumerate(b_prime).is_subset_of(periods.periods);
}

std::optional<BohrSet> largest_bohr_within(const ResidueSet& target, std::size_t max_dim) {
    const auto& g = target.group();
    const std::int64_t half = (g.order() - 1) / 2;
    if (!target.contains(0) || max_dim == 0) return std::nullopt;

    std::optional<BohrSet> best;
    std::size_t best_size = 1;
    std::vector<Residue> gamma;

    // Depth-first over increasing frequency tuples, which visits them in
    // lexicographic order.
    auto consider = [&]() {
        const BohrSet probe(g, gamma, 2.0);
        // Largest critical width strictly below the lowest height of a non-target point.
        double blocked = 3.0;
        for (Residue x = 0; x < g.order(); ++x) {
            if (!target.contains(x)) blocked = std::min(blocked, probe.height(x));
        }
        double width = 0.0;
        std::size_t size = 0;
        for (Residue x = 0; x < g.order(); ++x) {
            const double h = probe.height(x);
            if (h + kBohrMembershipTolerance < blocked) width = std::max(width, h);
        }
        if (width <= 0.0) return;
        BohrSet candidate(g, gamma, std::min(width, 2.0));
        const auto members = enumerate(candidate);
        if (!members.is_subset_of(target)) return;
        size = members.size();
        if (size > best_size) {
            best_size = size;
            best = candidate;
        }
    };
    auto recurse = [&](auto&& self, Residue start) -> void {
        for (Residue t = start; t <= half; ++t) {
            gamma.push_back(t);
            consider();
            if (gamma.size() < max_dim) self(self, t + 1);
            gamma.pop_back();
        }
    };
    recurse(recurse, 1);
    return best;
}

TranslateDensity increment_from_periods(const GroupFunction& f, const ResidueSet& a, const BohrSet& b,
                                        double epsilon) {
    if (!(f.group() == a.group() && a.group() == b.group())) throw InvalidArgument("inputs live in different groups");
    require_nonempty(a, "A");
    if (epsilon < 0.0) throw InvalidArgument("epsilon must be nonnegative");
    const double alpha = a.density();
    const auto fa = convolve(f, GroupFunction::indicator(a));
    const auto members = enumerate(b);

    for (Residue t : members.elements()) {
        const double dev = shift_deviation(fa, t, kInfinityNorm);
        if (!within(dev, epsilon)) {
            throw PreconditionError("condition (i) fails: ||f*1_A(.+t) - f*1_A||_inf = " + std::to_string(dev) +
                                    " > eps at t = " + std::to_string(t));
        }
    }
    const double l1 = lp_norm(f, 1.0);
    if (!within(l1, 1.0 / (2.0 * alpha))) {
        throw PreconditionError("condition (ii) fails: ||f||_1 = " + std::to_string(l1) + " > 1/(2 alpha)");
    }
    if (!within(1.0 - epsilon, fa(0))) {
        throw PreconditionError("condition (iii) fails: f*1_A(0) = " + std::to_string(fa(0)) + " < 1 - eps");
    }

    const std::vector<ResidueSet> sets{a, members};
    const auto counts = convolve_indicators(sets);
    const auto all = ResidueSet::full(a.group());
    const auto [x, hits] = argmax_over(counts, all.elements());
    TranslateDensity r;
    r.x = x;
    r.alpha = alpha;
    r.density = static_cast<double>(hits) / static_cast<double>(members.size());
    r.guarantee = 2.0 * alpha * (1.0 - 2.0 * epsilon);
    if (!within(r.guarantee, r.density)) {
        throw InvariantViolation("translate density " + std::to_string(r.density) + " below 2 alpha (1 - 2 eps)");
    }
    return r;
}

TranslateDensity dense_translate(const ResidueSet& a, const BohrSet& b, double delta) {
    if (!(a.group() == b.group())) throw InvalidArgument("inputs live in different groups");
    if (!(delta > 0.0)) throw InvalidArgument("delta must be positive");
    const auto members = enumerate(b);
    if (!a.is_subset_of(members)) throw PreconditionError("A is not contained in B");
    if (a.empty()) throw PreconditionError("A is empty, so delta <= alpha/(240 d) cannot hold");
    if (!is_regular(b).is_regular) throw PreconditionError("B is not regular");
    const double alpha = static_cast<double>(a.size()) / static_cast<double>(members.size());
    const std::size_t d = b.dimension();
    if (d > 0 && delta > alpha / (240.0 * static_cast<double>(d))) {
        throw PreconditionError("delta exceeds alpha/(240 d)");
    }
    if (static_cast<double>(enumerate(dilate(b, 1.0 + delta)).size()) > 1.01 * static_cast<double>(members.size())) {
        throw PreconditionError("|B_{1+delta}| exceeds 1.01 |B|");
    }

    const auto small = enumerate(dilate(b, delta));
    const std::vector<ResidueSet> sets{a, small};
    const auto counts = convolve_indicators(sets);  // |A ∩ (x - B_delta)| = |A ∩ (x + B_delta)|
    const auto [x, hits] = argmax_over(counts, members.elements());
    TranslateDensity r;
    r.x = x;
    r.alpha = alpha;
    r.density = static_cast<double>(hits) / static_cast<double>(small.size());
    r.guarantee = 0.9 * alpha;
    if (!within(r.guarantee, r.density)) {
        throw InvariantViolation("dense translate density " + std::to_string(r.density) + " below 0.9 alpha");
    }
    return r;
}

CoefficientTranslates coefficient_translates(const ResidueSet& a, const BohrSet& b,
                                             std::span<const std::int64_t> coefficients,
                                             std::span<const double> dilations) {
    const std::size_t k = coefficients.size();
    if (k < 3) throw InvalidArgument("coefficient translates need k >= 3 coefficients");
    if (dilations.size() != k) throw InvalidArgument("need one dilation per coefficient");
    if (!(a.group() == b.group())) throw InvalidArgument("inputs live in different groups");
    const auto& g = a.group();
    for (auto c : coefficients) {
        if (!g.is_unit(c)) throw InvalidArgument("coefficient " + std::to_string(c) + " is not a unit mod p");
    }
    for (double dl : dilations) {
        if (!(dl > 0.0 && dl <= 1.0)) throw InvalidArgument("dilations must lie in (0, 1]");
    }
    const auto members = enumerate(b);
    if (!a.is_subset_of(members)) throw PreconditionError("A is not contained in B");
    if (a.empty()) throw PreconditionError("A is empty");

    const double kd = static_cast<double>(k);
    const double alpha = static_cast<double>(a.size()) / static_cast<double>(members.size());
    double abs_product = 1.0;
    for (auto c : coefficients) abs_product *= std::abs(static_cast<double>(c));
    // A Bohr set without frequencies is the whole group; its dimension counts as 1 here.
    const double d = static_cast<double>(std::max<std::size_t>(1, b.dimension()));
    const double epsilon = alpha / (16.0 * kd) / abs_product / (24.0 * d);

    const Residue full_product = product_mod(g, coefficients, k);
    CoefficientTranslates out{.b_prime = scale(dilate(b, epsilon), full_product)};
    out.alpha = alpha;
    out.epsilon = epsilon;

    std::vector<std::vector<std::int64_t>> counts(k);
    std::vector<std::size_t> sizes(k);
    for (std::size_t i = 0; i < k; ++i) {
        const BohrSet small = dilate(b, epsilon * dilations[i]);
        out.part_bohr.push_back(scale(small, product_mod(g, coefficients, i)));
        out.target_bohr.push_back(scale(small, full_product));
        const auto bi = enumerate(out.part_bohr.back());
        sizes[i] = bi.size();
        const std::vector<ResidueSet> sets{a, bi};
        counts[i] = convolve_indicators(sets);
    }

    Residue best_x = members.elements().front();
    double best_sum = -1.0;
    for (Residue x : members.elements()) {
        double s = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            s += static_cast<double>(counts[i][static_cast<std::size_t>(x)]) / static_cast<double>(sizes[i]);
        }
        if (s > best_sum) {
            best_sum = s;
            best_x = x;
        }
    }
    if (!within((kd - 1.0 / 16.0) * alpha, best_sum)) {
        throw PreconditionError("lemma hypothesis violated: max_x sum_i mu_{B^i}*1_A(x) = " +
                                std::to_string(best_sum) + " < (k - 1/16) alpha");
    }
    out.x = best_x;

    const auto shifted = translate_set(a, -best_x);
    const double increment = (1.0 + 1.0 / (16.0 * kd)) * alpha;
    double best_density = -1.0;
    for (std::size_t i = 0; i < k; ++i) {
        out.parts.push_back(shifted.intersect(enumerate(out.part_bohr[i])));
        const auto image = dilate_set(out.parts[i], coefficients[i]);
        const auto target = enumerate(out.target_bohr[i]);
        if (!image.is_subset_of(target)) {
            throw InvariantViolation("a_i A_i escapes B'_{delta_i} for i = " + std::to_string(i));
        }
        const double density =
            static_cast<double>(image.intersect(target).size()) / static_cast<double>(target.size());
        out.densities.push_back(density);
        if (density >= increment && density > best_density) {
            best_density = density;
            out.increment_index = i;
        }
    }
    if (best_density >= 0.0) {
        out.outcome = TranslateOutcome::Increment;
        return out;
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (!within(7.0 / 8.0 * alpha, out.densities[i])) {
            throw InvariantViolation("neither disjunct holds: density " + std::to_string(out.densities[i]) +
                                     " below (7/8) alpha for i = " + std::to_string(i));
        }
    }
    out.outcome = TranslateOutcome::AllDense;
    return out;
}

PopularSumSet popular_sums(std::span<const ResidueSet> sets, double alpha, const std::optional<ResidueSet>& domain) {
    if (sets.empty()) throw InvalidArgument("popular sums need at least one set");
    for (const auto& s : sets) require_nonempty(s, "every set");
    const auto& g = sets.front().group();
    const auto f = convolve_indicators(sets);
    double q = alpha / 8.0;
    for (std::size_t i = 1; i < sets.size(); ++i) q *= static_cast<double>(sets[i].size());
    std::vector<Residue> popular;
    for (Residue x = 0; x < g.order(); ++x) {
        if (domain && !domain->contains(x)) continue;
        if (static_cast<double>(f[static_cast<std::size_t>(x)]) >= q - kPeriodTolerance) popular.push_back(x);
    }
    return {ResidueSet(g, std::move(popular)), q, GroupFunction::from_counts(g, f)};
}

bool bohr_in_sumset_check(const BohrSet& b_tilde, const ResidueSet& a, std::int64_t m) {
    if (m < 1) throw InvalidArgument("m must be positive");
    if (m > 30) throw InvalidArgument("m too large");
    if (a.empty()) return false;
    std::int64_t w = 1;
    for (std::int64_t i = 0; i <= m; ++i) w *= 3;
    const auto wa = iterated_sumset(a, w);
    return enumerate(b_tilde).is_subset_of(difference_set(wa, wa));
}

}  // namespace ieq
