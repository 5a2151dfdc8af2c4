#include "ieq/increment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "ieq/error.hpp"
#include "ieq/periodicity.hpp"

namespace ieq {

std::string_view to_string(IncrementMechanism m) noexcept {
    switch (m) {
        case IncrementMechanism::Initial: return "initial";
        case IncrementMechanism::CoefficientTranslates: return "coefficient_translates";
        case IncrementMechanism::BohrSearch: return "bohr_search";
    }
    return "unknown";
}

std::string_view to_string(TerminalReason r) noexcept {
    switch (r) {
        case TerminalReason::DensityCap: return "DENSITY_CAP";
        case TerminalReason::NoIncrementFound: return "NO_INCREMENT_FOUND";
        case TerminalReason::SizeFloor: return "SIZE_FLOOR";
        case TerminalReason::StepBudget: return "STEP_BUDGET";
    }
    return "unknown";
}

namespace {

struct Candidate {
    std::vector<Residue> gamma;
    double height = 0.0;
    std::size_t size = 0;
    std::int64_t hits = 0;
    Residue translate = 0;
};

struct SearchOutcome {
    std::optional<Candidate> best;
    bool below_floor = false;
};

// Exhaustive search over Bohr(Gamma, w), Gamma ⊆ [1, (p-1)/2] with |Gamma| <= max_dim
// and w running through the critical widths of Gamma, for a translate y with
// |(A - y) ∩ B| / |B| >= threshold. Prefers the largest qualifying Bohr set.
class BohrFamilySearch {
public:
    BohrFamilySearch(const ResidueSet& a, double threshold, const IncrementConfig& config)
        : a_(a), g_(a.group()), p_(static_cast<std::size_t>(g_.order())), threshold_(threshold), config_(config),
          sine_(p_), counts_(p_), order_(p_), height_(p_) {
        for (std::size_t r = 0; r < p_; ++r) {
            const std::size_t m = std::min(r, p_ - r);
            sine_[r] = 2.0 * std::sin(std::numbers::pi * static_cast<double>(m) / static_cast<double>(p_));
        }
    }

    SearchOutcome run() {
        recurse(1);
        return std::move(outcome_);
    }

private:
    void recurse(Residue start) {
        const auto half = static_cast<Residue>((p_ - 1) / 2);
        for (Residue t = start; t <= half; ++t) {
            gamma_.push_back(t);
            scan();
            if (gamma_.size() < config_.max_dim) recurse(t + 1);
            gamma_.pop_back();
        }
    }

    void scan() {
        for (std::size_t x = 0; x < p_; ++x) {
            double h = 0.0;
            for (Residue t : gamma_) h = std::max(h, sine_[static_cast<std::size_t>(g_.mul(t, static_cast<Residue>(x)))]);
            height_[x] = h;
            order_[x] = x;
        }
        std::sort(order_.begin(), order_.end(), [&](std::size_t l, std::size_t r) {
            return height_[l] != height_[r] ? height_[l] < height_[r] : l < r;
        });
        std::fill(counts_.begin(), counts_.end(), 0);
        std::int64_t max_hits = 0;
        std::size_t best_y = 0;

        std::size_t i = 0;
        while (i < p_) {
            const double h = height_[order_[i]];
            // Add every point of this height: counts_[y] = |A ∩ (y + B)|.
            while (i < p_ && height_[order_[i]] == h) {
                const auto b = static_cast<Residue>(order_[i]);
                for (Residue e : a_.elements()) {
                    const auto y = static_cast<std::size_t>(g_.sub(e, b));
                    const auto v = ++counts_[y];
                    if (v > max_hits || (v == max_hits && y < best_y)) {
                        max_hits = v;
                        best_y = y;
                    }
                }
                ++i;
            }
            const std::size_t size = i;
            if (static_cast<double>(max_hits) / static_cast<double>(size) < threshold_) continue;
            if (size < config_.min_size) {
                outcome_.below_floor = true;
                continue;
            }
            auto& best = outcome_.best;
            if (!best || size > best->size || (size == best->size && max_hits > best->hits)) {
                best = Candidate{gamma_, h, size, max_hits, static_cast<Residue>(best_y)};
            }
        }
    }

    const ResidueSet& a_;
    PrimeCyclicGroup g_;
    std::size_t p_;
    double threshold_;
    const IncrementConfig& config_;
    std::vector<double> sine_;
    std::vector<std::int64_t> counts_;
    std::vector<std::size_t> order_;
    std::vector<double> height_;
    std::vector<Residue> gamma_;
    SearchOutcome outcome_;
};

IncrementStep make_step(ResidueSet set, BohrSet bohr, std::size_t bohr_size, IncrementMechanism mechanism,
                        Residue translate) {
    const double alpha = static_cast<double>(set.size()) / static_cast<double>(bohr_size);
    return IncrementStep{std::move(set), std::move(bohr), bohr_size, alpha, mechanism, translate};
}

}  // namespace

IncrementTrace increment_driver(const ResidueSet& a, const InvariantEquation& eq, const IncrementConfig& config) {
    if (a.empty()) throw InvalidArgument("increment driver needs a nonempty set");
    if (config.max_dim == 0) throw InvalidArgument("max_dim must be at least 1");
    if (config.min_size == 0) throw InvalidArgument("min_size must be at least 1");
    const auto& g = a.group();
    for (auto c : eq.coefficients()) {
        if (!g.is_unit(c)) throw InvalidArgument("coefficient degenerates mod p: " + std::to_string(c));
    }

    IncrementTrace trace;
    trace.increment_factor = 1.0 + 1.0 / (16.0 * static_cast<double>(eq.arity()));
    trace.steps.push_back(make_step(a, BohrSet::whole(g), static_cast<std::size_t>(g.order()),
                                    IncrementMechanism::Initial, 0));
    const std::vector<double> unit_dilations(eq.arity(), 1.0);

    while (true) {
        const IncrementStep& cur = trace.steps.back();
        const double threshold = trace.increment_factor * cur.alpha;
        if (threshold > 1.0) {
            trace.terminal_reason = TerminalReason::DensityCap;
            break;
        }
        if (trace.steps.size() - 1 >= config.max_steps) {
            trace.terminal_reason = TerminalReason::StepBudget;
            break;
        }
        if (cur.bohr_size < config.min_size) {
            trace.terminal_reason = TerminalReason::SizeFloor;
            break;
        }

        bool below_floor = false;
        if (config.use_coefficient_translates && is_regular(cur.bohr).is_regular) {
            std::optional<CoefficientTranslates> ct;
            try {
                ct = coefficient_translates(cur.set, cur.bohr, eq.coefficients(), unit_dilations);
            } catch (const PreconditionError&) {
                // Hypothesis not met at this step; fall through to the search.
            }
            if (ct && ct->outcome == TranslateOutcome::Increment) {
                const std::size_t i = ct->increment_index;
                const auto members = enumerate(ct->part_bohr[i]);
                const double alpha = static_cast<double>(ct->parts[i].size()) / static_cast<double>(members.size());
                if (members.size() < config.min_size) {
                    below_floor = true;
                } else if (alpha >= threshold) {
                    trace.steps.push_back(make_step(ct->parts[i], ct->part_bohr[i], members.size(),
                                                    IncrementMechanism::CoefficientTranslates, ct->x));
                    continue;
                }
            }
        }

        auto found = BohrFamilySearch(cur.set, threshold, config).run();
        below_floor = below_floor || found.below_floor;
        if (!found.best) {
            trace.terminal_reason = below_floor ? TerminalReason::SizeFloor : TerminalReason::NoIncrementFound;
            break;
        }
        const Candidate& c = *found.best;
        // A lone point has height 0; any width below the first positive height selects it.
        const double width = c.height > 0.0 ? c.height : std::sin(std::numbers::pi / static_cast<double>(g.order()));
        BohrSet bohr(g, c.gamma, width);
        const auto members = enumerate(bohr);
        auto next = translate_set(cur.set, -c.translate).intersect(members);
        if (members.size() != c.size || static_cast<std::int64_t>(next.size()) != c.hits) {
            throw InvariantViolation("Bohr search bookkeeping disagrees with direct enumeration");
        }
        trace.steps.push_back(
            make_step(std::move(next), std::move(bohr), members.size(), IncrementMechanism::BohrSearch, c.translate));
    }
    return trace;
}

}  // namespace ieq
