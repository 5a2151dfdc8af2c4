#include "ieq/behrend.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "ieq/error.hpp"

namespace ieq {

namespace {

constexpr std::int64_t kMaxUniverse = std::int64_t{1} << 40;

std::int64_t checked_pow(std::int64_t base, std::int64_t exponent) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < exponent; ++i) {
        if (r > kMaxUniverse / base) throw InvalidArgument("M^(d+d') overflows the supported range");
        r *= base;
    }
    return r;
}

// Every digit vector of length d with entries in [0, limit), least significant first.
std::vector<std::vector<std::int64_t>> digit_vectors(std::int64_t limit, std::int64_t d) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> v(static_cast<std::size_t>(d), 0);
    while (true) {
        out.push_back(v);
        std::size_t i = 0;
        while (i < v.size() && ++v[i] == limit) v[i++] = 0;
        if (i == v.size()) break;
    }
    return out;
}

std::int64_t norm2(const std::vector<std::int64_t>& v) {
    std::int64_t s = 0;
    for (auto x : v) s += x * x;
    return s;
}

std::int64_t digit_value(const std::vector<std::int64_t>& v, std::int64_t base) {
    std::int64_t value = 0;
    for (auto it = v.rbegin(); it != v.rend(); ++it) value = value * base + *it;
    return value;
}

// Digits allowed in the constrained positions: those with digit * k < M.
std::int64_t allowed_digit_count(std::int64_t base, std::int64_t arity) { return (base + arity - 1) / arity; }

// Sphere populations among allowed digit vectors, keyed by squared norm r >= 1.
std::map<std::int64_t, std::vector<std::vector<std::int64_t>>> spheres(std::int64_t base, std::int64_t d,
                                                                        std::int64_t arity) {
    std::map<std::int64_t, std::vector<std::vector<std::int64_t>>> by_radius;
    for (auto& v : digit_vectors(allowed_digit_count(base, arity), d)) {
        const auto r = norm2(v);
        if (r >= 1 && r <= d * base * base) by_radius[r].push_back(std::move(v));
    }
    return by_radius;
}

// Number of (x_1, ..., x_k) in S^k with x_1 + ... + x_{k-1} = (k-1) x_k, over the integers.
std::int64_t count_convex_solutions(std::span<const std::int64_t> s, std::int64_t arity) {
    if (s.empty()) return 0;
    const std::int64_t hi = s.back();
    std::vector<std::int64_t> hist(static_cast<std::size_t>(hi) + 1, 0);
    for (auto x : s) hist[static_cast<std::size_t>(x)] = 1;
    for (std::int64_t j = 2; j < arity; ++j) {
        std::vector<std::int64_t> next(hist.size() + static_cast<std::size_t>(hi), 0);
        for (std::size_t sum = 0; sum < hist.size(); ++sum) {
            if (hist[sum] == 0) continue;
            for (auto x : s) next[sum + static_cast<std::size_t>(x)] += hist[sum];
        }
        hist = std::move(next);
    }
    std::int64_t total = 0;
    for (auto x : s) {
        const auto target = static_cast<std::size_t>((arity - 1) * x);
        if (target < hist.size()) total += hist[target];
    }
    return total;
}

}  // namespace

void BehrendParams::validate() const {
    if (base < 2) throw InvalidArgument("base M must be at least 2");
    if (constrained < 1) throw InvalidArgument("constrained digit count d must be at least 1");
    if (free_digits < 0) throw InvalidArgument("free digit count d' must be nonnegative");
    if (arity < 4) throw InvalidArgument("equation arity k must be at least 4");
    (void)universe();
}

std::int64_t BehrendParams::universe() const { return checked_pow(base, constrained + free_digits); }

IntervalSet BehrendOutput::as_interval_set() const {
    std::vector<std::int64_t> shifted(members);
    for (auto& x : shifted) ++x;
    return IntervalSet(universe, std::move(shifted));
}

ResidueSet BehrendOutput::as_residue_set(PrimeCyclicGroup group) const {
    if (!members.empty() && members.back() >= group.order()) {
        throw InvalidArgument("modulus too small to hold the Behrend set");
    }
    return ResidueSet(group, members);
}

std::vector<std::int64_t> digit_map(std::int64_t n, std::int64_t base, std::int64_t digits) {
    if (n < 0) throw InvalidArgument("digit map needs n >= 0");
    if (base < 2 || digits < 0) throw InvalidArgument("digit map needs base >= 2 and digits >= 0");
    std::vector<std::int64_t> out(static_cast<std::size_t>(digits));
    for (auto& digit : out) {
        digit = n % base;
        n /= base;
    }
    return out;
}

BehrendOutput build_behrend(const BehrendParams& params) {
    params.validate();
    const std::int64_t m = params.base;
    const std::int64_t d = params.constrained;
    if (allowed_digit_count(m, params.arity) <= 1) throw InvalidArgument("parameters admit no sphere");

    BehrendOutput out;
    out.universe = params.universe();
    const std::int64_t low_span = checked_pow(m, d);
    const std::int64_t high_count = out.universe / low_span;
    const auto low_count = static_cast<std::int64_t>(digit_vectors(allowed_digit_count(m, params.arity), d).size());
    out.t_size = low_count * high_count;

    const auto by_radius = spheres(m, d, params.arity);
    // Largest population; std::map iterates radii in increasing order, so ties keep the smallest r.
    const std::vector<std::vector<std::int64_t>>* best = nullptr;
    for (const auto& [r, vectors] : by_radius) {
        if (!best || vectors.size() > best->size()) {
            best = &vectors;
            out.radius = r;
        }
    }
    if (!best) throw InvalidArgument("parameters admit no sphere");

    for (const auto& v : *best) {
        const std::int64_t low = digit_value(v, m);
        for (std::int64_t h = 0; h < high_count; ++h) out.members.push_back(low + h * low_span);
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

BehrendVerification verify_behrend(const BehrendOutput& out, const BehrendParams& params) {
    params.validate();
    BehrendVerification v;
    v.count = count_convex_solutions(out.members, params.arity);

    std::map<std::vector<std::int64_t>, std::vector<std::int64_t>> classes;
    for (auto x : out.members) classes[digit_map(x, params.base, params.constrained)].push_back(x);
    for (const auto& [digits, members] : classes) v.diagonal_count += count_convex_solutions(members, params.arity);

    v.bound = static_cast<std::int64_t>(out.members.size()) * checked_pow(params.base, params.free_digits * (params.arity - 2));
    v.diagonal_ok = v.count == v.diagonal_count;
    v.within_bound = v.count <= v.bound;
    return v;
}

ChosenParams choose_params(double alpha, std::int64_t arity, const ChooseOptions& options) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("alpha must lie in (0, 1)");
    if (arity < 4) throw InvalidArgument("equation arity k must be at least 4");
    if (!(options.c > 0.0)) throw InvalidArgument("constant c must be positive");

    ChosenParams chosen;
    auto& p = chosen.params;
    p.arity = arity;
    p.constrained = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(options.c * std::log(2.0 / alpha))));
    p.base = std::max<std::int64_t>(static_cast<std::int64_t>(std::ceil(std::pow(alpha, -options.c))), arity + 1);
    p.free_digits = 0;
    p.validate();

    std::size_t largest = 0;
    for (const auto& [r, vectors] : spheres(p.base, p.constrained, arity)) largest = std::max(largest, vectors.size());
    chosen.predicted_density = static_cast<double>(largest) / static_cast<double>(checked_pow(p.base, p.constrained));
    if (chosen.predicted_density < alpha) {
        throw InvalidArgument("no valid parameters: density " + std::to_string(chosen.predicted_density) +
                              " falls below alpha");
    }
    return chosen;
}

}  // namespace ieq
