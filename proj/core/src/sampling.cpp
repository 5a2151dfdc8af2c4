#include "ieq/sampling.hpp"

#include <limits>
#include <numeric>
#include <vector>

#include "ieq/error.hpp"

namespace ieq {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw InvalidArgument("uniform_below needs a positive bound");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v = rng();
    while (v >= limit) v = rng();
    return v % bound;
}

namespace {

std::vector<std::int64_t> sample_distinct(std::int64_t n, std::size_t k, std::uint64_t seed) {
    if (k > static_cast<std::uint64_t>(n)) throw InvalidArgument("cannot draw more distinct elements than exist");
    std::vector<std::int64_t> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), std::int64_t{0});
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < k; ++i) {
        const auto j = i + static_cast<std::size_t>(uniform_below(rng, pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

}  // namespace

ResidueSet random_residue_set(PrimeCyclicGroup group, std::size_t k, std::uint64_t seed) {
    return ResidueSet(group, sample_distinct(group.order(), k, seed));
}

IntervalSet random_interval_set(std::int64_t length, std::size_t k, std::uint64_t seed) {
    if (length < 1) throw InvalidArgument("interval length must be positive");
    auto v = sample_distinct(length, k, seed);
    for (auto& x : v) ++x;
    return IntervalSet(length, std::move(v));
}

}  // namespace ieq
