#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "ieq/behrend.hpp"
#include "ieq/equations.hpp"
#include "ieq/error.hpp"
#include "oracles.hpp"

using namespace ieq;
using V = std::vector<std::int64_t>;

namespace {

// Builds the set by scanning all of [0, N).
V scan_behrend(std::int64_t m, std::int64_t d, std::int64_t dp, std::int64_t k) {
    std::int64_t n = 1;
    for (std::int64_t i = 0; i < d + dp; ++i) n *= m;
    std::map<std::int64_t, V> spheres;
    for (std::int64_t x = 0; x < n; ++x) {
        std::int64_t y = x, r = 0;
        bool ok = true;
        for (std::int64_t i = 0; i < d; ++i) {
            const auto digit = y % m;
            y /= m;
            ok = ok && digit * k < m;
            r += digit * digit;
        }
        if (ok && r >= 1) spheres[r].push_back(x);
    }
    V best;
    for (const auto& [r, xs] : spheres) {
        if (xs.size() > best.size()) best = xs;
    }
    return best;
}

// Solutions over the integers whose members do not all share the same low digits.
std::int64_t off_diagonal(const V& a, std::int64_t m, std::int64_t d, std::int64_t k) {
    auto low = [&](std::int64_t x) {
        std::int64_t mod = 1;
        for (std::int64_t i = 0; i < d; ++i) mod *= m;
        return x % mod;
    };
    std::int64_t bad = 0;
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    while (true) {
        std::int64_t s = 0;
        for (std::int64_t i = 0; i + 1 < k; ++i) s += a[idx[i]];
        if (s == (k - 1) * a[idx[k - 1]]) {
            for (std::int64_t i = 1; i < k; ++i) {
                if (low(a[idx[i]]) != low(a[idx[0]])) {
                    ++bad;
                    break;
                }
            }
        }
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == a.size()) idx[i++] = 0;
        if (i == idx.size()) break;
    }
    return bad;
}

}  // namespace

TEST(Behrend, DigitMap) {
    EXPECT_EQ(digit_map(26, 5, 2), (V{1, 0}));
    EXPECT_EQ(digit_map(105, 5, 3), (V{0, 1, 4}));
    EXPECT_EQ(digit_map(7, 2, 5), (V{1, 1, 1, 0, 0}));
    EXPECT_THROW(digit_map(-1, 5, 2), InvalidArgument);
}

TEST(Behrend, SmallExample) {
    const BehrendParams params{5, 2, 1, 4};
    const auto out = build_behrend(params);
    EXPECT_EQ(out.universe, 125);
    EXPECT_EQ(out.t_size, 20);
    EXPECT_EQ(out.radius, 1);
    EXPECT_EQ(out.members, (V{1, 5, 26, 30, 51, 55, 76, 80, 101, 105}));
    EXPECT_EQ(out.members, scan_behrend(5, 2, 1, 4));

    const auto v = verify_behrend(out, params);
    EXPECT_EQ(v.count, 82);
    EXPECT_EQ(v.bound, 250);
    EXPECT_TRUE(v.diagonal_ok);
    EXPECT_TRUE(v.within_bound);
    EXPECT_EQ(oracle::count(out.members, {1, 1, 1, -3}, 0).total, 82);

    const auto interval = out.as_interval_set();
    EXPECT_EQ(interval.length(), 125);
    EXPECT_EQ(interval.elements().front(), 2);
}

TEST(Behrend, DegenerateParameters) {
    try {
        build_behrend(BehrendParams{2, 1, 0, 4});
        FAIL();
    } catch (const InvalidArgument& e) {
        EXPECT_STREQ(e.what(), "parameters admit no sphere");
    }
    EXPECT_THROW(build_behrend(BehrendParams{5, 2, 1, 5}), InvalidArgument);
    EXPECT_THROW(build_behrend(BehrendParams{1, 2, 1, 4}), InvalidArgument);
    EXPECT_THROW(build_behrend(BehrendParams{5, 0, 1, 4}), InvalidArgument);
    EXPECT_THROW(build_behrend(BehrendParams{5, 2, 1, 3}), InvalidArgument);
    EXPECT_THROW(build_behrend(BehrendParams{1000, 10, 10, 4}), InvalidArgument);
}

TEST(Behrend, LargerParametersSelfCheck) {
    const BehrendParams params{8, 3, 2, 4};
    const auto out = build_behrend(params);
    EXPECT_EQ(out.members, scan_behrend(8, 3, 2, 4));
    for (auto x : out.members) {
        const auto digits = digit_map(x, 8, 3);
        std::int64_t r = 0;
        for (auto dgt : digits) {
            EXPECT_LT(dgt, 2);
            r += dgt * dgt;
        }
        EXPECT_EQ(r, out.radius);
    }
    const auto v = verify_behrend(out, params);
    EXPECT_TRUE(v.diagonal_ok);
    EXPECT_TRUE(v.within_bound);
    EXPECT_EQ(off_diagonal(out.members, 8, 3, 4), 0);
    EXPECT_EQ(count_solutions_fast(out.as_interval_set(), InvariantEquation::convex(4)).total, v.count);
}

TEST(Behrend, VerificationMatchesEnumerationOnSmallCases) {
    for (const auto& params : {BehrendParams{5, 2, 1, 4}, BehrendParams{7, 2, 1, 4}, BehrendParams{8, 2, 1, 4},
                               BehrendParams{7, 3, 1, 4}, BehrendParams{11, 2, 1, 5}, BehrendParams{9, 2, 0, 4}}) {
        const auto out = build_behrend(params);
        const auto v = verify_behrend(out, params);
        V coeffs(static_cast<std::size_t>(params.arity), 1);
        coeffs.back() = -(params.arity - 1);
        EXPECT_EQ(v.count, oracle::count(out.members, coeffs, 0).total);
        EXPECT_EQ(off_diagonal(out.members, params.base, params.constrained, params.arity), 0);
        EXPECT_TRUE(v.diagonal_ok);
    }
}

TEST(Behrend, TinySetsOnlyTrivial) {
    BehrendOutput one;
    one.universe = 25;
    one.members = {6};
    const auto v = verify_behrend(one, BehrendParams{5, 2, 0, 4});
    EXPECT_EQ(v.count, 1);
    EXPECT_TRUE(v.diagonal_ok);
    BehrendOutput none;
    none.universe = 25;
    EXPECT_EQ(verify_behrend(none, BehrendParams{5, 2, 0, 4}).count, 0);
}

TEST(Behrend, ChooseParams) {
    EXPECT_THROW(choose_params(0.5, 4), InvalidArgument);
    try {
        choose_params(0.5, 4);
    } catch (const InvalidArgument& e) {
        EXPECT_NE(std::string(e.what()).find("no valid parameters"), std::string::npos);
    }
    for (const auto& [alpha, k] : {std::pair{0.01, std::int64_t{4}}, std::pair{0.001, std::int64_t{5}}}) {
        const auto chosen = choose_params(alpha, k);
        EXPECT_EQ(chosen.params.constrained, static_cast<std::int64_t>(std::ceil(0.25 * std::log(2.0 / alpha))));
        EXPECT_GE(chosen.params.base, k + 1);
        const auto out = build_behrend(chosen.params);
        const double achieved = static_cast<double>(out.members.size()) / static_cast<double>(out.universe);
        EXPECT_DOUBLE_EQ(achieved, chosen.predicted_density);
        EXPECT_GE(achieved, alpha);
    }
    EXPECT_THROW(choose_params(0.0, 4), InvalidArgument);
    EXPECT_THROW(choose_params(0.1, 3), InvalidArgument);
}

TEST(Behrend, ResidueEmbedding) {
    const auto out = build_behrend(BehrendParams{5, 2, 1, 4});
    const auto a = out.as_residue_set(PrimeCyclicGroup(1511));
    EXPECT_EQ(count_solutions_fast(a, InvariantEquation::convex(4)).total, 82);
    EXPECT_THROW(out.as_residue_set(PrimeCyclicGroup(101)), InvalidArgument);
}
