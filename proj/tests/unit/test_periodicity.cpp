#include <gtest/gtest.h>

#include <cmath>

#include "draw.hpp"
#include "ieq/bohr.hpp"
#include "ieq/error.hpp"
#include "ieq/fourier.hpp"
#include "ieq/periodicity.hpp"
#include "oracles.hpp"

using namespace ieq;
using V = std::vector<std::int64_t>;

namespace {

V elems(const ResidueSet& s) { return {s.elements().begin(), s.elements().end()}; }

std::vector<double> conv_values(const std::vector<V>& sets, std::int64_t p) {
    auto acc = oracle::indicator(sets.front(), p);
    for (std::size_t i = 1; i < sets.size(); ++i) acc = oracle::convolve(acc, oracle::indicator(sets[i], p));
    return acc;
}

double deviation(const std::vector<double>& f, std::int64_t t, double q) {
    const auto p = static_cast<std::int64_t>(f.size());
    std::vector<double> d(f.size());
    for (std::int64_t x = 0; x < p; ++x) d[x] = f[oracle::mod(x + t, p)] - f[x];
    return oracle::lp(d, q);
}

V interval(std::int64_t lo, std::int64_t len, std::int64_t p) {
    V out;
    for (std::int64_t i = 0; i < len; ++i) out.push_back(oracle::mod(lo + i, p));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(ShiftDeviation, Examples) {
    const PrimeCyclicGroup g(7);
    const auto f = GroupFunction::indicator(ResidueSet(g, {0, 1}));
    EXPECT_EQ(shift_deviation(f, 0, 1.0), 0.0);
    EXPECT_EQ(shift_deviation(GroupFunction::constant(g, 3.0), 4, 2.0), 0.0);
    EXPECT_DOUBLE_EQ(shift_deviation(f, 1, 1.0), 2.0);
}

TEST(AlmostPeriods, Examples) {
    const PrimeCyclicGroup g(7);
    const auto ap = almost_periods(ResidueSet(g, {0, 1}), ResidueSet(g, {0}), 0.5, 1.0);
    EXPECT_EQ(elems(ap.periods), (V{0}));
    EXPECT_DOUBLE_EQ(ap.bound, 1.0);
    EXPECT_EQ(almost_periods(ResidueSet::full(g), ResidueSet::full(g), 0.01, 2.0).periods, ResidueSet::full(g));
    EXPECT_THROW(almost_periods(ResidueSet::empty(g), ResidueSet::full(g), 0.5, 1.0), InvalidArgument);
    EXPECT_THROW(almost_periods(ResidueSet::full(g), ResidueSet::full(g), 0.5, 0.5), InvalidArgument);
}

TEST(AlmostPeriods, MatchDirectEvaluation) {
    testing_support::Draw draw(13);
    for (int trial = 0; trial < 30; ++trial) {
        const auto p = draw.prime(5, 101);
        const auto a = draw.subset(p, static_cast<std::size_t>(draw.range(1, p)));
        const auto l = draw.subset(p, static_cast<std::size_t>(draw.range(1, p)));
        const double eps = 0.05 + draw.unit();
        const double q = std::vector<double>{1.0, 1.5, 2.0, kInfinityNorm}[static_cast<std::size_t>(draw.range(0, 3))];
        const PrimeCyclicGroup g(p);
        const auto ap = almost_periods(ResidueSet(g, a), ResidueSet(g, l), eps, q);
        const double bound = std::isinf(q) ? eps * static_cast<double>(a.size())
                                           : eps * static_cast<double>(a.size()) * std::pow(static_cast<double>(l.size()), 1.0 / q);
        EXPECT_NEAR(ap.bound, bound, 1e-9 * bound);
        const auto f = conv_values({a, l}, p);
        for (std::int64_t t = 0; t < p; ++t) {
            const double dev = deviation(f, t, q);
            if (std::abs(dev - bound) > 1e-7 * std::max(1.0, bound)) EXPECT_EQ(ap.periods.contains(t), dev <= bound) << t;
        }
    }
}

TEST(AlmostPeriods, MultiSetVersion) {
    const PrimeCyclicGroup g(11);
    const std::vector<ResidueSet> full{ResidueSet::full(g), ResidueSet::full(g)};
    EXPECT_EQ(multi_almost_periods(full, ResidueSet::full(g), ResidueSet::full(g), 0.1).periods, ResidueSet::full(g));

    testing_support::Draw draw(14);
    const auto p = 31;
    const PrimeCyclicGroup g31(p);
    const V a1 = draw.subset(p, 6), a2 = draw.subset(p, 5), m = draw.subset(p, 4), l = draw.subset(p, 9);
    const std::vector<ResidueSet> as{ResidueSet(g31, a1), ResidueSet(g31, a2)};
    const double eps = 0.05;
    const auto ap = multi_almost_periods(as, ResidueSet(g31, m), ResidueSet(g31, l), eps);
    const double bound = eps * 6 * 5 * 4;
    EXPECT_NEAR(ap.bound, bound, 1e-12);
    const auto f = conv_values({a1, a2, m, l}, p);
    for (std::int64_t t = 0; t < p; ++t) EXPECT_EQ(ap.periods.contains(t), deviation(f, t, kInfinityNorm) <= bound) << t;

    // Bohr sets drawn from inside the period set pass the pointwise check.
    const auto found = largest_bohr_within(ap.periods, 2);
    if (found) {
        EXPECT_TRUE(verify_bohr_periods(*found, as, ResidueSet(g31, m), ResidueSet(g31, l), eps));
        const auto members = enumerate(*found);
        for (auto t : members.elements()) EXPECT_LE(deviation(f, t, kInfinityNorm), bound);
    }
}

TEST(BohrPeriods, TrivialCases) {
    const PrimeCyclicGroup g(13);
    const std::vector<ResidueSet> as{ResidueSet(g, {0, 3, 4})};
    const ResidueSet m(g, {1, 2}), l(g, {5});
    EXPECT_TRUE(verify_bohr_periods(BohrSet(g, {1}, 0.1), as, m, l, 0.01));
    EXPECT_TRUE(verify_bohr_periods(BohrSet(g, {1}, 2.0), as, m, l, 2.0));
}

TEST(LargestBohrWithin, Examples) {
    const PrimeCyclicGroup g(13);
    const auto target = enumerate(BohrSet(g, {1}, 1.0));
    const auto found = largest_bohr_within(target, 1);
    ASSERT_TRUE(found.has_value());
    EXPECT_TRUE(enumerate(*found).is_subset_of(target));
    EXPECT_EQ(enumerate(*found).size(), 5u);
    EXPECT_FALSE(largest_bohr_within(ResidueSet(g, {0}), 2).has_value());
    EXPECT_FALSE(largest_bohr_within(ResidueSet(g, {1, 2}), 2).has_value());
    const auto all = largest_bohr_within(ResidueSet::full(g), 1);
    ASSERT_TRUE(all.has_value());
    EXPECT_EQ(enumerate(*all), ResidueSet::full(g));
}

TEST(IncrementFromPeriods, SingletonBohrSet) {
    const PrimeCyclicGroup g(17);
    const ResidueSet a(g, {0, 3, 5});
    const BohrSet b(g, {1}, 0.1);
    ASSERT_EQ(enumerate(b).size(), 1u);
    const auto r = increment_from_periods(normalized_indicator(ResidueSet(g, {0})), a, b, 0.0);
    EXPECT_EQ(r.x, 0);
    EXPECT_DOUBLE_EQ(r.density, 1.0);
    EXPECT_GE(r.density, 2 * r.alpha);
}

TEST(IncrementFromPeriods, PreconditionsAreNamed) {
    const PrimeCyclicGroup g(17);
    const BohrSet b(g, {1}, 0.1);
    const auto f = normalized_indicator(ResidueSet(g, {0}));
    try {
        increment_from_periods(f, ResidueSet::full(g), b, 0.1);
        FAIL();
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("condition (ii)"), std::string::npos);
    }
    try {
        increment_from_periods(f, ResidueSet(g, {1, 2}), b, 0.1);
        FAIL();
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("condition (iii)"), std::string::npos);
    }
    try {
        increment_from_periods(f, ResidueSet(g, {0}), BohrSet(g, {1}, 1.0), 0.1);
        FAIL();
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("condition (i)"), std::string::npos);
    }
}

TEST(IncrementFromPeriods, ConstructedInstances) {
    testing_support::Draw draw(15);
    int accepted = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const std::int64_t p = draw.prime(31, 211);
        const PrimeCyclicGroup g(p);
        // A: a few long intervals, nearly invariant under short shifts.
        V a_elems;
        const auto pieces = draw.range(1, 3);
        for (std::int64_t i = 0; i < pieces; ++i) {
            const auto iv = interval(draw.range(0, p - 1), draw.range(p / 12, p / 6), p);
            a_elems.insert(a_elems.end(), iv.begin(), iv.end());
        }
        const ResidueSet a(g, a_elems);
        const BohrSet b(g, {1}, 2 * std::sin(M_PI * static_cast<double>(draw.range(1, 3)) / static_cast<double>(p)));
        V s;
        for (auto x : a.elements()) s.push_back(oracle::mod(-x, p));
        const auto f = normalized_indicator(ResidueSet(g, s));
        const auto fa = conv_values({s, V(a.elements().begin(), a.elements().end())}, p);
        double eps = 0.0;
        const auto members_b = enumerate(b);
        for (auto t : members_b.elements()) {
            eps = std::max(eps, deviation(fa, t, kInfinityNorm) / static_cast<double>(s.size()));
        }
        if (a.density() > 0.5) {
            EXPECT_THROW(increment_from_periods(f, a, b, eps), PreconditionError);
            continue;
        }
        const auto r = increment_from_periods(f, a, b, eps);
        // Exhaustive argmax oracle.
        const auto members = enumerate(b);
        double best = -1;
        for (std::int64_t x = 0; x < p; ++x) {
            std::size_t hits = 0;
            for (auto y : members.elements()) hits += a.contains(oracle::mod(x + y, p));
            best = std::max(best, static_cast<double>(hits) / static_cast<double>(members.size()));
        }
        EXPECT_DOUBLE_EQ(r.density, best);
        EXPECT_GE(r.density, 2 * a.density() * (1 - 2 * eps) - 1e-12);
        ++accepted;
    }
    EXPECT_GT(accepted, 20);
}

TEST(DenseTranslate, Preconditions) {
    const PrimeCyclicGroup g(101);
    const BohrSet b(g, {1}, 1.0);
    EXPECT_THROW(dense_translate(ResidueSet::empty(g), b, 0.001), PreconditionError);
    EXPECT_THROW(dense_translate(ResidueSet(g, {50}), b, 0.001), PreconditionError);
    EXPECT_THROW(dense_translate(ResidueSet(g, {0}), b, 0.5), PreconditionError);
}

TEST(DenseTranslate, RandomInstancesMeetGuarantee) {
    testing_support::Draw draw(16);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const auto p = trial % 2 ? 101 : 1009;
        const PrimeCyclicGroup g(p);
        BohrSet b(g, {draw.range(1, p - 1)}, 0.5 + 1.5 * draw.unit());
        b = dilate(b, find_regular_dilate(b));
        const auto members = enumerate(b);
        const double keep = draw.unit();
        V a;
        for (auto x : members.elements()) {
            if (draw.unit() < keep) a.push_back(x);
        }
        if (a.empty()) continue;
        const ResidueSet as(g, a);
        const double alpha = static_cast<double>(a.size()) / static_cast<double>(members.size());
        const double delta = alpha / 240.0 * draw.unit() + 1e-9;
        const auto bigger = enumerate(dilate(b, 1 + delta)).size();
        if (static_cast<double>(bigger) > 1.01 * static_cast<double>(members.size())) {
            EXPECT_THROW(dense_translate(as, b, delta), PreconditionError);
            continue;
        }
        const auto r = dense_translate(as, b, delta);
        const auto small = enumerate(dilate(b, delta));
        double best = -1;
        for (auto x : members.elements()) {
            std::size_t hits = 0;
            for (auto y : small.elements()) hits += as.contains(oracle::mod(x + y, p));
            best = std::max(best, static_cast<double>(hits) / static_cast<double>(small.size()));
        }
        EXPECT_DOUBLE_EQ(r.density, best);
        EXPECT_GE(r.density, 0.9 * alpha);
        ++checked;
    }
    EXPECT_GT(checked, 10);
}

TEST(CoefficientTranslates, WholeBohrSetIsAllDense) {
    const PrimeCyclicGroup g(101);
    BohrSet b(g, {1}, 1.0);
    b = dilate(b, find_regular_dilate(b));
    const std::vector<std::int64_t> coeffs{1, 1, -2};
    const std::vector<double> ones(3, 1.0);
    const auto r = coefficient_translates(enumerate(b), b, coeffs, ones);
    EXPECT_EQ(r.outcome, TranslateOutcome::AllDense);
    for (double d : r.densities) EXPECT_DOUBLE_EQ(d, 1.0);
    const std::vector<std::int64_t> two{1, -1};
    EXPECT_THROW(coefficient_translates(enumerate(b), b, two, std::vector<double>(2, 1.0)), InvalidArgument);
}

TEST(CoefficientTranslates, RandomSubsetsVerifiedByCounting) {
    testing_support::Draw draw(17);
    const PrimeCyclicGroup g(101);
    const std::vector<std::int64_t> coeffs{1, 1, -2};
    for (int trial = 0; trial < 10; ++trial) {
        BohrSet b(g, {draw.range(1, 50)}, 1.0 + draw.unit());
        b = dilate(b, find_regular_dilate(b));
        const auto members = enumerate(b);
        V a;
        for (auto x : members.elements()) {
            if (draw.unit() < 0.3) a.push_back(x);
        }
        if (a.empty()) continue;
        const ResidueSet as(g, a);
        std::vector<double> dl(3);
        for (auto& d : dl) d = 0.5 + 0.5 * draw.unit();
        std::optional<CoefficientTranslates> found;
        try {
            found = coefficient_translates(as, b, coeffs, dl);
        } catch (const PreconditionError&) {
            continue;
        }
        const auto& r = *found;
        const double alpha = static_cast<double>(a.size()) / static_cast<double>(members.size());
        for (std::size_t i = 0; i < 3; ++i) {
            const auto bi = enumerate(r.part_bohr[i]);
            EXPECT_EQ(r.parts[i], translate_set(as, -r.x).intersect(bi));
            const auto target = enumerate(r.target_bohr[i]);
            const auto image = dilate_set(r.parts[i], coeffs[i]);
            EXPECT_TRUE(image.is_subset_of(target));
            EXPECT_DOUBLE_EQ(r.densities[i], static_cast<double>(image.size()) / static_cast<double>(target.size()));
        }
        if (r.outcome == TranslateOutcome::Increment) {
            EXPECT_GE(r.densities[r.increment_index], (1 + 1.0 / 48) * alpha);
        } else {
            for (double d : r.densities) EXPECT_GE(d, 7.0 / 8.0 * alpha - 1e-12);
        }
    }
}

TEST(PopularSums, Examples) {
    const PrimeCyclicGroup g(13);
    const std::vector<ResidueSet> sets{ResidueSet(g, {0, 1, 2}), ResidueSet(g, {0, 1, 2})};
    const auto ps = popular_sums(sets, 0.5);
    EXPECT_DOUBLE_EQ(ps.threshold, 0.1875);
    EXPECT_EQ(elems(ps.popular), (V{0, 1, 2, 3, 4}));

    const std::vector<ResidueSet> full{ResidueSet::full(g), ResidueSet::full(g), ResidueSet::full(g)};
    EXPECT_EQ(popular_sums(full, 1.0).popular, ResidueSet::full(g));
    const std::vector<ResidueSet> single{ResidueSet(g, {3}), ResidueSet(g, {4})};
    EXPECT_EQ(elems(popular_sums(single, 0.5).popular), (V{7}));
    EXPECT_TRUE(popular_sums(single, 9.0).popular.empty());
    EXPECT_EQ(elems(popular_sums(sets, 0.5, ResidueSet(g, {1, 4, 9})).popular), (V{1, 4}));
    EXPECT_THROW(popular_sums(std::vector<ResidueSet>{}, 0.5), InvalidArgument);
}

TEST(SumsetContainment, Examples) {
    const PrimeCyclicGroup g(13);
    EXPECT_TRUE(bohr_in_sumset_check(BohrSet(g, {1}, 1.0), ResidueSet::full(g), 1));
    EXPECT_TRUE(bohr_in_sumset_check(BohrSet(g, {1}, 0.1), ResidueSet(g, {0}), 1));
    EXPECT_FALSE(bohr_in_sumset_check(BohrSet(g, {1}, 1.0), ResidueSet(g, {0}), 1));

    const PrimeCyclicGroup g101(101);
    const V a{0, 1, 5};
    V wa{0};
    for (int i = 0; i < 9; ++i) wa = oracle::sumset(wa, a, 101);
    V neg;
    for (auto x : wa) neg.push_back(oracle::mod(-x, 101));
    const auto diff = ResidueSet(g101, oracle::sumset(wa, neg, 101));
    const auto candidate = largest_bohr_within(diff, 1);
    ASSERT_TRUE(candidate.has_value());
    EXPECT_TRUE(bohr_in_sumset_check(*candidate, ResidueSet(g101, a), 1));
    const BohrSet wide(g101, {1}, 2.0);
    EXPECT_EQ(bohr_in_sumset_check(wide, ResidueSet(g101, a), 1), enumerate(wide).is_subset_of(diff));
}
