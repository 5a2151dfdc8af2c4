#include <gtest/gtest.h>

#include "draw.hpp"
#include "ieq/cyclic.hpp"
#include "ieq/error.hpp"
#include "ieq/invariant_equation.hpp"
#include "oracles.hpp"

using namespace ieq;
using V = std::vector<std::int64_t>;

namespace {

V elems(const ResidueSet& s) { return {s.elements().begin(), s.elements().end()}; }

}  // namespace

TEST(Primality, AgreesWithTrialDivision) {
    for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(n), oracle::is_prime_trial(static_cast<std::int64_t>(n))) << n;
}

TEST(Primality, LargeKnownValues) {
    EXPECT_TRUE(is_prime(2305843009213693951ULL));  // 2^61 - 1
    EXPECT_FALSE(is_prime(3215031751ULL));          // strong pseudoprime to 2,3,5,7
    EXPECT_TRUE(is_prime(18446744073709551557ULL));
    EXPECT_EQ(next_prime_above(12), 13u);
    EXPECT_EQ(next_prime_above(13), 17u);
    EXPECT_EQ(next_prime_above(1500), 1511u);
}

TEST(Group, RejectsNonPrimes) {
    EXPECT_THROW(PrimeCyclicGroup(1), InvalidArgument);
    EXPECT_THROW(PrimeCyclicGroup(2), InvalidArgument);
    EXPECT_THROW(PrimeCyclicGroup(15), InvalidArgument);
    EXPECT_NO_THROW(PrimeCyclicGroup(3));
}

TEST(Group, Arithmetic) {
    const PrimeCyclicGroup g(13);
    EXPECT_EQ(g.reduce(-1), 12);
    EXPECT_EQ(g.add(12, 5), 4);
    EXPECT_EQ(g.sub(2, 5), 10);
    EXPECT_EQ(g.neg(0), 0);
    EXPECT_EQ(g.mul(7, 8), 4);
    EXPECT_EQ(g.pow(2, 12), 1);
    for (Residue a = 1; a < 13; ++a) EXPECT_EQ(g.mul(a, g.inverse(a)), 1);
    EXPECT_THROW(g.inverse(26), InvalidArgument);
}

TEST(Group, LargeModulusMultiplication) {
    const PrimeCyclicGroup g(2305843009213693951LL);
    EXPECT_EQ(g.mul(g.order() - 1, g.order() - 1), 1);
}

TEST(ResidueSets, Canonicalization) {
    const PrimeCyclicGroup g(7);
    const ResidueSet s(g, {3, 1, 3, 0});
    EXPECT_EQ(elems(s), (V{0, 1, 3}));
    EXPECT_THROW(ResidueSet(g, {7}), InvalidArgument);
    EXPECT_THROW(ResidueSet(g, {-1}), InvalidArgument);
    const V raw{-1, 8, 15};
    EXPECT_EQ(elems(ResidueSet::from_integers(g, raw)), (V{1, 6}));
    EXPECT_EQ(ResidueSet::full(g).size(), 7u);
    EXPECT_TRUE(ResidueSet::empty(g).empty());
    EXPECT_TRUE(s.is_subset_of(ResidueSet::full(g)));
    EXPECT_EQ(elems(s.intersect(ResidueSet(g, {1, 2, 3}))), (V{1, 3}));
}

TEST(IntervalSets, Bounds) {
    EXPECT_THROW(IntervalSet(5, {0}), InvalidArgument);
    EXPECT_THROW(IntervalSet(5, {6}), InvalidArgument);
    const IntervalSet s(5, {5, 1, 1});
    EXPECT_EQ(s.size(), 2u);
    EXPECT_DOUBLE_EQ(s.density(), 0.4);
}

TEST(Embedding, SmallestPrimeBeyondNorm) {
    const auto e = embed_interval(IntervalSet(3, {1, 2, 3}), InvariantEquation({1, 1, -2}));
    EXPECT_EQ(e.group.order(), 13);
    EXPECT_EQ(elems(e.set), (V{1, 2, 3}));
    EXPECT_THROW(InvariantEquation({1, -1}), InvalidArgument);
}

TEST(Embedding, NoWraparoundForConvexEquation) {
    V ten;
    for (std::int64_t x = 1; x <= 10; ++x) ten.push_back(x);
    const InvariantEquation eq({1, 1, 1, -3});
    const auto e = embed_interval(IntervalSet(10, ten), eq);
    EXPECT_EQ(e.group.order(), 61);
    const V coeffs(eq.coefficients().begin(), eq.coefficients().end());
    EXPECT_EQ(oracle::count(ten, coeffs, 0).total, oracle::count(ten, coeffs, 61).total);
}

TEST(SetAlgebra, Dilation) {
    const PrimeCyclicGroup g(13);
    EXPECT_EQ(elems(dilate_set(ResidueSet(g, {1, 2}), 1)), (V{1, 2}));
    EXPECT_EQ(elems(dilate_set(ResidueSet(g, {1, 2}), -1)), (V{11, 12}));
    EXPECT_EQ(elems(dilate_set(ResidueSet(g, {1, 2, 3}), 3)), (V{3, 6, 9}));
    try {
        dilate_set(ResidueSet(g, {1}), 26);
        FAIL();
    } catch (const InvalidArgument& e) {
        EXPECT_STREQ(e.what(), "degenerate dilation");
    }
}

TEST(SetAlgebra, Translation) {
    EXPECT_EQ(elems(translate_set(ResidueSet(PrimeCyclicGroup(7), {0}), 0)), (V{0}));
    EXPECT_EQ(elems(translate_set(ResidueSet(PrimeCyclicGroup(7), {0, 1}), 6)), (V{0, 6}));
    EXPECT_EQ(elems(translate_set(ResidueSet(PrimeCyclicGroup(13), {1, 2, 3}), 11)), (V{0, 1, 12}));
    EXPECT_EQ(elems(negate_set(ResidueSet(PrimeCyclicGroup(13), {0, 1, 5}))), (V{0, 8, 12}));
}

TEST(SetAlgebra, IteratedSumsets) {
    EXPECT_EQ(elems(iterated_sumset(ResidueSet(PrimeCyclicGroup(7), {0}), 5)), (V{0}));
    EXPECT_EQ(elems(iterated_sumset(ResidueSet(PrimeCyclicGroup(101), {0, 1}), 3)), (V{0, 1, 2, 3}));
    EXPECT_EQ(elems(iterated_sumset(ResidueSet(PrimeCyclicGroup(11), {0, 2, 5}), 2)), (V{0, 2, 4, 5, 7, 10}));
    EXPECT_THROW(iterated_sumset(ResidueSet(PrimeCyclicGroup(11), {0}), 0), InvalidArgument);
}

TEST(SetAlgebra, SumsetsMatchPairEnumeration) {
    testing_support::Draw draw(11);
    for (int trial = 0; trial < 60; ++trial) {
        const auto p = draw.prime(3, 200);
        const auto a = draw.subset(p, static_cast<std::size_t>(draw.range(0, std::min<std::int64_t>(p, 15))));
        const auto b = draw.subset(p, static_cast<std::size_t>(draw.range(0, std::min<std::int64_t>(p, 15))));
        const PrimeCyclicGroup g(p);
        EXPECT_EQ(elems(sumset(ResidueSet(g, a), ResidueSet(g, b))), oracle::sumset(a, b, p));
        V neg_b;
        for (auto x : b) neg_b.push_back(oracle::mod(-x, p));
        EXPECT_EQ(elems(difference_set(ResidueSet(g, a), ResidueSet(g, b))), oracle::sumset(a, neg_b, p));
        const auto w = draw.range(1, 4);
        V acc{0};
        for (std::int64_t i = 0; i < w; ++i) acc = oracle::sumset(acc, a, p);
        if (a.empty()) acc.clear();
        EXPECT_EQ(elems(iterated_sumset(ResidueSet(g, a), w)), acc);
    }
}
