// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <random>
#include <vector>

#include "ladder/value_order.hpp"
#include "test_support.hpp"

namespace ladder {
namespace {

using PO = PartialOrdering;

TEST(CompareValues, OrdinalBenefit) {
    EXPECT_EQ(compare_values(Ordinal{5}, Ordinal{4}, Polarity::benefit), PO::better);
    EXPECT_EQ(compare_values(Ordinal{4}, Ordinal{5}, Polarity::benefit), PO::worse);
    EXPECT_EQ(compare_values(Ordinal{3}, Ordinal{3}, Polarity::benefit), PO::equal);
}

TEST(CompareValues, OrdinalCostIsReversed) {
    // delay risk: very low (1) beats low (2)
    EXPECT_EQ(compare_values(Ordinal{1}, Ordinal{2}, Polarity::cost), PO::better);
}

TEST(CompareValues, AtLeastBounds) {
    EXPECT_EQ(compare_values(AtLeast{3}, AtLeast{2}, Polarity::benefit), PO::better);
    EXPECT_EQ(compare_values(AtLeast{2}, AtLeast{2}, Polarity::benefit), PO::equal);
}

TEST(CompareValues, IntervalIdentity) {
    EXPECT_EQ(compare_values(Interval{30, 70}, Interval{30, 70}, Polarity::cost), PO::equal);
}

TEST(CompareValues, CrispIsLiftedAgainstInterval) {
    EXPECT_EQ(compare_values(Interval{40, 50}, Crisp{70}, Polarity::cost), PO::better);
    EXPECT_EQ(compare_values(Crisp{70}, Interval{40, 50}, Polarity::cost), PO::worse);
    EXPECT_EQ(compare_values(Crisp{5}, Interval{5, 5}, Polarity::benefit), PO::equal);
}

// Test-local reference: enumerate the integer points of each value and
// compare their extreme points directly.
PO brute_force_interval_cost(int alo, int ahi, int blo, int bhi) {
    std::vector<int> a, b;
    for (int x = alo; x <= ahi; ++x) a.push_back(x);
    for (int x = blo; x <= bhi; ++x) b.push_back(x);
    const int amin = *std::min_element(a.begin(), a.end()), amax = *std::max_element(a.begin(), a.end());
    const int bmin = *std::min_element(b.begin(), b.end()), bmax = *std::max_element(b.begin(), b.end());
    const bool a_no_later = amin <= bmin && amax <= bmax;
    const bool b_no_later = bmin <= amin && bmax <= amax;
    if (a_no_later && b_no_later) return PO::equal;
    if (a_no_later) return PO::better;
    if (b_no_later) return PO::worse;
    return PO::incomparable;
}

TEST(CompareValues, CrossingIntervalsAreIncomparable) {
    const auto expected = brute_force_interval_cost(30, 70, 40, 50);
    ASSERT_EQ(expected, PO::incomparable);
    EXPECT_EQ(compare_values(Interval{30, 70}, Interval{40, 50}, Polarity::cost), expected);
}

TEST(CompareValues, IntervalSweepMatchesEnumeration) {
    for (int alo = 0; alo <= 4; ++alo)
        for (int ahi = alo; ahi <= 4; ++ahi)
            for (int blo = 0; blo <= 4; ++blo)
                for (int bhi = blo; bhi <= 4; ++bhi)
                    ASSERT_EQ(compare_values(Interval{double(alo), double(ahi)}, Interval{double(blo), double(bhi)},
                                             Polarity::cost),
                              brute_force_interval_cost(alo, ahi, blo, bhi));
}

TEST(CompareValues, CategoriesAreNeverOrdered) {
    EXPECT_EQ(compare_values(Category{"red"}, Category{"red"}, Polarity::none), PO::equal);
    EXPECT_EQ(compare_values(Category{"red"}, Category{"blue"}, Polarity::none), PO::incomparable);
}

TEST(CompareValues, KindMismatchIsAContractError) {
    EXPECT_THROW(compare_values(Ordinal{3}, Crisp{3}, Polarity::benefit), std::invalid_argument);
    EXPECT_THROW(compare_values(Category{"a"}, Crisp{3}, Polarity::none), std::invalid_argument);
}

TEST(SatisfiesThreshold, IntervalUsesBestCase) {
    EXPECT_TRUE(satisfies_threshold(Interval{50, 60}, MaxValue{50}));
    EXPECT_FALSE(satisfies_threshold(Interval{51, 60}, MaxValue{50}));
    EXPECT_TRUE(satisfies_threshold(Interval{1, 6}, MinValue{5}));
    EXPECT_TRUE(satisfies_threshold(AtLeast{1}, MinValue{1000}));
    EXPECT_FALSE(satisfies_threshold(AtLeast{11}, MaxValue{10}));
}

TEST(SatisfiesThreshold, Crisp) {
    EXPECT_FALSE(satisfies_threshold(Crisp{70}, MaxValue{60}));
    EXPECT_TRUE(satisfies_threshold(Crisp{60}, MaxValue{60}));
    EXPECT_TRUE(satisfies_threshold(Crisp{60}, MinValue{60}));
}

TEST(SatisfiesThreshold, LevelsAndCategories) {
    EXPECT_TRUE(satisfies_threshold(Ordinal{3}, MinLevel{3}));
    EXPECT_FALSE(satisfies_threshold(Ordinal{3}, MaxLevel{2}));
    EXPECT_TRUE(satisfies_threshold(Category{"white"}, AllowedSet{{"red", "blue", "white"}}));
    EXPECT_FALSE(satisfies_threshold(Category{"black"}, AllowedSet{{"red", "blue", "white"}}));
}

TEST(SatisfiesThreshold, KindMismatchIsAContractError) {
    EXPECT_THROW(satisfies_threshold(Ordinal{3}, MaxValue{3}), std::invalid_argument);
}

TEST(OrdinalLabels, FiveLevelScale) {
    EXPECT_EQ(ordinal_from_label("very_low"), 1);
    EXPECT_EQ(ordinal_from_label("low"), 2);
    EXPECT_EQ(ordinal_from_label("moderate"), 3);
    EXPECT_EQ(ordinal_from_label("high"), 4);
    EXPECT_EQ(ordinal_from_label("very_high"), 5);
    try {
        ordinal_from_label("medium");
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.category(), ErrorCategory::invalid_value);
    }
}

// ---- randomized properties ------------------------------------------------

enum class Family { numeric, ordinal, categorical };

AttributeValue draw(std::mt19937_64& rng, Family f) {
    std::uniform_int_distribution<int> small(0, 6);
    switch (f) {
        case Family::ordinal: return Ordinal{std::uniform_int_distribution<int>(1, 5)(rng)};
        case Family::categorical: return Category{small(rng) % 2 ? "red" : "blue"};
        case Family::numeric: break;
    }
    const double lo = small(rng);
    switch (small(rng) % 3) {
        case 0: return Crisp{lo};
        case 1: return Interval{lo, lo + small(rng) % 4};
        default: return AtLeast{lo};
    }
}

Family draw_family(std::mt19937_64& rng) { return static_cast<Family>(rng() % 3); }

Polarity polarity_for(Family f, std::mt19937_64& rng) {
    if (f == Family::categorical) return Polarity::none;
    return rng() % 2 ? Polarity::cost : Polarity::benefit;
}

constexpr int kTrials = 2000;

TEST(ValueOrderProperties, Antisymmetry) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < kTrials; ++i) {
        const auto f = draw_family(rng);
        const auto pol = polarity_for(f, rng);
        const auto a = draw(rng, f), b = draw(rng, f);
        ASSERT_EQ(compare_values(a, b, pol), reverse(compare_values(b, a, pol)));
        ASSERT_EQ(compare_values(a, a, pol), PO::equal);
    }
}

TEST(ValueOrderProperties, StrictTransitivity) {
    std::mt19937_64 rng(12);
    int chains = 0;
    for (int i = 0; i < 20 * kTrials; ++i) {
        const auto f = draw_family(rng);
        const auto pol = polarity_for(f, rng);
        const auto a = draw(rng, f), b = draw(rng, f), c = draw(rng, f);
        if (compare_values(a, b, pol) == PO::better && compare_values(b, c, pol) == PO::better) {
            ++chains;
            ASSERT_EQ(compare_values(a, c, pol), PO::better);
        }
    }
    EXPECT_GE(chains, 200);
}

TEST(ValueOrderProperties, PolarityFlip) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < kTrials; ++i) {
        const auto f = rng() % 2 ? Family::numeric : Family::ordinal;
        const auto a = draw(rng, f), b = draw(rng, f);
        ASSERT_EQ(compare_values(a, b, Polarity::cost), reverse(compare_values(a, b, Polarity::benefit)));
    }
}

TEST(ValueOrderProperties, MonotoneRescalingInvariance) {
    std::mt19937_64 rng(14);
    std::uniform_int_distribution<int> limit(-2, 10);
    for (int i = 0; i < kTrials; ++i) {
        const test::MonotoneMap g(rng);
        const auto pol = rng() % 2 ? Polarity::cost : Polarity::benefit;
        const auto a = draw(rng, Family::numeric), b = draw(rng, Family::numeric);
        const auto ga = test::rescale(a, g), gb = test::rescale(b, g);
        ASSERT_EQ(compare_values(a, b, pol), compare_values(ga, gb, pol));

        const Predicate p = rng() % 2 ? Predicate{MaxValue{double(limit(rng))}} : Predicate{MinValue{double(limit(rng))}};
        ASSERT_EQ(satisfies_threshold(a, p), satisfies_threshold(ga, test::rescale(p, g)));
    }
}

}  // namespace
}  // namespace ladder
