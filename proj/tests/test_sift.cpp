// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ladder/oracle.hpp"
#include "ladder/sift.hpp"
#include "test_support.hpp"

namespace ladder {
namespace {

using Ids = std::vector<AlternativeId>;

TEST(Psp, Case1DropsTheBusOnDelayRisk) {
    const auto r = psp(test::load_fixture("case1.json"));
    EXPECT_EQ(r.feasible, (Ids{"m1", "m3"}));
    ASSERT_EQ(r.eliminations.size(), 1u);
    EXPECT_EQ(r.eliminations[0].alternative, "m2");
    EXPECT_EQ(r.eliminations[0].attribute, AttributeId{5});
    EXPECT_EQ(r.eliminations[0].value, AttributeValue{Ordinal{3}});
    EXPECT_EQ(r.eliminations[0].threshold.predicate, Predicate{MaxLevel{2}});
}

TEST(Psp, Case2DropsTheMetroOnTravelTime) {
    const auto r = psp(test::load_fixture("case2.json"));
    EXPECT_EQ(r.feasible, (Ids{"m2", "m3"}));
    ASSERT_EQ(r.eliminations.size(), 1u);
    EXPECT_EQ(r.eliminations[0].alternative, "m1");
    EXPECT_EQ(r.eliminations[0].attribute, AttributeId{1});
    EXPECT_EQ(r.eliminations[0].value, AttributeValue{Crisp{70}});
}

TEST(Psp, Case3KeepsLegalSites) {
    const auto r = psp(test::load_fixture("case3.json"));
    EXPECT_EQ(r.feasible, (Ids{"site-1", "site-2"}));
    EXPECT_EQ(r.eliminated(), (Ids{"site-3"}));
}

TEST(Psp, Case4KeepsBothGarments) {
    const auto r = psp(test::load_fixture("case4.json"));
    EXPECT_EQ(r.feasible, (Ids{"w1", "w2"}));
    EXPECT_TRUE(r.eliminations.empty());
}

TEST(Psp, EmptyAlternativeList) {
    auto task = test::load_fixture("case1.json");
    task.alternatives.clear();
    const auto r = psp(task);
    EXPECT_TRUE(r.feasible.empty());
    EXPECT_TRUE(r.eliminations.empty());
}

TEST(Psp, RecordsEveryFailingThreshold) {
    auto task = test::load_fixture("case1.json");
    task.alternatives[1].values[AttributeId{2}] = Crisp{500};  // m2 now also over budget
    const auto r = psp(task);
    ASSERT_EQ(r.eliminations.size(), 2u);
    EXPECT_EQ(r.eliminations[0].attribute, AttributeId{2});
    EXPECT_EQ(r.eliminations[1].attribute, AttributeId{5});
    EXPECT_EQ(r.eliminated(), (Ids{"m2"}));
}

// ---- properties -------------------------------------------------------------

DecisionTask restrict_to(DecisionTask task, const Ids& keep) {
    std::erase_if(task.alternatives, [&](const Alternative& a) {
        return std::find(keep.begin(), keep.end(), a.id) == keep.end();
    });
    return task;
}

constexpr std::uint64_t kTasks = 500;

TEST(PspProperties, PartitionsTheInputAndPreservesOrder) {
    for (std::uint64_t seed = 1; seed <= kTasks; ++seed) {
        const auto task = oracle::sweep_task(seed, {});
        const auto r = psp(task);
        const auto out = r.eliminated();
        Ids merged;
        for (const auto& a : task.alternatives) {
            const bool in_f = std::find(r.feasible.begin(), r.feasible.end(), a.id) != r.feasible.end();
            const bool in_e = std::find(out.begin(), out.end(), a.id) != out.end();
            ASSERT_NE(in_f, in_e) << a.id;
            if (in_f) merged.push_back(a.id);
        }
        ASSERT_EQ(merged, r.feasible);
    }
}

TEST(PspProperties, Idempotent) {
    for (std::uint64_t seed = 1; seed <= kTasks; ++seed) {
        const auto task = oracle::sweep_task(seed, {});
        const auto first = psp(task);
        ASSERT_EQ(psp(restrict_to(task, first.feasible)).feasible, first.feasible);
    }
}

TEST(PspProperties, RemovingAnEliminatedAlternativeChangesNothing) {
    for (std::uint64_t seed = 1; seed <= kTasks; ++seed) {
        const auto task = oracle::sweep_task(seed, {});
        const auto r = psp(task);
        for (const auto& gone : r.eliminated()) {
            auto smaller = task;
            std::erase_if(smaller.alternatives, [&](const Alternative& a) { return a.id == gone; });
            ASSERT_EQ(psp(smaller).feasible, r.feasible);
        }
    }
}

TEST(PspProperties, SinglePassEqualsFixedPointLoop) {
    for (std::uint64_t seed = 1; seed <= kTasks; ++seed) {
        const auto task = oracle::sweep_task(seed, {});
        ASSERT_EQ(psp(task).feasible, oracle::brute_force_sift(task)) << "seed " << seed;
    }
}

TEST(PspProperties, FeasibleAlternativesPassEveryThreshold) {
    for (std::uint64_t seed = 1; seed <= kTasks; ++seed) {
        const auto task = oracle::sweep_task(seed, {});
        for (const auto& id : psp(task).feasible)
            for (const auto& t : task.thresholds)
                ASSERT_TRUE(satisfies_threshold(task.alternative(id).values.at(t.attribute), t));
    }
}

}  // namespace
}  // namespace ladder
