#include "invariants.hpp"

#include <gtest/gtest.h>

namespace {

void expect_ok(const test::PropertyResult& r) {
    EXPECT_EQ(r.cases, 1000);
    EXPECT_EQ(r.failures, 0) << r.name << ": " << r.first_failure;
}

} // namespace

TEST(Properties, ConstructionValidity) { expect_ok(test::prop_construction_validity()); }
TEST(Properties, LocalSearchValidityMonotonicityFixpoint) { expect_ok(test::prop_local_search()); }
TEST(Properties, FixAgainstFullSort) { expect_ok(test::prop_fix()); }
TEST(Properties, FixedEdgesSurviveConstruction) { expect_ok(test::prop_fixed_inclusion()); }
TEST(Properties, OccurrenceCount) { expect_ok(test::prop_occurrence_count()); }
TEST(Properties, SizeSchedule) { expect_ok(test::prop_size_schedule()); }
TEST(Properties, SeedDeterminism) { expect_ok(test::prop_seed_determinism()); }
