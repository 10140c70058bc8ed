#include "support.hpp"

#include <gtest/gtest.h>

using fss::FssParams;
using fss::LocalSearchKind;
using fss::Method;

namespace {

FssParams params_for(std::size_t budget, LocalSearchKind ls, std::uint64_t seed = 1) {
    FssParams p;
    p.max_solutions = budget;
    p.local_search = ls;
    p.seed = seed;
    return p;
}

/// dimension - floor(dimension / 2^i) while at least min_free nodes stay free.
std::vector<std::size_t> schedule_oracle(std::size_t dimension, std::size_t min_free) {
    std::vector<std::size_t> out;
    for (int i = 1;; ++i) {
        auto free_nodes = static_cast<std::size_t>(std::floor(static_cast<double>(dimension) / std::pow(2.0, i)));
        if (free_nodes < min_free)
            break;
        auto s = dimension - free_nodes;
        if (out.empty() || out.back() != s)
            out.push_back(s);
    }
    if (out.empty())
        out.push_back(dimension / 2);
    return out;
}

void check_trace(const fss::RunRecord& r) {
    ASSERT_EQ(r.trace.size(), r.evaluations);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
        const auto& t = r.trace[i];
        ASSERT_EQ(t.evaluation, i + 1);
        best = std::min(best, t.length);
        ASSERT_EQ(t.best_so_far, best);
        if (i > 0) {
            ASSERT_GE(t.elapsed_ms, r.trace[i - 1].elapsed_ms);
        }
    }
    ASSERT_EQ(r.best_length(), best);
}

} // namespace

TEST(SizeSchedule, ThousandNodes) {
    EXPECT_EQ(fss::size_schedule(1000).sizes(), (std::vector<std::size_t>{500, 750, 875, 938, 969, 985}));
}

TEST(SizeSchedule, FiftyOneNodes) {
    // floor(51/8) = 6 free nodes is below the default minimum of 10.
    EXPECT_EQ(fss::size_schedule(51).sizes(), (std::vector<std::size_t>{26, 39}));
    EXPECT_EQ(fss::size_schedule(51, 6).sizes(), (std::vector<std::size_t>{26, 39, 45}));
}

TEST(SizeSchedule, FallsBackToHalfOnTinyInstances) {
    EXPECT_EQ(fss::size_schedule(12).sizes(), (std::vector<std::size_t>{6}));
    EXPECT_EQ(fss::size_schedule(4).sizes(), (std::vector<std::size_t>{2}));
    EXPECT_THROW(fss::size_schedule(3), std::invalid_argument);
}

TEST(SizeSchedule, MatchesDirectEvaluation) {
    for (std::size_t dim = 4; dim <= 5000; dim += 1 + dim / 50)
        for (std::size_t min_free : {1u, 2u, 5u, 10u, 20u}) {
            auto s = fss::size_schedule(dim, min_free).sizes();
            ASSERT_EQ(s, schedule_oracle(dim, min_free)) << dim << "/" << min_free;
            ASSERT_TRUE(std::is_sorted(s.begin(), s.end()));
            ASSERT_EQ(std::adjacent_find(s.begin(), s.end()), s.end());
            for (auto v : s) {
                ASSERT_GT(v, 0u);
                ASSERT_LT(v, dim);
            }
        }
}

TEST(SizeSchedule, AdvanceWrapsAndRemovalTakesTheMinimum) {
    auto s = fss::size_schedule(1000);
    EXPECT_EQ(s.current(), 500u);
    for (int i = 0; i < 5; ++i)
        s.advance();
    EXPECT_EQ(s.current(), 985u);
    s.advance();
    EXPECT_EQ(s.current(), 500u);
    s.remove_current_min();
    EXPECT_EQ(s.current(), 750u);
    EXPECT_EQ(s.sizes().size(), 5u);
}

TEST(Params, Validation) {
    FssParams p;
    p.max_solutions = 1000;
    EXPECT_NO_THROW(p.validate());
    auto bad = [&](auto mutate) {
        FssParams q = p;
        mutate(q);
        EXPECT_THROW(q.validate(), std::invalid_argument);
    };
    bad([](FssParams& q) { q.k = 0; });
    bad([](FssParams& q) { q.k = 501; });
    bad([](FssParams& q) { q.m = 501; });
    bad([](FssParams& q) { q.stag = 0; });
    bad([](FssParams& q) { q.max_solutions = 99; });
    bad([](FssParams& q) { q.rcl_size = 0; });
}

TEST(DefaultBudget, SizeRule) {
    EXPECT_EQ(fss::default_budget(51), 5100u);
    EXPECT_EQ(fss::default_budget(999), 99900u);
    EXPECT_EQ(fss::default_budget(1000), 10000u);
    EXPECT_EQ(fss::default_budget(2392), 23920u);
}

TEST(Grasp, SingleIteration) {
    auto inst = test::load("eil51");
    auto p = params_for(1, LocalSearchKind::three_opt);
    fss::Population pop(500);
    fss::RandomSource rng(1);
    fss::RunRecord rec;
    fss::grasp(inst, p, 1, pop, rng, rec);
    EXPECT_EQ(rec.evaluations, 1u);
    EXPECT_LE(pop.distinct_size(), 1u);
    ASSERT_EQ(rec.trace.size(), 1u);
    EXPECT_EQ(rec.best_length(), rec.trace[0].best_so_far);
    EXPECT_GE(rec.best_length(), 426);
}

TEST(Grasp, HundredIterationsStayValid) {
    auto inst = test::load("eil51");
    auto p = params_for(100, LocalSearchKind::three_opt);
    p.init_population = 100;
    auto rec = fss::run_grasp(inst, p);
    check_trace(rec);
    EXPECT_TRUE(fss::is_permutation_of_nodes(rec.best.order(), 51));
    EXPECT_EQ(fss::tour_length(inst, rec.best.order()), rec.best_length());
}

TEST(Grasp, ThreeOptSolvesEil51) {
    auto inst = test::load("eil51");
    auto rec = fss::run_grasp(inst, params_for(5100, LocalSearchKind::three_opt));
    EXPECT_EQ(rec.best_length(), 426);
}

TEST(RunFss, BudgetEqualToInitialPopulationIsPureGrasp) {
    auto inst = test::load("berlin52");
    auto p = params_for(100, LocalSearchKind::two_opt, 3);
    auto fss_run = fss::run_fss(inst, p);
    auto grasp_run = fss::run_grasp(inst, p);
    EXPECT_EQ(fss_run.evaluations, 100u);
    EXPECT_EQ(fss_run.size_switches, 0u);
    for (const auto& t : fss_run.trace)
        EXPECT_EQ(t.fixed_size, 0u);
    EXPECT_TRUE(fss_run.same_trajectory(grasp_run));
}

TEST(RunFss, SolvesEil51) {
    auto inst = test::load("eil51");
    auto rec = fss::run_fss(inst, params_for(5100, LocalSearchKind::three_opt));
    EXPECT_EQ(rec.best_length(), 426);
    check_trace(rec);
}

TEST(RunFss, BookkeepingInvariants) {
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 12; ++trial) {
        std::size_t n = 4 + static_cast<std::size_t>(gen() % 80);
        auto inst = test::random_instance(n, gen);
        auto p = params_for(100 + gen() % 1500, trial % 2 ? LocalSearchKind::two_opt : LocalSearchKind::three_opt,
                            static_cast<std::uint64_t>(trial));
        p.stag = 1 + gen() % 60;
        p.min_free = 1 + gen() % 12;
        auto rec = fss::run_fss(inst, p);
        check_trace(rec);
        EXPECT_LE(rec.evaluations, p.max_solutions);
        if (rec.evaluations < p.max_solutions) {
            // Stopped early: the whole schedule was removed.
            EXPECT_EQ(rec.sizes_removed, fss::size_schedule(n, p.min_free).sizes().size());
        }
        auto sizes = fss::size_schedule(n, p.min_free).sizes();
        for (std::size_t i = 0; i < rec.trace.size(); ++i) {
            const auto& t = rec.trace[i];
            if (i < p.init_population)
                ASSERT_EQ(t.fixed_size, 0u);
            else
                ASSERT_TRUE(std::binary_search(sizes.begin(), sizes.end(), t.fixed_size));
        }
        auto init_best = rec.trace[std::min(p.init_population, rec.trace.size()) - 1].best_so_far;
        EXPECT_LE(rec.best_length(), init_best);
    }
}

TEST(RunFss, SameSeedSameTrajectory) {
    auto inst = test::load("kroC100");
    auto p = params_for(2000, LocalSearchKind::two_opt, 11);
    auto a = fss::run_fss(inst, p);
    auto b = fss::run_fss(inst, p);
    EXPECT_TRUE(a.same_trajectory(b));
    p.seed = 12;
    EXPECT_FALSE(a.same_trajectory(fss::run_fss(inst, p)));
}

TEST(Solve, Dispatches) {
    auto inst = test::load("eil51");
    auto p = params_for(150, LocalSearchKind::two_opt);
    EXPECT_EQ(fss::solve(inst, Method::grasp, p).method, Method::grasp);
    EXPECT_EQ(fss::solve(inst, Method::fss, p).method, Method::fss);
}

TEST(RelativeError, Examples) {
    EXPECT_DOUBLE_EQ(fss::round2(fss::relative_error(426, 426)), 0.0);
    EXPECT_DOUBLE_EQ(fss::round2(fss::relative_error(387169, 378032)), 2.42);
    EXPECT_DOUBLE_EQ(fss::round2(fss::relative_error(777, 777)), 0.0);
    EXPECT_NEAR(fss::relative_error(110, 100), 10.0, 1e-12);
    EXPECT_THROW(fss::relative_error(1, 0), std::invalid_argument);
}
