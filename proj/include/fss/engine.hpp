#pragma once

/// @file engine.hpp
/// @brief GRASP loop and the fixed set search driver.

#include <fss/construction.hpp>
#include <fss/fixed_set.hpp>
#include <fss/instance.hpp>
#include <fss/local_search.hpp>
#include <fss/population.hpp>
#include <fss/random.hpp>
#include <fss/tour.hpp>

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fss {

enum class Method { grasp, fss };

inline std::string_view to_string(Method method) { return method == Method::grasp ? "grasp" : "fss"; }

struct FssParams {
    std::size_t k = 10;
    std::size_t n = 500;
    std::size_t m = 100;
    std::size_t init_population = 100;
    std::size_t stag = 100;
    std::size_t rcl_size = 20;
    std::size_t min_free = 10;
    LocalSearchKind local_search = LocalSearchKind::three_opt;
    std::size_t max_solutions = 0;
    std::uint64_t seed = 1;

    /// Throws std::invalid_argument naming the first violated constraint.
    void validate() const {
        auto fail = [](const std::string& what) { throw std::invalid_argument("invalid parameters: " + what); };
        if (k < 1 || k > n)
            fail("need 1 <= k <= n");
        if (m < 1 || m > n)
            fail("need 1 <= m <= n");
        if (stag < 1)
            fail("stag must be at least 1");
        if (rcl_size < 1)
            fail("rcl size must be at least 1");
        if (min_free < 1)
            fail("min-free must be at least 1");
        if (init_population < 1)
            fail("initial population must be at least 1");
        if (max_solutions < init_population)
            fail("budget " + std::to_string(max_solutions) + " is below the initial population " +
                 std::to_string(init_population));
    }

    friend bool operator==(const FssParams&, const FssParams&) = default;
};

/// 100 evaluations per node below 1000 nodes, 10 per node above.
inline std::size_t default_budget(std::size_t dimension) {
    return dimension < 1000 ? 100 * dimension : 10 * dimension;
}

/// Ascending fixed-set sizes dimension - floor(dimension / 2^i), kept while
/// at least `min_free` nodes stay free. Sizes are only ever removed from the
/// front.
class SizeSchedule {
  public:
    explicit SizeSchedule(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {}

    const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
    bool empty() const noexcept { return sizes_.empty(); }
    std::size_t index() const noexcept { return index_; }
    std::size_t current() const { return sizes_.at(index_); }

    /// Next larger size, wrapping to the smallest after the largest.
    void advance() noexcept {
        if (!sizes_.empty())
            index_ = (index_ + 1) % sizes_.size();
    }

    /// Drops the smallest size, which must be the current one; the current
    /// size becomes the next larger.
    void remove_current_min() {
        assert(index_ == 0 && !sizes_.empty());
        if (index_ != 0)
            throw std::logic_error("only the smallest fixed-set size may be removed");
        sizes_.erase(sizes_.begin());
    }

  private:
    std::vector<std::size_t> sizes_;
    std::size_t index_ = 0;
};

inline SizeSchedule size_schedule(std::size_t dimension, std::size_t min_free = 10) {
    if (dimension < 4)
        throw std::invalid_argument("size schedule needs at least 4 nodes, got " + std::to_string(dimension));
    if (min_free < 1)
        throw std::invalid_argument("min_free must be positive");
    std::vector<std::size_t> sizes;
    for (std::size_t i = 1; i < 64; ++i) {
        std::size_t free_nodes = dimension >> i;
        if (free_nodes < min_free)
            break;
        std::size_t s = dimension - free_nodes;
        if (sizes.empty() || sizes.back() != s)
            sizes.push_back(s);
    }
    if (sizes.empty())
        sizes.push_back(dimension / 2);
    return SizeSchedule(std::move(sizes));
}

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

struct TraceEntry {
    std::size_t evaluation = 0; // 1-based
    std::int64_t length = 0;
    std::int64_t best_so_far = 0;
    double elapsed_ms = 0.0;
    std::size_t fixed_size = 0; // 0 while building the initial population

    /// Equal apart from the wall-clock column.
    bool same_step(const TraceEntry& o) const noexcept {
        return evaluation == o.evaluation && length == o.length && best_so_far == o.best_so_far &&
               fixed_size == o.fixed_size;
    }
};

struct RunRecord {
    FssParams params;
    Method method = Method::fss;
    std::vector<TraceEntry> trace;
    Tour best;
    std::size_t evaluations = 0;
    std::size_t size_switches = 0;
    std::size_t sizes_removed = 0;
    Stopwatch clock;

    std::int64_t best_length() const noexcept { return best.length(); }
    double elapsed_ms() const { return trace.empty() ? 0.0 : trace.back().elapsed_ms; }

    /// Same evaluations in the same order, ignoring wall-clock times.
    bool same_trajectory(const RunRecord& o) const {
        return best == o.best && evaluations == o.evaluations && size_switches == o.size_switches &&
               sizes_removed == o.sizes_removed && trace.size() == o.trace.size() &&
               std::equal(trace.begin(), trace.end(), o.trace.begin(),
                          [](const TraceEntry& a, const TraceEntry& b) { return a.same_step(b); });
    }
};

namespace detail {

inline Population::Insertion archive(Tour tour, std::size_t fixed_size, Population& pop, RunRecord& record) {
    const std::int64_t length = tour.length();
    auto insertion = pop.insert(std::move(tour));
    ++record.evaluations;
    const Tour& best = pop.global_best();
    if (insertion.new_best || record.evaluations == 1)
        record.best = best;
    record.trace.push_back({record.evaluations, length, best.length(), record.clock.elapsed_ms(), fixed_size});
    return insertion;
}

} // namespace detail

/// `budget` iterations of randomized construction, local search and archiving.
inline void grasp(const Instance& instance, const FssParams& params, std::size_t budget, Population& pop,
                  RandomSource& rng, RunRecord& record) {
    for (std::size_t i = 0; i < budget; ++i) {
        Tour s = local_search(instance, greedy_randomized(instance, rng), params.local_search);
        detail::archive(std::move(s), 0, pop, record);
    }
}

/// Thrown when a constructed tour misses an edge of its fixed set.
class InvariantViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

inline RunRecord run_grasp(const Instance& instance, const FssParams& params) {
    params.validate();
    RunRecord record;
    record.params = params;
    record.method = Method::grasp;
    Population pop(std::max(params.n, params.m));
    RandomSource rng(params.seed);
    grasp(instance, params, params.max_solutions, pop, rng, record);
    return record;
}

inline RunRecord run_fss(const Instance& instance, const FssParams& params) {
    params.validate();
    RunRecord record;
    record.params = params;
    record.method = Method::fss;
    Population pop(std::max(params.n, params.m));
    RandomSource rng(params.seed);

    grasp(instance, params, params.init_population, pop, rng, record);
    if (instance.size() < 4)
        return record;

    SizeSchedule schedule = size_schedule(instance.size(), params.min_free);
    std::size_t best_stagnant = 0;
    std::size_t quality_stagnant = 0;
    while (record.evaluations < params.max_solutions && !schedule.empty()) {
        const std::size_t size = schedule.current();
        auto sample = sample_solutions(pop, params.k, params.n, rng);
        Tour base = pick_base(pop, params.m, rng);
        FixedSet fixed = fix(base, sample, size);

        Tour s = greedy_with_fixed(instance, fixed, rng);
        TourAdjacency adjacency(s.order());
        for (const auto& e : fixed.edges())
            if (!adjacency.contains(e))
                throw InvariantViolation("constructed tour misses fixed edge (" + std::to_string(e.u) + "," +
                                         std::to_string(e.v) + ")");
        auto preset = preset_from_fixed(fixed);
        s = local_search(instance, s, params.local_search, preset);

        auto insertion = detail::archive(std::move(s), size, pop, record);
        best_stagnant = insertion.new_best ? 0 : best_stagnant + 1;
        quality_stagnant = insertion.rank ? 0 : quality_stagnant + 1;

        if (best_stagnant >= params.stag) {
            if (quality_stagnant >= params.stag && schedule.index() == 0) {
                schedule.remove_current_min();
                ++record.sizes_removed;
            } else {
                schedule.advance();
            }
            if (!schedule.empty())
                ++record.size_switches;
            best_stagnant = 0;
            quality_stagnant = 0;
        }
    }
    return record;
}

inline RunRecord solve(const Instance& instance, Method method, const FssParams& params) {
    return method == Method::grasp ? run_grasp(instance, params) : run_fss(instance, params);
}

/// Percentage above the known best.
inline double relative_error(std::int64_t found, std::int64_t known_best) {
    if (known_best <= 0)
        throw std::invalid_argument("known best length must be positive");
    return 100.0 * static_cast<double>(found - known_best) / static_cast<double>(known_best);
}

inline double round2(double value) { return std::round(value * 100.0) / 100.0; }

} // namespace fss
