#pragma once

/// @file construction.hpp
/// @brief Randomized nearest-neighbour construction with a cardinality RCL,
/// plain and with preselected (fixed) paths.

#include <fss/fixed_set.hpp>
#include <fss/instance.hpp>
#include <fss/random.hpp>
#include <fss/tour.hpp>

#include <limits>
#include <span>
#include <vector>

namespace fss {

namespace detail {

/// Nearest node not yet visited; ties to the smaller id.
inline int nearest_unvisited(const Instance& instance, int from, const std::vector<char>& visited) {
    int best = -1;
    int best_dist = std::numeric_limits<int>::max();
    for (std::size_t v = 0; v < instance.size(); ++v) {
        if (visited[v])
            continue;
        int d = instance.dist(from, static_cast<int>(v));
        if (d < best_dist) {
            best_dist = d;
            best = static_cast<int>(v);
        }
    }
    return best;
}

/// One RCL step: uniform over the unvisited members of `from`'s neighbour
/// list, else the nearest unvisited node.
inline int select_next(const Instance& instance, int from, const std::vector<char>& visited,
                       std::vector<int>& scratch, RandomSource& rng) {
    scratch.clear();
    for (int v : instance.neighbors(from))
        if (!visited[static_cast<std::size_t>(v)])
            scratch.push_back(v);
    if (scratch.empty())
        return nearest_unvisited(instance, from, visited);
    return scratch[rng.index(scratch.size())];
}

} // namespace detail

inline Tour greedy_randomized(const Instance& instance, RandomSource& rng) {
    const std::size_t n = instance.size();
    std::vector<char> visited(n, 0);
    std::vector<int> order;
    std::vector<int> scratch;
    order.reserve(n);

    int cur = static_cast<int>(rng.index(n));
    order.push_back(cur);
    visited[static_cast<std::size_t>(cur)] = 1;
    while (order.size() < n) {
        cur = detail::select_next(instance, cur, visited, scratch, rng);
        order.push_back(cur);
        visited[static_cast<std::size_t>(cur)] = 1;
    }
    return Tour(instance, std::move(order));
}

/// Builds a tour containing every edge of `fixed`. Interior path nodes are
/// never candidates; selecting a path endpoint splices in the whole path,
/// oriented away from the current city, and continues from its far end.
inline Tour greedy_with_fixed(const Instance& instance, const FixedSet& fixed, RandomSource& rng) {
    const std::size_t n = instance.size();
    constexpr int none = -1;
    // For endpoints: index of their path. Interior nodes start out visited.
    std::vector<int> path_of(n, none);
    std::vector<char> visited(n, 0);
    const auto& paths = fixed.paths();
    for (std::size_t p = 0; p < paths.size(); ++p) {
        const auto& nodes = paths[p].nodes;
        for (int v : nodes)
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw InfeasibleFixedSetError("fixed set references node " + std::to_string(v) +
                                              " outside the instance");
        path_of[static_cast<std::size_t>(nodes.front())] = static_cast<int>(p);
        path_of[static_cast<std::size_t>(nodes.back())] = static_cast<int>(p);
        for (std::size_t i = 1; i + 1 < nodes.size(); ++i)
            visited[static_cast<std::size_t>(nodes[i])] = 1;
    }

    std::vector<int> pool;
    pool.reserve(n);
    for (std::size_t v = 0; v < n; ++v)
        if (!visited[v])
            pool.push_back(static_cast<int>(v));

    std::vector<int> order;
    std::vector<int> scratch;
    order.reserve(n);

    // Appends `node` (and its path, if it is an endpoint); returns the new
    // current city.
    auto take = [&](int node) {
        int p = path_of[static_cast<std::size_t>(node)];
        if (p == none) {
            order.push_back(node);
            visited[static_cast<std::size_t>(node)] = 1;
            return node;
        }
        const auto& nodes = paths[static_cast<std::size_t>(p)].nodes;
        auto emit = [&](int v) {
            order.push_back(v);
            visited[static_cast<std::size_t>(v)] = 1;
        };
        if (node == nodes.front()) {
            for (int v : nodes)
                emit(v);
        } else {
            for (auto it = nodes.rbegin(); it != nodes.rend(); ++it)
                emit(*it);
        }
        return order.back();
    };

    int cur = take(pool[rng.index(pool.size())]);
    while (order.size() < n)
        cur = take(detail::select_next(instance, cur, visited, scratch, rng));
    return Tour(instance, std::move(order));
}

/// Validates raw edges into a FixedSet first; throws InfeasibleFixedSetError.
inline Tour greedy_with_fixed(const Instance& instance, std::span<const Edge> fixed_edges,
                              RandomSource& rng) {
    auto fixed = FixedSet::from_edges(instance.size(), {fixed_edges.begin(), fixed_edges.end()});
    return greedy_with_fixed(instance, fixed, rng);
}

} // namespace fss
