#pragma once

// Shared fixtures and independent oracles for the test suites.

#include <fss/fss.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace test {

inline std::filesystem::path data_dir() { return FSS_DATA_DIR; }

inline fss::tsplib::RawInstance load_raw(const std::string& name) {
    return fss::tsplib::load_instance(data_dir() / (name + ".tsp"));
}

inline fss::Instance load(const std::string& name, std::size_t rcl = 20) { return {load_raw(name), rcl}; }

/// Random integer coordinates in [0, span).
inline fss::tsplib::RawInstance random_raw(std::size_t n, std::mt19937_64& gen, int span = 1000) {
    std::uniform_int_distribution<int> coord(0, span - 1);
    fss::tsplib::RawInstance raw;
    raw.name = "rand" + std::to_string(n);
    raw.dimension = n;
    for (std::size_t i = 0; i < n; ++i)
        raw.coords.push_back({static_cast<double>(coord(gen)), static_cast<double>(coord(gen))});
    return raw;
}

inline fss::Instance random_instance(std::size_t n, std::mt19937_64& gen, std::size_t rcl = 20, int span = 1000) {
    return {random_raw(n, gen, span), rcl};
}

inline std::vector<int> random_order(std::size_t n, std::mt19937_64& gen) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), gen);
    return order;
}

/// Nearest-integer Euclidean distance straight from the coordinates.
inline std::int64_t oracle_dist(const fss::tsplib::RawInstance& raw, int a, int b) {
    const auto& p = raw.coords[static_cast<std::size_t>(a)];
    const auto& q = raw.coords[static_cast<std::size_t>(b)];
    return static_cast<std::int64_t>(std::floor(std::hypot(p.x - q.x, p.y - q.y) + 0.5));
}

inline std::int64_t oracle_length(const fss::tsplib::RawInstance& raw, const std::vector<int>& order) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        sum += oracle_dist(raw, order[i], order[(i + 1) % order.size()]);
    return sum;
}

/// Optimal tour length by enumerating (n-1)!/2 tours: node 0 fixed first,
/// second node below the last one.
inline std::int64_t brute_force_optimum(const fss::tsplib::RawInstance& raw) {
    const int n = static_cast<int>(raw.dimension);
    std::vector<int> rest(static_cast<std::size_t>(n - 1));
    std::iota(rest.begin(), rest.end(), 1);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    do {
        if (n > 3 && rest.front() > rest.back())
            continue;
        std::int64_t len = oracle_dist(raw, 0, rest.front()) + oracle_dist(raw, rest.back(), 0);
        for (std::size_t i = 0; i + 1 < rest.size(); ++i)
            len += oracle_dist(raw, rest[i], rest[i + 1]);
        best = std::min(best, len);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return best;
}

inline std::set<fss::Edge> edge_set(const std::vector<int>& order) {
    std::set<fss::Edge> edges;
    for (std::size_t i = 0; i < order.size(); ++i)
        edges.insert(fss::make_edge(order[i], order[(i + 1) % order.size()]));
    return edges;
}

/// Every tour obtained by cutting `order` at `cuts` (edge (order[c], order[c+1])
/// for each c) and reassembling the pieces in any order and orientation.
inline std::vector<std::vector<int>> reconnections(const std::vector<int>& order, std::vector<std::size_t> cuts) {
    std::sort(cuts.begin(), cuts.end());
    const std::size_t n = order.size();
    std::vector<std::vector<int>> segs;
    for (std::size_t j = 0; j < cuts.size(); ++j) {
        std::vector<int> seg;
        std::size_t from = (cuts[j] + 1) % n;
        std::size_t to = cuts[(j + 1) % cuts.size()];
        for (std::size_t p = from;; p = (p + 1) % n) {
            seg.push_back(order[p]);
            if (p == to)
                break;
        }
        segs.push_back(seg);
    }
    std::vector<std::vector<int>> out;
    std::vector<std::size_t> perm(segs.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (perm.front() != 0)
            continue;
        for (unsigned flips = 0; flips < (1u << segs.size()); flips += 2) {
            std::vector<int> tour;
            for (std::size_t i = 0; i < perm.size(); ++i) {
                auto seg = segs[perm[i]];
                if (flips >> i & 1u)
                    std::reverse(seg.begin(), seg.end());
                tour.insert(tour.end(), seg.begin(), seg.end());
            }
            out.push_back(std::move(tour));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Shortest tour reachable from `order` by exchanging at most `k` edges
/// (k = 2 or 3), with no candidate restriction.
inline std::int64_t best_exchange(const fss::tsplib::RawInstance& raw, const std::vector<int>& order, int k) {
    const std::size_t n = order.size();
    std::int64_t best = oracle_length(raw, order);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            for (const auto& t : reconnections(order, {a, b}))
                best = std::min(best, oracle_length(raw, t));
            if (k < 3)
                continue;
            for (std::size_t c = b + 1; c < n; ++c)
                for (const auto& t : reconnections(order, {a, b, c}))
                    best = std::min(best, oracle_length(raw, t));
        }
    return best;
}

} // namespace test
