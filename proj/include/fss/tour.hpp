#pragma once

/// @file tour.hpp
/// @brief Hamiltonian cycle as a node permutation with cached length, its
/// edge-set view and a rotation/reversal-invariant canonical key.

#include <fss/instance.hpp>

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace fss {

/// Undirected edge, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int a, int b) noexcept { return a < b ? Edge{a, b} : Edge{b, a}; }

class Tour {
  public:
    Tour() = default;

    /// Validates the permutation and computes its length.
    Tour(const Instance& instance, std::vector<int> order)
        : order_(std::move(order)), length_(tour_length(instance, order_)) {}

    /// Adopts an order whose length the caller already knows (local search
    /// keeps it incrementally). Checked in debug builds.
    static Tour with_length(const Instance& instance, std::vector<int> order, std::int64_t length) {
        assert(tour_length(instance, order) == length);
        (void)instance;
        Tour t;
        t.order_ = std::move(order);
        t.length_ = length;
        return t;
    }

    const std::vector<int>& order() const noexcept { return order_; }
    std::int64_t length() const noexcept { return length_; }
    std::size_t size() const noexcept { return order_.size(); }

    friend bool operator==(const Tour&, const Tour&) = default;

  private:
    std::vector<int> order_;
    std::int64_t length_ = 0;
};

/// The tour's n edges, sorted.
inline std::vector<Edge> edges_of(std::span<const int> order) {
    std::vector<Edge> edges;
    edges.reserve(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        edges.push_back(make_edge(order[i], order[(i + 1) % order.size()]));
    std::sort(edges.begin(), edges.end());
    return edges;
}

inline std::vector<Edge> edges_of(const Tour& tour) { return edges_of(tour.order()); }

/// Rotation- and reversal-invariant form of a tour: starts at node 0 and
/// walks towards the smaller of node 0's two tour neighbours.
class CanonicalKey {
  public:
    CanonicalKey() = default;

    explicit CanonicalKey(std::span<const int> order) {
        const std::size_t n = order.size();
        if (n == 0)
            return;
        std::size_t start = static_cast<std::size_t>(
            std::find(order.begin(), order.end(), 0) - order.begin());
        int next = order[(start + 1) % n];
        int prev = order[(start + n - 1) % n];
        nodes_.resize(n);
        if (next <= prev) {
            for (std::size_t i = 0; i < n; ++i)
                nodes_[i] = order[(start + i) % n];
        } else {
            for (std::size_t i = 0; i < n; ++i)
                nodes_[i] = order[(start + n - i) % n];
        }
    }

    const std::vector<int>& nodes() const noexcept { return nodes_; }

    std::size_t hash() const noexcept {
        // FNV-1a over the node ids.
        std::uint64_t h = 1469598103934665603ull;
        for (int v : nodes_) {
            h ^= static_cast<std::uint32_t>(v);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }

    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

  private:
    std::vector<int> nodes_;
};

inline CanonicalKey canonical_key(const Tour& tour) { return CanonicalKey(tour.order()); }

/// Successor/predecessor lookup for a fixed tour, O(1) edge membership.
class TourAdjacency {
  public:
    explicit TourAdjacency(std::span<const int> order) : next_(order.size()), prev_(order.size()) {
        const std::size_t n = order.size();
        for (std::size_t i = 0; i < n; ++i) {
            auto a = static_cast<std::size_t>(order[i]);
            next_[a] = order[(i + 1) % n];
            prev_[a] = order[(i + n - 1) % n];
        }
    }

    bool contains(const Edge& e) const noexcept {
        auto u = static_cast<std::size_t>(e.u);
        return next_[u] == e.v || prev_[u] == e.v;
    }

    int next(int v) const noexcept { return next_[static_cast<std::size_t>(v)]; }
    int prev(int v) const noexcept { return prev_[static_cast<std::size_t>(v)]; }

  private:
    std::vector<int> next_;
    std::vector<int> prev_;
};

} // namespace fss

template <>
struct std::hash<fss::CanonicalKey> {
    std::size_t operator()(const fss::CanonicalKey& key) const noexcept { return key.hash(); }
};
