#pragma once

/// @file fixed_set.hpp
/// @brief Fixed sets: edges of an elite base tour that occur most often in a
/// random sample of elite tours, decomposed into vertex-disjoint paths.

#include <fss/tour.hpp>

#include <algorithm>
#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fss {

/// The edge set cannot be part of any Hamiltonian cycle (a node of degree
/// above two, or a closed cycle).
class InfeasibleFixedSetError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A maximal run of fixed edges. Interior nodes have both tour edges fixed.
struct FixedPath {
    std::vector<int> nodes;

    int first() const noexcept { return nodes.front(); }
    int last() const noexcept { return nodes.back(); }
    std::size_t edge_count() const noexcept { return nodes.size() - 1; }

    friend bool operator==(const FixedPath&, const FixedPath&) = default;
};

class FixedSet {
  public:
    FixedSet() = default;

    /// Validates `edges` over nodes 0..dimension-1 and splits them into paths.
    /// Paths are listed by their smaller endpoint, each starting there.
    static FixedSet from_edges(std::size_t dimension, std::vector<Edge> edges,
                               CanonicalKey base_key = {}) {
        for (auto& e : edges)
            e = make_edge(e.u, e.v);
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw InfeasibleFixedSetError("fixed set lists an edge twice");

        constexpr int none = -1;
        std::vector<std::array<int, 2>> adj(dimension, {none, none});
        for (const auto& e : edges) {
            if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.v) >= dimension || e.u == e.v)
                throw InfeasibleFixedSetError("fixed edge (" + std::to_string(e.u) + "," +
                                              std::to_string(e.v) + ") is not a valid edge");
            for (int end : {e.u, e.v}) {
                auto& slots = adj[static_cast<std::size_t>(end)];
                int other = end == e.u ? e.v : e.u;
                if (slots[0] == none)
                    slots[0] = other;
                else if (slots[1] == none)
                    slots[1] = other;
                else
                    throw InfeasibleFixedSetError("node " + std::to_string(end) +
                                                  " has degree above 2 in the fixed set");
            }
        }

        FixedSet fixed;
        fixed.edges_ = std::move(edges);
        fixed.base_key_ = std::move(base_key);
        std::size_t covered = 0;
        std::vector<char> visited(dimension, 0);
        for (std::size_t start = 0; start < dimension; ++start) {
            const auto& s = adj[start];
            bool endpoint = (s[0] == none) != (s[1] == none);
            if (!endpoint || visited[start])
                continue;
            FixedPath path;
            int prev = none;
            int cur = static_cast<int>(start);
            while (cur != none) {
                path.nodes.push_back(cur);
                visited[static_cast<std::size_t>(cur)] = 1;
                const auto& slots = adj[static_cast<std::size_t>(cur)];
                int next = slots[0] != prev ? slots[0] : slots[1];
                prev = cur;
                cur = next;
            }
            covered += path.edge_count();
            fixed.paths_.push_back(std::move(path));
        }
        if (covered != fixed.edges_.size())
            throw InfeasibleFixedSetError("fixed set contains a cycle");
        return fixed;
    }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<FixedPath>& paths() const noexcept { return paths_; }
    const CanonicalKey& base_key() const noexcept { return base_key_; }
    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return edges_.empty(); }

  private:
    std::vector<Edge> edges_;
    CanonicalKey base_key_;
    std::vector<FixedPath> paths_;
};

/// Number of tours in `sample` that contain `edge`.
inline int occurrence_count(const Edge& edge, std::span<const Tour> sample) {
    int count = 0;
    for (const auto& tour : sample) {
        const auto& order = tour.order();
        const std::size_t n = order.size();
        auto at = std::find(order.begin(), order.end(), edge.u) - order.begin();
        auto i = static_cast<std::size_t>(at);
        if (order[(i + 1) % n] == edge.v || order[(i + n - 1) % n] == edge.v)
            ++count;
    }
    return count;
}

/// Selects the `size` edges of `base` that occur in the most tours of
/// `sample`; ties go to the lexicographically smaller edge.
inline FixedSet fix(const Tour& base, std::span<const Tour> sample, std::size_t size) {
    const std::size_t n = base.size();
    if (size >= n)
        throw std::invalid_argument("fixed set size " + std::to_string(size) +
                                    " must be below the dimension " + std::to_string(n));
    if (sample.empty())
        throw std::invalid_argument("fixed set sample is empty");
    if (size == 0)
        return FixedSet::from_edges(n, {}, canonical_key(base));

    struct Scored {
        Edge edge;
        int count;
    };
    std::vector<Scored> scored;
    scored.reserve(n);
    for (const auto& e : edges_of(base))
        scored.push_back({e, 0});

    for (const auto& tour : sample) {
        TourAdjacency adjacency(tour.order());
        for (auto& s : scored)
            s.count += adjacency.contains(s.edge) ? 1 : 0;
    }
    auto by_rank = [](const Scored& a, const Scored& b) {
        return a.count != b.count ? a.count > b.count : a.edge < b.edge;
    };
    std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(size), scored.end(),
                      by_rank);

    std::vector<Edge> chosen;
    chosen.reserve(size);
    for (std::size_t i = 0; i < size; ++i)
        chosen.push_back(scored[i].edge);
    return FixedSet::from_edges(n, std::move(chosen), canonical_key(base));
}

} // namespace fss
