#pragma once

/// @file local_search.hpp
/// @brief 2-opt and 3-opt over neighbour-list candidates with don't-look bits.
///
/// Moves are sequential edge exchanges written as t1..t2k: edges
/// (t1,t2), (t3,t4), ... are removed and (t2,t3), (t4,t5), ..., (t2k,t1) are
/// added. The first removed edge is incident to the anchor t1, and each
/// added edge (t2i, t2i+1) takes t2i+1 from the neighbour list of t2i.
/// Acceptance is first-improvement with a strictly positive integer gain.

#include <fss/fixed_set.hpp>
#include <fss/instance.hpp>
#include <fss/tour.hpp>

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace fss {

enum class LocalSearchKind { two_opt, three_opt };

inline std::string_view to_string(LocalSearchKind kind) {
    return kind == LocalSearchKind::two_opt ? "2opt" : "3opt";
}

namespace detail {

/// Array tour with inverse positions.
class ArrayTour {
  public:
    explicit ArrayTour(const std::vector<int>& order)
        : order_(order), pos_(order.size()), n_(static_cast<int>(order.size())) {
        for (int i = 0; i < n_; ++i)
            pos_[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = i;
    }

    int size() const noexcept { return n_; }
    int at(int p) const noexcept { return order_[static_cast<std::size_t>(p)]; }
    int pos(int v) const noexcept { return pos_[static_cast<std::size_t>(v)]; }
    int next(int v) const noexcept {
        int p = pos(v) + 1;
        return at(p == n_ ? 0 : p);
    }
    int prev(int v) const noexcept {
        int p = pos(v);
        return at(p == 0 ? n_ - 1 : p - 1);
    }
    bool adjacent(int a, int b) const noexcept { return next(a) == b || prev(a) == b; }

    void place(int p, int v) noexcept {
        order_[static_cast<std::size_t>(p)] = v;
        pos_[static_cast<std::size_t>(v)] = p;
    }

    const std::vector<int>& order() const noexcept { return order_; }

  private:
    std::vector<int> order_;
    std::vector<int> pos_;
    int n_;
};

/// Applies the sequential K-exchange `t` if it reconnects the tour into a
/// single Hamiltonian cycle; returns false (tour untouched) otherwise.
///
/// The K removed edges cut the tour into K segments. Segment j starts at the
/// head of the j-th removed edge (in tour order) and ends at the tail of the
/// next one. Each added edge joins two segment ends ("slots"); walking the
/// slots from the longest segment gives the new segment order and
/// orientation. Only segments other than the longest are rewritten.
template <std::size_t K>
bool apply_exchange(ArrayTour& tour, const std::array<int, 2 * K>& t, std::vector<int>& buffer) {
    const int n = tour.size();
    std::array<int, K> tail{}, head{};
    std::array<bool, K> first_is_tail{};
    for (std::size_t i = 0; i < K; ++i) {
        int a = t[2 * i], b = t[2 * i + 1];
        if (tour.next(a) == b) {
            tail[i] = a, head[i] = b, first_is_tail[i] = true;
        } else if (tour.prev(a) == b) {
            tail[i] = b, head[i] = a, first_is_tail[i] = false;
        } else {
            return false;
        }
    }
    std::array<std::size_t, K> sorted{};
    for (std::size_t i = 0; i < K; ++i)
        sorted[i] = i;
    std::sort(sorted.begin(), sorted.end(),
              [&](std::size_t a, std::size_t b) { return tour.pos(tail[a]) < tour.pos(tail[b]); });
    std::array<std::size_t, K> rank{};
    for (std::size_t r = 0; r < K; ++r) {
        if (r > 0 && tail[sorted[r]] == tail[sorted[r - 1]])
            return false; // same edge removed twice
        rank[sorted[r]] = r;
    }

    // Slot 2j is the start of segment j, slot 2j+1 its end.
    auto slot = [&](std::size_t edge, bool first_endpoint) {
        bool is_tail = first_endpoint == first_is_tail[edge];
        std::size_t r = rank[edge];
        return is_tail ? 2 * ((r + K - 1) % K) + 1 : 2 * r;
    };
    std::array<std::size_t, 2 * K> partner{};
    for (std::size_t i = 0; i < K; ++i) {
        std::size_t a = slot(i, false);
        std::size_t b = slot((i + 1) % K, true);
        partner[a] = b;
        partner[b] = a;
    }

    std::array<int, K> seg_start{}, seg_end{}, seg_len{};
    std::size_t longest = 0;
    for (std::size_t j = 0; j < K; ++j) {
        seg_start[j] = head[sorted[j]];
        seg_end[j] = tail[sorted[(j + 1) % K]];
        seg_len[j] = (tour.pos(seg_end[j]) - tour.pos(seg_start[j]) + n) % n + 1;
        if (seg_len[j] > seg_len[longest])
            longest = j;
    }

    struct Placed {
        std::size_t seg;
        bool reversed;
    };
    std::array<Placed, K> arrangement{};
    std::array<bool, K> seen{};
    seen[longest] = true;
    std::size_t at = 2 * longest + 1;
    for (std::size_t step = 0; step + 1 < K; ++step) {
        std::size_t s = partner[at];
        std::size_t seg = s / 2;
        if (seen[seg])
            return false;
        seen[seg] = true;
        arrangement[step] = {seg, (s & 1u) != 0};
        at = s ^ 1u;
    }
    if (partner[at] != 2 * longest)
        return false;

    buffer.clear();
    for (std::size_t step = 0; step + 1 < K; ++step) {
        auto [seg, reversed] = arrangement[step];
        int p = tour.pos(reversed ? seg_end[seg] : seg_start[seg]);
        for (int c = 0; c < seg_len[seg]; ++c) {
            buffer.push_back(tour.at(p));
            p = reversed ? (p == 0 ? n - 1 : p - 1) : (p + 1 == n ? 0 : p + 1);
        }
    }
    int p = tour.pos(seg_end[longest]);
    for (int v : buffer) {
        p = p + 1 == n ? 0 : p + 1;
        tour.place(p, v);
    }
    return true;
}

class Optimizer {
  public:
    Optimizer(const Instance& instance, const Tour& tour, std::span<const int> preset)
        : inst_(instance), tour_(tour.order()), length_(tour.length()),
          dont_look_(instance.size(), 0), confirm_(preset.empty()) {
        for (int v : preset)
            dont_look_[static_cast<std::size_t>(v)] = 1;
    }

    Tour run(LocalSearchKind kind) {
        const int n = tour_.size();
        if (n < 4)
            return finish();
        for (;;) {
            bool all_clear = std::none_of(dont_look_.begin(), dont_look_.end(),
                                          [](char f) { return f != 0; });
            bool improved = false;
            for (int p = 0; p < n; ++p) {
                int anchor = tour_.at(p);
                if (dont_look_[static_cast<std::size_t>(anchor)])
                    continue;
                while (kind == LocalSearchKind::two_opt ? improve_2opt(anchor) : improve_3opt(anchor))
                    improved = true;
                dont_look_[static_cast<std::size_t>(anchor)] = 1;
            }
            if (improved)
                continue;
            // With an empty preset the result must be a true fixpoint: one
            // more sweep with every anchor active.
            if (!confirm_ || all_clear)
                break;
            std::fill(dont_look_.begin(), dont_look_.end(), 0);
        }
        return finish();
    }

  private:
    int d(int a, int b) const noexcept { return inst_.dist(a, b); }

    template <std::size_t K>
    bool try_move(const std::array<int, 2 * K>& t, int gain) {
        if (!apply_exchange<K>(tour_, t, buffer_))
            return false;
        length_ -= gain;
        for (int v : t)
            dont_look_[static_cast<std::size_t>(v)] = 0;
        return true;
    }

    bool improve_2opt(int t1) {
        for (int dir = 0; dir < 2; ++dir) {
            const int t2 = dir == 0 ? tour_.next(t1) : tour_.prev(t1);
            const int d12 = d(t1, t2);
            for (int t3 : inst_.neighbors(t2)) {
                const int g1 = d12 - d(t2, t3);
                if (g1 <= 0)
                    break;
                if (tour_.adjacent(t2, t3))
                    continue;
                // The only t4 that closes into a tour.
                const int t4 = dir == 0 ? tour_.prev(t3) : tour_.next(t3);
                const int gain = g1 + d(t3, t4) - d(t4, t1);
                if (gain > 0 && try_move<2>({t1, t2, t3, t4}, gain))
                    return true;
            }
        }
        return false;
    }

    bool improve_3opt(int t1) {
        for (int dir = 0; dir < 2; ++dir) {
            const int t2 = dir == 0 ? tour_.next(t1) : tour_.prev(t1);
            const int d12 = d(t1, t2);
            for (int t3 : inst_.neighbors(t2)) {
                const int g1 = d12 - d(t2, t3);
                if (g1 <= 0)
                    break;
                if (tour_.adjacent(t2, t3))
                    continue;
                for (int t4 : {tour_.next(t3), tour_.prev(t3)}) {
                    const int g1_open = g1 + d(t3, t4);
                    if (t4 != t1) {
                        const int gain = g1_open - d(t4, t1);
                        if (gain > 0 && try_move<2>({t1, t2, t3, t4}, gain))
                            return true;
                    }
                    for (int t5 : inst_.neighbors(t4)) {
                        const int g2 = g1_open - d(t4, t5);
                        if (g2 <= 0)
                            break;
                        if (tour_.adjacent(t4, t5))
                            continue;
                        for (int t6 : {tour_.next(t5), tour_.prev(t5)}) {
                            if (t6 == t1 || same_edge(t5, t6, t1, t2) || same_edge(t5, t6, t3, t4))
                                continue;
                            const int gain = g2 + d(t5, t6) - d(t6, t1);
                            if (gain > 0 && try_move<3>({t1, t2, t3, t4, t5, t6}, gain))
                                return true;
                        }
                    }
                }
            }
        }
        return false;
    }

    static bool same_edge(int a, int b, int c, int e) noexcept {
        return (a == c && b == e) || (a == e && b == c);
    }

    Tour finish() { return Tour::with_length(inst_, tour_.order(), length_); }

    const Instance& inst_;
    ArrayTour tour_;
    std::int64_t length_;
    std::vector<char> dont_look_;
    bool confirm_;
    std::vector<int> buffer_;
};

} // namespace detail

/// 2-opt local search. Nodes in `preset` start with their don't-look bit set.
inline Tour two_opt(const Instance& instance, const Tour& tour, std::span<const int> preset = {}) {
    Tour out = detail::Optimizer(instance, tour, preset).run(LocalSearchKind::two_opt);
    assert(out.length() <= tour.length());
    return out;
}

/// 3-opt local search over all sequential 3-exchanges (2-opt moves included).
inline Tour three_opt(const Instance& instance, const Tour& tour, std::span<const int> preset = {}) {
    Tour out = detail::Optimizer(instance, tour, preset).run(LocalSearchKind::three_opt);
    assert(out.length() <= tour.length());
    return out;
}

inline Tour local_search(const Instance& instance, const Tour& tour, LocalSearchKind kind,
                         std::span<const int> preset = {}) {
    return kind == LocalSearchKind::two_opt ? two_opt(instance, tour, preset)
                                            : three_opt(instance, tour, preset);
}

/// Interior nodes of every fixed path: both of their tour edges are fixed, so
/// no move anchored there needs to be tried first.
inline std::vector<int> preset_from_fixed(const FixedSet& fixed) {
    std::vector<int> nodes;
    for (const auto& path : fixed.paths())
        for (std::size_t i = 1; i + 1 < path.nodes.size(); ++i)
            nodes.push_back(path.nodes[i]);
    std::sort(nodes.begin(), nodes.end());
    return nodes;
}

} // namespace fss
