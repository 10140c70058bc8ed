#pragma once

/// @file instance.hpp
/// @brief Immutable TSP instance: EUC_2D distance oracle and per-node
/// nearest-neighbour candidate lists.

#include <fss/tsplib.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fss {

/// Thrown when a node sequence is not a permutation of 0..n-1.
class InvalidTourError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// TSPLIB nint(): round half up.
inline int euc_2d_distance(const tsplib::Point& a, const tsplib::Point& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return static_cast<int>(std::floor(std::sqrt(dx * dx + dy * dy) + 0.5));
}

class Instance {
  public:
    static constexpr std::size_t dense_limit = 4096;
    static constexpr std::size_t default_rcl_size = 20;

    Instance(tsplib::RawInstance raw, std::size_t rcl_size = default_rcl_size)
        : raw_(std::move(raw)), n_(raw_.dimension) {
        if (rcl_size == 0)
            throw std::invalid_argument("rcl_size must be at least 1");
        if (raw_.coords.size() != n_)
            throw tsplib::DimensionError("coordinate count does not match dimension");
        if (n_ < 3)
            throw tsplib::DimensionError("an instance needs at least 3 nodes");

        if (n_ <= dense_limit) {
            matrix_.resize(n_ * n_);
            for (std::size_t a = 0; a < n_; ++a) {
                matrix_[a * n_ + a] = 0;
                for (std::size_t b = a + 1; b < n_; ++b) {
                    int d = euc_2d_distance(raw_.coords[a], raw_.coords[b]);
                    matrix_[a * n_ + b] = d;
                    matrix_[b * n_ + a] = d;
                }
            }
        }
        build_neighbor_lists(std::min(rcl_size, n_ - 1));
    }

    std::size_t size() const noexcept { return n_; }
    const std::string& name() const noexcept { return raw_.name; }
    const tsplib::RawInstance& raw() const noexcept { return raw_; }
    std::size_t rcl_size() const noexcept { return width_; }
    bool dense() const noexcept { return !matrix_.empty(); }

    int dist(int a, int b) const noexcept {
        if (!matrix_.empty())
            return matrix_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)];
        return euc_2d_distance(raw_.coords[static_cast<std::size_t>(a)],
                               raw_.coords[static_cast<std::size_t>(b)]);
    }

    /// The rcl_size nearest other nodes, ascending by distance then by id.
    std::span<const int> neighbors(int node) const noexcept {
        return {neighbors_.data() + static_cast<std::size_t>(node) * width_, width_};
    }

  private:
    void build_neighbor_lists(std::size_t width) {
        width_ = width;
        neighbors_.resize(n_ * width_);
        std::vector<int> others(n_ - 1);
        for (std::size_t a = 0; a < n_; ++a) {
            int node = static_cast<int>(a);
            std::size_t k = 0;
            for (std::size_t b = 0; b < n_; ++b)
                if (b != a)
                    others[k++] = static_cast<int>(b);
            auto closer = [&](int x, int y) {
                int dx = dist(node, x), dy = dist(node, y);
                return dx != dy ? dx < dy : x < y;
            };
            std::partial_sort(others.begin(), others.begin() + static_cast<std::ptrdiff_t>(width_),
                              others.end(), closer);
            std::copy_n(others.begin(), width_, neighbors_.begin() + static_cast<std::ptrdiff_t>(a * width_));
        }
    }

    tsplib::RawInstance raw_;
    std::size_t n_ = 0;
    std::size_t width_ = 0;
    std::vector<int> matrix_;
    std::vector<int> neighbors_;
};

inline Instance build_instance(tsplib::RawInstance raw,
                               std::size_t rcl_size = Instance::default_rcl_size) {
    return Instance(std::move(raw), rcl_size);
}

inline bool is_permutation_of_nodes(std::span<const int> order, std::size_t n) {
    if (order.size() != n)
        return false;
    std::vector<char> seen(n, 0);
    for (int v : order) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)])
            return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

/// Closed tour length including the edge back from the last node to the first.
inline std::int64_t tour_length(const Instance& instance, std::span<const int> order) {
    if (!is_permutation_of_nodes(order, instance.size()))
        throw InvalidTourError("node order is not a permutation of 0.." +
                               std::to_string(instance.size() - 1));
    std::int64_t total = 0;
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        total += instance.dist(order[i], order[i + 1]);
    total += instance.dist(order.back(), order.front());
    return total;
}

} // namespace fss
