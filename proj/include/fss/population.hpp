#pragma once

/// @file population.hpp
/// @brief Elite archive of distinct tours with "best n" views, plus the two
/// random draws the solver makes from it (sample set and base tour).

#include <fss/random.hpp>
#include <fss/tour.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace fss {

/// Keeps the `capacity` best distinct tours ordered by length, ties by
/// insertion order. Duplicates (same canonical key) are ignored.
class Population {
  public:
    explicit Population(std::size_t capacity) : capacity_(capacity) {
        if (capacity_ == 0)
            throw std::invalid_argument("population capacity must be positive");
    }

    struct Insertion {
        /// Rank the tour took in the archive, or empty when it was a duplicate
        /// or ranked below capacity.
        std::optional<std::size_t> rank;
        bool duplicate = false;
        bool new_best = false;
    };

    Insertion insert(Tour tour) {
        ++offered_;
        Insertion result;
        CanonicalKey key = canonical_key(tour);
        if (keys_.contains(key)) {
            result.duplicate = true;
            return result;
        }
        auto at = std::upper_bound(entries_.begin(), entries_.end(), tour.length(),
                                   [](std::int64_t len, const Tour& t) { return len < t.length(); });
        auto rank = static_cast<std::size_t>(at - entries_.begin());
        if (rank >= capacity_)
            return result;

        result.new_best = entries_.empty() || tour.length() < entries_.front().length();
        entries_.insert(at, std::move(tour));
        keys_.insert(std::move(key));
        if (entries_.size() > capacity_) {
            keys_.erase(canonical_key(entries_.back()));
            entries_.pop_back();
        }
        result.rank = rank;
        return result;
    }

    /// The `count` best distinct tours (fewer if the archive is smaller).
    std::span<const Tour> best(std::size_t count) const noexcept {
        return {entries_.data(), std::min(count, entries_.size())};
    }

    const Tour& global_best() const {
        if (entries_.empty())
            throw std::logic_error("population is empty");
        return entries_.front();
    }

    std::size_t distinct_size() const noexcept { return entries_.size(); }
    std::size_t capacity() const noexcept { return capacity_; }
    /// Tours offered to insert(), duplicates included.
    std::size_t offered() const noexcept { return offered_; }
    bool empty() const noexcept { return entries_.empty(); }

  private:
    std::size_t capacity_;
    std::size_t offered_ = 0;
    std::vector<Tour> entries_;
    std::unordered_set<CanonicalKey> keys_;
};

/// Draws k tours uniformly without replacement from the n best; returns all
/// of them when fewer than k are available.
inline std::vector<Tour> sample_solutions(const Population& pop, std::size_t k, std::size_t n,
                                          RandomSource& rng) {
    if (pop.empty())
        throw std::invalid_argument("cannot sample from an empty population");
    auto pool = pop.best(n);
    std::vector<Tour> out;
    out.reserve(std::min(k, pool.size()));
    std::sample(pool.begin(), pool.end(), std::back_inserter(out), k, rng);
    return out;
}

/// Uniform draw of one tour among the m best.
inline Tour pick_base(const Population& pop, std::size_t m, RandomSource& rng) {
    if (pop.empty())
        throw std::invalid_argument("cannot pick a base tour from an empty population");
    auto pool = pop.best(m);
    return pool[rng.index(pool.size())];
}

} // namespace fss
