#pragma once

#include <cstdint>
#include <random>

namespace fss {

/// Seeded generator shared by construction, sampling and the solver loop.
/// Same seed and same call sequence give the same draws. Satisfies
/// UniformRandomBitGenerator so it can feed std:: algorithms directly.
class RandomSource {
  public:
    using result_type = std::mt19937_64::result_type;

    explicit RandomSource(std::uint64_t seed = 1) : engine_(seed) {}

    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }
    result_type operator()() { return engine_(); }

    /// Uniform index in [0, bound). `bound` must be positive.
    std::size_t index(std::size_t bound) {
        return std::uniform_int_distribution<std::size_t>(0, bound - 1)(engine_);
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace fss
