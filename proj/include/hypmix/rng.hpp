#ifndef HYPMIX_RNG_HPP
#define HYPMIX_RNG_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace hypmix {

/**
 * SplitMix64 (Steele, Lea, Flood 2014). Counter based: the i-th output is
 * mix64(seed + i * 0x9E3779B97F4A7C15), so a stream is fully determined by its
 * 64-bit seed. All samplers below consume it through integer arithmetic only,
 * which keeps every experiment bit-reproducible across platforms.
 */
class SplitMix64 {
public:
    using result_type = std::uint64_t;
    static constexpr std::uint64_t gamma = 0x9E3779B97F4A7C15ULL;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static constexpr std::uint64_t mix64(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next() { return mix64(state_ += gamma); }
    std::uint64_t operator()() { return next(); }
    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

    /// Uniform integer in [0, bound), bound > 0 (Lemire's multiply-shift with rejection).
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

/// Seed of the substream for trial `index` of an experiment with master seed `master`.
constexpr std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
    return SplitMix64::mix64(SplitMix64::mix64(master) ^ (index * 0xD1B54A32D192ED03ULL + 0x8BB84B93962EACC9ULL));
}

/// Exact sampler over nonnegative integer weights.
class DiscreteSampler {
public:
    explicit DiscreteSampler(std::span<const std::uint64_t> weights);
    std::size_t operator()(SplitMix64& rng) const;
    std::uint64_t total() const { return total_; }

private:
    std::vector<std::uint64_t> cumulative_;
    std::uint64_t total_ = 0;
};

/// Fisher-Yates shuffle driven by SplitMix64::below.
template <typename T>
void shuffle(std::span<T> items, SplitMix64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        auto j = static_cast<std::size_t>(rng.below(i));
        std::swap(items[i - 1], items[j]);
    }
}

} // namespace hypmix

#endif
