#include <hypmix/rng.hpp>

#include <algorithm>
#include <stdexcept>

namespace hypmix {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("SplitMix64::below needs a positive bound");
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<unsigned __int128>(next()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

DiscreteSampler::DiscreteSampler(std::span<const std::uint64_t> weights) {
    cumulative_.reserve(weights.size());
    for (auto w : weights) {
        if (total_ + w < total_) throw std::overflow_error("discrete weights overflow 64 bits");
        total_ += w;
        cumulative_.push_back(total_);
    }
    if (total_ == 0) throw std::invalid_argument("discrete sampler needs positive total weight");
}

std::size_t DiscreteSampler::operator()(SplitMix64& rng) const {
    const std::uint64_t u = rng.below(total_);
    return static_cast<std::size_t>(std::upper_bound(cumulative_.begin(), cumulative_.end(), u) - cumulative_.begin());
}

} // namespace hypmix
