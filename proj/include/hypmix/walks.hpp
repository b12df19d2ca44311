#ifndef HYPMIX_WALKS_HPP
#define HYPMIX_WALKS_HPP

#include <hypmix/freegroup.hpp>
#include <hypmix/rng.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hypmix {

/// Finitely supported probability measure on F_k with exact rational weights.
class StepMeasure {
public:
    /// Duplicate words are merged; weights must be positive and sum to exactly 1.
    StepMeasure(const FreeContext& ctx, std::vector<std::pair<Word, Rational>> entries);

    const FreeContext& context() const { return ctx_; }
    /// Shortlex-sorted support with weights.
    const std::vector<std::pair<Word, Rational>>& support() const { return support_; }
    Rational mass(const Word& w) const;
    std::size_t max_step_length() const;

    Word sample(SplitMix64& rng) const;
    std::size_t sample_index(SplitMix64& rng) const;

private:
    FreeContext ctx_;
    std::vector<std::pair<Word, Rational>> support_;
    std::vector<std::uint64_t> integer_weights_;
    std::shared_ptr<const DiscreteSampler> sampler_;
};

/// Uniform measure on `set`. With `lazy`, the identity gets mass `lazy` and the
/// rest is split evenly. The identity may not appear in `set` itself.
StepMeasure uniform_on(const FreeContext& ctx, std::span<const Word> set, std::optional<Rational> lazy = std::nullopt);
/// Uniform on the free generators and their inverses.
StepMeasure uniform_generators(const FreeContext& ctx);
StepMeasure point_mass(const FreeContext& ctx, const Word& w);

struct PermissibilityReport {
    bool finite = true;
    bool symmetric = false;
    bool generating = false;     ///< folding of the support has index 1
    bool non_elementary = false; ///< folded support subgroup has rank >= 2
    /// E(mu) = E(G) is automatic in F_k: both are trivial.
    bool elementary_subgroups_agree = true;

    bool permissible() const { return finite && symmetric && generating && non_elementary && elementary_subgroups_agree; }
    std::string describe() const;
};
PermissibilityReport validate_permissible(const StepMeasure& mu);

using Distribution = std::map<Word, Rational>;

struct ConvolutionCap {
    int max_steps = 8;
    std::size_t max_support = 8;
};
/// Exact law of w_n; throws std::length_error above the cap.
Distribution convolve(const StepMeasure& mu, int n, ConvolutionCap cap = {});

struct Trajectory {
    std::vector<Word> increments;
    std::vector<Word> positions; ///< positions[0] = 1, positions[i] = g_1 ... g_i
    std::uint64_t seed = 0;
    const Word& end() const { return positions.back(); }
};
Trajectory sample_walk(const StepMeasure& mu, int n, std::uint64_t seed);
/// w_n only; draws exactly the same increments as sample_walk.
Word sample_endpoint(const StepMeasure& mu, int n, SplitMix64& rng);

struct DriftEstimate {
    double mean = 0.0; ///< mean of d(1, w_n) / n
    double half_width = 0.0;
    std::size_t trials = 0;
    int n = 0;
    std::uint64_t seed = 0;
    double ci_low() const { return mean - half_width; }
    double ci_high() const { return mean + half_width; }
};

struct RunOptions {
    int threads = 1;
    bool allow_non_permissible = false;
};

DriftEstimate drift_estimate(const StepMeasure& mu, int n, std::size_t trials, std::uint64_t seed,
                             RunOptions options = {});

/// Parses a measure description: `uniform = ["a","A",...]` style word lists or
/// `[["a",1,4], ...]` entries. See harness config docs.
StepMeasure parse_measure(const FreeContext& ctx, std::string_view spec);

} // namespace hypmix

#endif
