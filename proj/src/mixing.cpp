#include <hypmix/mixing.hpp>

#include <hypmix/parallel.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hypmix {

namespace {

void require_permissible(const StepMeasure& mu, const RunOptions& options) {
    if (options.allow_non_permissible) return;
    auto report = validate_permissible(mu);
    if (!report.permissible()) throw std::invalid_argument("measure is not permissible: " + report.describe());
}

void require_infinite_index(const SubgroupAutomaton& s, const char* name) {
    if (s.has_finite_index())
        throw std::invalid_argument(std::string(name) + " has finite index " + to_string(s.index()) +
                                    "; the witness needs infinite-index subgroups");
}

void require_walk_length(int n) {
    if (n < 0) throw std::invalid_argument("walk length must be nonnegative");
}

Word walk_position(const StepMeasure& mu, int n, std::uint64_t seed, std::size_t trial) {
    SplitMix64 rng(substream_seed(seed, trial));
    return sample_endpoint(mu, n, rng);
}

/// Nontrivial element of H as a short random product of its free basis.
Word random_subgroup_element(std::span<const Word> basis, SplitMix64& rng) {
    for (;;) {
        std::size_t factors = 1 + rng.below(2);
        Word out;
        for (std::size_t i = 0; i < factors; ++i) {
            const Word& b = basis[rng.below(basis.size())];
            out = multiply(out, rng.below(2) == 0 ? b : inverse(b));
        }
        if (!out.empty()) return out;
    }
}

} // namespace

bool BasicOpenSet::contains(const SubgroupAutomaton& l) const {
    return trace(l, window).hits == trace(marker, window).hits;
}

SubgroupAutomaton witness_subgroup(const SubgroupAutomaton& h, const SubgroupAutomaton& k, const Word& w) {
    return join(conjugate(h, inverse(w)), k);
}

WitnessOutcome check_witness(const SubgroupAutomaton& l, const SubgroupAutomaton& h, const SubgroupAutomaton& k,
                             std::span<const Word> window, const Word& w) {
    WitnessOutcome out{w, l};
    out.trace_k = trace(l, window).hits == trace(k, window).hits;
    const Word w_inv = inverse(w);
    out.trace_h = std::all_of(window.begin(), window.end(), [&](const Word& f) {
        return l.contains(multiply({w_inv, f, w})) == h.contains(f);
    });
    out.infinite_index = !l.has_finite_index();
    out.free_product_rank = l.rank() == h.rank() + k.rank();
    return out;
}

MixingEstimate make_estimate(int n, std::size_t successes, std::size_t trials, std::uint64_t seed,
                             std::string interpretation) {
    auto p = estimate_proportion(successes, trials);
    return {n, trials, successes, p.p_hat, p.ci_low, p.ci_high, p.sigma(), seed, std::move(interpretation)};
}

MixingEstimate estimate_mixing(const SubgroupAutomaton& h, const SubgroupAutomaton& k, std::span<const Word> window,
                               const StepMeasure& mu, int n, std::size_t trials, std::uint64_t seed,
                               RunOptions options) {
    MixingPair pair{h, k, {window.begin(), window.end()}};
    return joint_mixing(std::span<const MixingPair>(&pair, 1), mu, n, trials, seed, options).joint;
}

bool JointMixingEstimate::union_bound_holds(double sigmas) const {
    double bound = 1.0;
    for (const auto& m : marginals) bound -= 1.0 - m.p_hat;
    return joint.p_hat >= bound - sigmas * joint.sigma;
}

JointMixingEstimate joint_mixing(std::span<const MixingPair> pairs, const StepMeasure& mu, int n, std::size_t trials,
                                 std::uint64_t seed, RunOptions options) {
    if (pairs.empty()) throw std::invalid_argument("joint mixing needs at least one pair");
    if (trials == 0) throw std::invalid_argument("mixing estimate needs at least one trial");
    require_walk_length(n);
    require_permissible(mu, options);
    for (const auto& p : pairs) {
        require_infinite_index(p.h, "H");
        require_infinite_index(p.k, "K");
    }
    const std::size_t np = pairs.size();
    std::vector<unsigned char> ok(trials * np);
    parallel_for(trials, options.threads, [&](std::size_t i) {
        const Word w = walk_position(mu, n, seed, i);
        for (std::size_t j = 0; j < np; ++j) {
            const auto& p = pairs[j];
            ok[i * np + j] = check_witness(witness_subgroup(p.h, p.k, w), p.h, p.k, p.window, w).success();
        }
    });
    std::size_t joint = 0;
    std::vector<std::size_t> marginal(np);
    for (std::size_t i = 0; i < trials; ++i) {
        bool all = true;
        for (std::size_t j = 0; j < np; ++j) {
            marginal[j] += ok[i * np + j];
            all = all && ok[i * np + j];
        }
        joint += all;
    }
    JointMixingEstimate out;
    out.joint = make_estimate(n, joint, trials, seed, mixing_lower_bound_tag);
    for (std::size_t j = 0; j < np; ++j)
        out.marginals.push_back(make_estimate(n, marginal[j], trials, seed, mixing_lower_bound_tag));
    return out;
}

MixingEstimate free_product_experiment(const SubgroupAutomaton& h, const StepMeasure& mu, int n, std::size_t trials,
                                       std::uint64_t seed, RunOptions options) {
    if (trials == 0) throw std::invalid_argument("free product experiment needs at least one trial");
    require_walk_length(n);
    require_permissible(mu, options);
    require_infinite_index(h, "H");
    std::vector<unsigned char> ok(trials);
    parallel_for(trials, options.threads, [&](std::size_t i) {
        const Word w = walk_position(mu, n, seed, i);
        ok[i] = !w.empty() && certify_free_product(h, w);
    });
    std::size_t successes = 0;
    for (auto b : ok) successes += b;
    return make_estimate(n, successes, trials, seed, "fraction with <H, w_n> = H * <w_n>");
}

RandomSubgroup random_subgroup(std::span<const StepMeasure> measures, int n, std::uint64_t seed) {
    if (measures.empty()) throw std::invalid_argument("random subgroup needs at least one measure");
    require_walk_length(n);
    const FreeContext& ctx = measures.front().context();
    RandomSubgroup out{{}, SubgroupAutomaton(ctx), false};
    for (std::size_t j = 0; j < measures.size(); ++j) {
        if (!(measures[j].context() == ctx)) throw std::invalid_argument("measures live in different free groups");
        SplitMix64 rng(substream_seed(seed, j));
        out.generators.push_back(sample_endpoint(measures[j], n, rng));
    }
    out.subgroup = SubgroupAutomaton::from_generators(ctx, out.generators);
    out.full_rank = out.subgroup.rank() == measures.size();
    return out;
}

MixingEstimate random_subgroup_experiment(std::span<const StepMeasure> measures, int n, std::size_t trials,
                                          std::uint64_t seed, RunOptions options) {
    if (trials == 0) throw std::invalid_argument("random subgroup experiment needs at least one trial");
    for (const auto& mu : measures) require_permissible(mu, options);
    std::vector<unsigned char> ok(trials);
    parallel_for(trials, options.threads, [&](std::size_t i) {
        ok[i] = random_subgroup(measures, n, substream_seed(seed, i)).full_rank;
    });
    std::size_t successes = 0;
    for (auto b : ok) successes += b;
    return make_estimate(n, successes, trials, seed, "fraction of free subgroups of full rank");
}

WitnessGeometry witness_geometry(const SubgroupAutomaton& h, const SubgroupAutomaton& k, std::span<const Word> window,
                                 const StepMeasure& mu, int n, std::size_t trials, std::size_t samples_per_trial,
                                 std::uint64_t seed) {
    require_walk_length(n);
    const auto h_basis = h.generators();
    const auto k_basis = k.generators();
    if (h_basis.empty()) throw std::invalid_argument("witness geometry needs a nontrivial H");

    WitnessGeometry out;
    out.n = n;
    double total_shortest = 0.0;
    const Rational lambda = 8;
    for (std::size_t i = 0; i < trials; ++i) {
        const Word w = walk_position(mu, n, seed, i);
        if (w.empty()) continue;
        if (!check_witness(witness_subgroup(h, k, w), h, k, window, w).success()) continue;
        ++out.successful_trials;
        // Geometry samples use a second stream so the walk draws stay shared with estimate_mixing.
        SplitMix64 rng(substream_seed(~seed, i));
        const Word w_inv = inverse(w);
        std::size_t shortest = std::numeric_limits<std::size_t>::max();
        for (std::size_t s = 0; s < samples_per_trial; ++s) {
            Word mixed = multiply({w_inv, random_subgroup_element(h_basis, rng), w});
            if (!k_basis.empty() && rng.below(2) == 0)
                mixed = multiply(mixed, random_subgroup_element(k_basis, rng));
            if (!k_basis.empty() && rng.below(2) == 0)
                mixed = multiply(random_subgroup_element(k_basis, rng), mixed);
            shortest = std::min(shortest, mixed.size());

            const std::size_t syllables = 2 + rng.below(5);
            bool h_turn = rng.below(2) == 0;
            std::vector<Word> labels;
            for (std::size_t t = 0; t < syllables; ++t, h_turn = !h_turn)
                labels.push_back(h_turn ? random_subgroup_element(h_basis, rng) : (rng.below(2) == 0 ? w : w_inv));
            out.max_quasi_geodesic_c = std::max(out.max_quasi_geodesic_c, minimal_c(labeled_path(labels, Word{}), lambda));
        }
        if (samples_per_trial > 0) total_shortest += static_cast<double>(shortest);
    }
    if (out.successful_trials > 0)
        out.mean_shortest_mixed_element = total_shortest / static_cast<double>(out.successful_trials);
    return out;
}

} // namespace hypmix
