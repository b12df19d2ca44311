#ifndef HYPMIX_MIXING_HPP
#define HYPMIX_MIXING_HPP

#include <hypmix/stallings.hpp>
#include <hypmix/stats.hpp>
#include <hypmix/walks.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hypmix {

/// {L <= G : L meets `window` exactly where `marker` does}: a basic open set of Sub(G).
struct BasicOpenSet {
    SubgroupAutomaton marker;
    std::vector<Word> window;

    bool contains(const SubgroupAutomaton& l) const;
};

/// L = <w^-1 H w, K>.
SubgroupAutomaton witness_subgroup(const SubgroupAutomaton& h, const SubgroupAutomaton& k, const Word& w);

struct WitnessOutcome {
    Word position;
    SubgroupAutomaton witness;
    bool trace_k = false;           ///< L meets the window as K does
    bool trace_h = false;           ///< w L w^-1 meets the window as H does
    bool infinite_index = false;
    bool free_product_rank = false; ///< rank(L) = rank(H) + rank(K)

    bool success() const { return trace_k && trace_h && infinite_index && free_product_rank; }
};
WitnessOutcome check_witness(const SubgroupAutomaton& l, const SubgroupAutomaton& h, const SubgroupAutomaton& k,
                             std::span<const Word> window, const Word& w);

inline constexpr const char* mixing_lower_bound_tag = "lower bound on mu*n(N(U,V))";

struct MixingEstimate {
    int n = 0;
    std::size_t trials = 0;
    std::size_t successes = 0;
    double p_hat = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double sigma = 0.0;
    std::uint64_t seed = 0;
    std::string interpretation;
};
MixingEstimate make_estimate(int n, std::size_t successes, std::size_t trials, std::uint64_t seed,
                             std::string interpretation);

/// Fraction of trials whose walk position carries a successful witness.
MixingEstimate estimate_mixing(const SubgroupAutomaton& h, const SubgroupAutomaton& k, std::span<const Word> window,
                               const StepMeasure& mu, int n, std::size_t trials, std::uint64_t seed,
                               RunOptions options = {});

struct MixingPair {
    SubgroupAutomaton h;
    SubgroupAutomaton k;
    std::vector<Word> window;
};
struct JointMixingEstimate {
    MixingEstimate joint;
    std::vector<MixingEstimate> marginals;
    /// joint >= 1 - sum(1 - marginal) - sigmas * sigma(joint).
    bool union_bound_holds(double sigmas = 3.0) const;
};
/// All pairs must succeed for the same walk position.
JointMixingEstimate joint_mixing(std::span<const MixingPair> pairs, const StepMeasure& mu, int n, std::size_t trials,
                                 std::uint64_t seed, RunOptions options = {});

/// Success: w_n != 1 (loxodromic) and <H, w_n> = H * <w_n> (certified by rank).
MixingEstimate free_product_experiment(const SubgroupAutomaton& h, const StepMeasure& mu, int n, std::size_t trials,
                                       std::uint64_t seed, RunOptions options = {});

struct RandomSubgroup {
    std::vector<Word> generators;
    SubgroupAutomaton subgroup;
    bool full_rank = false; ///< rank equals the number of walks
};
/// Folds the endpoints of k independent walks, walk j driven by substream j of `seed`.
RandomSubgroup random_subgroup(std::span<const StepMeasure> measures, int n, std::uint64_t seed);
MixingEstimate random_subgroup_experiment(std::span<const StepMeasure> measures, int n, std::size_t trials,
                                          std::uint64_t seed, RunOptions options = {});

/// Geometry of witnesses at one walk length.
struct WitnessGeometry {
    int n = 0;
    std::size_t successful_trials = 0;
    /// Mean over successful trials of the shortest sampled element of L_n
    /// that involves a conjugate w^-1 h w.
    double mean_shortest_mixed_element = 0.0;
    /// Largest minimal_c(labeled_path(W, 1), 8) over sampled alternating words
    /// W in (H \ 1) and w^{+-1}.
    Rational max_quasi_geodesic_c = 0;
};
WitnessGeometry witness_geometry(const SubgroupAutomaton& h, const SubgroupAutomaton& k, std::span<const Word> window,
                                 const StepMeasure& mu, int n, std::size_t trials, std::size_t samples_per_trial,
                                 std::uint64_t seed);

} // namespace hypmix

#endif
