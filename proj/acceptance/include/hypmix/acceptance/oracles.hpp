#ifndef HYPMIX_ACCEPTANCE_ORACLES_HPP
#define HYPMIX_ACCEPTANCE_ORACLES_HPP

// Reference computations that avoid the library's own algorithms. They are
// slow and narrow on purpose: each one answers a question the library answers,
// by enumeration or by a textbook recurrence.

#include <hypmix/freegroup.hpp>
#include <hypmix/rng.hpp>
#include <hypmix/stallings.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace hypmix::oracle {

/// Plain letter sequences with their own free reduction.
using Letters = std::vector<int>;
Letters reduce(const Letters& raw);
Letters concat(const Letters& u, const Letters& v); ///< reduced u v
Letters invert(const Letters& u);
std::size_t tree_distance(const Letters& x, const Letters& y);
/// d(p, [x, y]) by walking x -> y one letter at a time.
std::size_t distance_to_geodesic(const Letters& p, const Letters& x, const Letters& y);

/// Dense numbering of the reduced words of F_2 with length <= radius, in shortlex order.
class BallIndex {
public:
    explicit BallIndex(int radius);
    int radius() const { return radius_; }
    std::uint64_t size() const { return size_; }
    std::uint64_t encode(const Letters& w) const; ///< requires |w| <= radius
    Letters decode(std::uint64_t index) const;

private:
    int radius_;
    std::uint64_t size_;
    std::vector<std::uint64_t> pow3_;
};

/// Elements of <gens> of length <= query_radius found by breadth-first
/// closure under right multiplication by gens^{+-1}, keeping only
/// intermediate products of length <= bound. Sound; complete once the bound
/// is large enough. Result is indexed by BallIndex(query_radius).
std::vector<bool> closure_members(const std::vector<Letters>& gens, int query_radius, int bound);

/// E|w_n| / n for the simple random walk on F_k, from the exact law of the
/// distance process (a reflected biased walk on the integers).
double drift_oracle(int k, int n);

/// Iterates q <- 1/4 + (3/4) q^2 from q = 0.
double hitting_value_iteration(int iterations);
/// P(simple random walk on F_2 visits the neighbour x within n steps).
double hitting_within(int n);

/// Every folded core graph of F_2 with at most max_states states, up to isomorphism fixing the base.
std::vector<SubgroupAutomaton> enumerate_core_automata(int max_states);

/// Minimal m <= max_m such that v^-1 f^m v lies in H for some |v| <= radius.
std::optional<long long> brute_force_power_conjugacy(const SubgroupAutomaton& h, const Word& f, int max_m, int radius);

/// Finite-index subgroup: a random transitive permutation action of the
/// generators on `states` points, as a list of edges (src, generator, dst).
struct CompleteAutomaton {
    int states = 0;
    std::vector<SubgroupAutomaton::Edge> edges;
};
CompleteAutomaton random_complete_automaton(int rank, int states, SplitMix64& rng);
/// Schreier generators p_s g p_t^-1 for the non-tree edges of a BFS spanning tree.
std::vector<Word> schreier_generators(const CompleteAutomaton& a, int rank);

} // namespace hypmix::oracle

#endif
