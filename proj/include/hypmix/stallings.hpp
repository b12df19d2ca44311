#ifndef HYPMIX_STALLINGS_HPP
#define HYPMIX_STALLINGS_HPP

#include <hypmix/freegroup.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hypmix {

/**
 * Folded Stallings core graph of a finitely generated subgroup H <= F_k.
 *
 * States are numbered canonically: breadth-first from the base state 0,
 * exploring letters in the order a < A < b < B < ... . Two automata are
 * equal iff they describe the same subgroup.
 */
class SubgroupAutomaton {
public:
    /// Edge with a positive label; the reverse direction reads the inverse letter.
    struct Edge {
        int src = 0;
        Letter label = 1;
        int dst = 0;
        friend bool operator==(const Edge&, const Edge&) = default;
    };

    /// The trivial subgroup: one state, no edges.
    explicit SubgroupAutomaton(const FreeContext& ctx);

    static SubgroupAutomaton from_generators(const FreeContext& ctx, std::span<const Word> gens);
    /// Folds an arbitrary labelled graph, prunes it to the core at `base` and canonicalises it.
    static SubgroupAutomaton from_graph(const FreeContext& ctx, int vertex_count, std::span<const Edge> edges,
                                        int base);
    static SubgroupAutomaton parse(const FreeContext& ctx, std::string_view text);

    const FreeContext& context() const { return ctx_; }
    int state_count() const { return states_; }
    static constexpr int base() { return 0; }

    std::optional<int> target(int state, Letter l) const {
        int t = trans_[index_of(state, l)];
        if (t < 0) return std::nullopt;
        return t;
    }
    /// Follows `w` from `from`; nullopt as soon as a letter is missing.
    std::optional<int> read(int from, const Word& w) const;
    bool contains(const Word& w) const;

    std::vector<Edge> edges() const;
    std::size_t edge_count() const;
    /// Number of defined directions at a state (loops count twice).
    int degree(int state) const;

    /// Free rank, #edges - #states + 1.
    std::size_t rank() const;
    /// Number of states when the automaton is a full covering, nullopt for infinite index.
    std::optional<std::size_t> index() const;
    bool has_finite_index() const { return index().has_value(); }

    /// Shortlex-least label of a path from the base to each state.
    std::vector<Word> state_paths() const;
    /// Graph distance from every state to the base.
    std::vector<int> distances_to_base() const;
    /// Free basis read off a spanning tree.
    std::vector<Word> generators() const;

    /// Line format: state count, "base=0", then "src label dst" triples.
    std::string serialize() const;

    friend bool operator==(const SubgroupAutomaton& a, const SubgroupAutomaton& b) {
        return a.ctx_ == b.ctx_ && a.states_ == b.states_ && a.trans_ == b.trans_;
    }

private:
    std::size_t index_of(int state, Letter l) const {
        return static_cast<std::size_t>(state) * static_cast<std::size_t>(ctx_.alphabet_size()) +
               static_cast<std::size_t>(letter_rank(l));
    }

    FreeContext ctx_;
    int states_ = 1;
    std::vector<int> trans_;
};

SubgroupAutomaton conjugate(const SubgroupAutomaton& a, const Word& g); // g H g^-1
SubgroupAutomaton intersect(const SubgroupAutomaton& a, const SubgroupAutomaton& b);
SubgroupAutomaton join(const SubgroupAutomaton& a, const SubgroupAutomaton& b);
SubgroupAutomaton join(const SubgroupAutomaton& a, std::span<const Word> extra);

/// min over h in H of d(w, h).
std::size_t distance_to_orbit(const SubgroupAutomaton& a, const Word& w);

/// H intersected with a finite window of group elements.
struct Trace {
    std::vector<Word> window;
    std::vector<Word> hits;
    friend bool operator==(const Trace&, const Trace&) = default;
};
Trace trace(const SubgroupAutomaton& a, std::span<const Word> window);

/// <H, g> = H * <g>, certified by rank(<H, g>) = rank(H) + 1 (free groups are Hopfian).
bool certify_free_product(const SubgroupAutomaton& a, const Word& g);

std::string to_string(std::optional<std::size_t> index);

} // namespace hypmix

#endif
