#ifndef HYPMIX_TRANSVERSE_HPP
#define HYPMIX_TRANSVERSE_HPP

#include <hypmix/stallings.hpp>

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypmix {

/// Witness that f^exponent lies in conjugator * H * conjugator^-1.
struct PowerConjugacy {
    long long exponent = 1;
    Word conjugator;
    int state = 0; ///< automaton state where the cyclic core closes up
};

/**
 * Decides whether some nontrivial power of f is conjugate into H.
 *
 * Write f = t c t^-1 with c cyclically reduced. A power c^m is conjugate into
 * H iff c^m labels a closed loop at some state q of the core graph, because
 * core graphs contain every cyclically reduced conjugacy representative as a
 * closed loop. Reading c from q is a partial injection of the state set, so if
 * every power can be read the orbit q, q.c, q.c^2, ... repeats within
 * #states steps and must return to q itself. Hence checking m <= #states is
 * complete, and the minimal m over all states is returned.
 */
std::optional<PowerConjugacy> power_conjugate_into(const SubgroupAutomaton& h, const Word& f);

/// No power of f meets any conjugate of H.
bool is_transverse(const SubgroupAutomaton& h, const Word& f);

struct TransversalityCertificate {
    Word element;
    std::size_t subgroup_states = 0;
    std::size_t subgroup_rank = 0;
    bool transverse = false;
    std::optional<PowerConjugacy> witness;
    std::size_t pigeonhole_bound = 0;

    std::string to_text() const;
};
TransversalityCertificate certify_transversality(const SubgroupAutomaton& h, const Word& f);

struct ExponentRange {
    long long low = 0;
    long long high = 0; ///< inclusive
    std::size_t size() const { return high >= low ? static_cast<std::size_t>(high - low + 1) : 0; }
};

/// |{m in range : d(f^m, vH) <= E}|, using d(f^m, vH) = distance_to_orbit(H, v^-1 f^m).
std::size_t overlap_count(const SubgroupAutomaton& h, const Word& f, const Word& v, std::size_t e, ExponentRange range);

struct OverlapReport {
    Word element;
    std::size_t e = 0;
    int radius = 0;
    ExponentRange range;
    std::vector<std::pair<Word, std::size_t>> counts; ///< per conjugator v in the ball, shortlex order
    std::size_t max_count = 0;
    Word argmax;
};
/// Overlap counts for every v in the ball of radius R.
OverlapReport overlap_bound(const SubgroupAutomaton& h, const Word& f, std::size_t e, int radius, ExponentRange range);

/// Right coset representatives u with u^-1 H u meeting <g>, plus E(g).
struct ForbiddenSet {
    std::vector<Word> representatives;
    ElementaryClosure elementary;
    /// u in H * U0.
    bool covers(const SubgroupAutomaton& h, const Word& u) const;
    /// a in U0^-1 H U0.
    bool in_double_coset(const SubgroupAutomaton& h, const Word& a) const;
};
ForbiddenSet compute_U0(const SubgroupAutomaton& h, const Word& g);

struct AptOptions {
    int max_exponent = 32;
    int stable_window = 3;
    int max_radius = 6;
};
struct AptReport {
    int exponent = 0;               ///< N at the start of the stable window
    std::vector<Word> cosets;       ///< shortlex-least right coset representatives at N
    bool verified = false;
    std::vector<std::size_t> coset_counts; ///< per scanned N, starting at N = 1
};
/**
 * Scans N = 1, 2, ... and collects {u : |u| <= C, d(u g^N, H) <= C} grouped
 * into right H-cosets. Verified once the coset count is constant over
 * `stable_window` consecutive exponents and every later filtered set stays
 * inside H * U. Exhausting max_exponent yields verified = false.
 */
AptReport apt_check(const SubgroupAutomaton& h, const Word& g, int c, AptOptions options = {});

class SearchCapExceeded : public std::runtime_error {
public:
    SearchCapExceeded(const std::string& what, long long largest_tried)
        : std::runtime_error(what), largest_tried_(largest_tried) {}
    long long largest_tried() const { return largest_tried_; }

private:
    long long largest_tried_;
};

struct ConstructOptions {
    long long max_exponent = 64;
    int max_shift_length = 8;
};
struct TransverseConstruction {
    Word f;     ///< g^n a
    Word shift; ///< a
    long long exponent = 0;
    std::vector<TransversalityCertificate> certificates;
};
/**
 * f = g^n a with a the shortlex-least word outside E(g) and every
 * U0_i^-1 H_i U0_i, and n the least exponent making f transverse to all
 * targets. Throws std::invalid_argument for a finite-index target and
 * SearchCapExceeded when no n <= max_exponent certifies.
 */
TransverseConstruction construct_transverse(std::span<const SubgroupAutomaton> targets, const Word& g,
                                            ConstructOptions options = {});

} // namespace hypmix

#endif
