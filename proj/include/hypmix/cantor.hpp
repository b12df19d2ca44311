#ifndef HYPMIX_CANTOR_HPP
#define HYPMIX_CANTOR_HPP

#include <hypmix/freegroup.hpp>
#include <hypmix/mixing.hpp>
#include <hypmix/rational.hpp>
#include <hypmix/rng.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

// The group F_2 * S_18 acting on the boundary of the Cayley tree of F_3 = F(x, y, z).
//
// A point of the boundary is an infinite reduced word; a cone is the set of
// points with a given finite prefix. Labels reuse Word with x = 1, y = 2, z = 3,
// so letter_rank gives the order x < X < y < Y < z < Z used throughout.
// F_2 letters act by left multiplication. A permutation of the 18 length-2
// labels containing z or Z permutes those cones, mapping each one onto its
// image by the unique order-preserving bijection, and fixes the other 12.
namespace hypmix::cantor {

inline constexpr Letter x = 1;
inline constexpr Letter y = 2;
inline constexpr Letter z = 3;
inline constexpr std::string_view alphabet = "xyz";

/// Nonempty reduced word over x, y, z and inverses.
using ConeLabel = Word;

ConeLabel parse_label(std::string_view text);
std::string format_label(const ConeLabel& label);
bool in_f2(const Word& w); ///< no z letters

/// The 5 letters that may follow `prev`, in increasing order.
std::array<Letter, 5> successors(Letter prev);

/// All reduced extensions of u by n letters, in lexicographic order.
std::vector<ConeLabel> order_cones(const ConeLabel& u, int n);

/// Order-preserving bijection Cone(u) -> Cone(v) evaluated on a label below u.
ConeLabel xi(const ConeLabel& u, const ConeLabel& v, const ConeLabel& w);

/// The 18 length-2 labels containing z or Z, sorted.
const std::array<Word, 18>& omega();
std::optional<int> omega_index(const Word& w);

/// A permutation of omega(): sigma(omega()[i]) = omega()[image[i]].
class S18Perm {
public:
    S18Perm(); ///< identity
    explicit S18Perm(const std::array<std::uint8_t, 18>& image);

    /// Smallest permutation meeting the constraints: unconstrained labels take
    /// the unused targets in increasing order. Throws on conflicting constraints.
    static S18Perm from_constraints(const std::map<Word, Word>& constraints);
    static S18Perm transposition(const Word& a, const Word& b);
    static S18Perm random(SplitMix64& rng);

    const std::array<std::uint8_t, 18>& image() const { return image_; }
    /// Image of a length-2 label; labels in F_2 are fixed.
    Word operator()(const Word& label) const;
    S18Perm inverse() const;
    /// (*this)(other(.)).
    S18Perm compose(const S18Perm& other) const;
    bool is_identity() const;

    friend bool operator==(const S18Perm&, const S18Perm&) = default;

private:
    std::array<std::uint8_t, 18> image_;
};

std::string to_string(const S18Perm& p);

/// Letter of F_2 * S_18: an F_2 letter (+-1 for x, +-2 for y) or a permutation.
using GLetter = std::variant<Letter, S18Perm>;

/// Word in the generators; acts on the left, so the last letter applies first.
class GElement {
public:
    GElement() = default;
    explicit GElement(std::vector<GLetter> letters);
    static GElement letter(Letter l);
    static GElement perm(const S18Perm& p);

    const std::vector<GLetter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool is_identity_word() const { return letters_.empty(); }

    GElement inverse() const;
    friend GElement operator*(const GElement& a, const GElement& b);

private:
    std::vector<GLetter> letters_;
};

/// Tokens separated by spaces: x X y Y for letters, s[i0,...,i17] for permutations, 1 for the empty word.
std::string to_string(const GElement& g);
GElement parse_gelement(std::string_view text);

/// Image of Cone(label) under one generator; nullopt when the label is too
/// short for the generator's action to be a single cone (refine and retry).
std::optional<ConeLabel> apply(const GLetter& g, const ConeLabel& label);
std::optional<ConeLabel> apply(const GElement& g, const ConeLabel& label);

class DepthCapExceeded : public std::runtime_error {
public:
    DepthCapExceeded(std::size_t depth, std::size_t cap);
    std::size_t depth() const { return depth_; }

private:
    std::size_t depth_;
};

/// Pairwise non-nested labels, denoting the union of their cones.
using ConeAntichain = std::vector<ConeLabel>;

/// Sorted minimal form: groups of 5 siblings are merged into their parent.
ConeAntichain normalize(ConeAntichain a);
/// Exact image of the union of cones; labels longer than depth_cap throw DepthCapExceeded.
ConeAntichain image_antichain(const GElement& g, const ConeAntichain& a, std::size_t depth_cap = 256);
/// The partition of the boundary into all cones at the given depth (>= 1).
ConeAntichain full_partition(int depth);

/// g maps Cone(u) onto Cone(v) order-preservingly: checked on every extension of u by `extra_depth` letters.
bool sends_cone(const GElement& g, const ConeLabel& u, const ConeLabel& v, int extra_depth,
                std::size_t depth_cap = 256);
/// g maps Cone(p) onto itself.
bool fixes_cone(const GElement& g, const ConeLabel& p, std::size_t depth_cap = 256);

/// f with f[Cone(u)] = Cone(zz) and f[Cone(Z^n)] = Cone(ZZ), n = |u|.
GElement claim1_f(const ConeLabel& u);
/// Interchanges Cone(u) and Cone(Z^n) and fixes every other depth-n cone pointwise.
GElement claim2_g(const ConeLabel& u);
/// g with g[Cone(u_i)] = Cone(v_i) for all pairs, via transpositions through the pivot Z^n.
GElement claim3_witness(std::span<const std::pair<ConeLabel, ConeLabel>> pairs, int n);

struct ClaimVerification {
    bool holds = false;
    std::vector<std::string> transcript;
};
ClaimVerification verify_claim1(const ConeLabel& u, const GElement& f);
/// Swap equations plus fixity of `samples` random points at depth n+3 outside the swapped cones.
ClaimVerification verify_claim2(const ConeLabel& u, const GElement& g, std::size_t samples, std::uint64_t seed);
ClaimVerification verify_claim3(std::span<const std::pair<ConeLabel, ConeLabel>> pairs, const GElement& g);

/// Roots of q = 1/4 + (3/4) q^2: the probability that the simple random walk
/// on F_2 ever visits a fixed neighbour of the identity is the smaller one.
/// Laziness does not change it, since a lazy walk still moves almost surely.
struct HittingProbability {
    Rational minimal_root;
    Rational other_root;
};
HittingProbability hit_probability_exact();

/// Monte Carlo frequency with which the simple random walk on F_2 reaches x within `horizon` steps.
ProportionEstimate estimate_hit_probability(std::size_t trials, std::size_t horizon, std::uint64_t seed,
                                            int threads = 1);

/// f(v) = 3^-|v| against nu = (1 - 4/|A|) delta_1 + (1/|A|) on each letter, |A| = 18! + 4.
struct SuperharmonicReport {
    bool equality_off_origin = false;
    bool strict_at_origin = false;
    std::size_t points_checked = 0;
    BigInt support_size;
    bool holds() const { return equality_off_origin && strict_at_origin; }
};
SuperharmonicReport superharmonic_check(int radius);

struct QnOptions {
    Rational p_letter{1, 8};
    std::vector<int> n_list{10, 50, 100};
    std::size_t trials = 10000;
    std::size_t depth_cap = 256;
    std::uint64_t seed = 1;
    int threads = 1;
};
struct QnReport {
    std::vector<MixingEstimate> estimates; ///< one per n, trials exclude depth-cap failures
    std::size_t depth_cap_failures = 0;
};
/// q_n = P(w_n(Cone(z)) meets Cone(xx)) for the walk with mass p_letter on each
/// of x, X, y, Y and the rest on uniform random permutations.
QnReport estimate_qn(const QnOptions& options);

} // namespace hypmix::cantor

#endif
