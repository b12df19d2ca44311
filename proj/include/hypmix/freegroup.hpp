#ifndef HYPMIX_FREEGROUP_HPP
#define HYPMIX_FREEGROUP_HPP

#include <hypmix/rational.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypmix {

/// Signed generator code: +i is the i-th free generator (1-based), -i its inverse.
using Letter = int;

/// Position of a letter in the order a < A < b < B < ...
inline int letter_rank(Letter l) { return 2 * ((l < 0 ? -l : l) - 1) + (l < 0 ? 1 : 0); }
inline Letter letter_from_rank(int r) { return (r % 2 == 0) ? (r / 2 + 1) : -(r / 2 + 1); }

/**
 * A freely reduced word in F_k. Words double as vertices of the Cayley tree,
 * so size() is the distance to the identity.
 */
class Word {
public:
    Word() = default;

    /// Freely reduces an arbitrary letter sequence (stack based, O(n)).
    static Word reduce(std::span<const Letter> raw);
    static Word letter(Letter l) { return Word(std::vector<Letter>{l}); }

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    bool is_identity() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    Letter front() const { return letters_.front(); }
    Letter back() const { return letters_.back(); }

    /// Prefix / suffix / infix as words; a subword of a reduced word is reduced.
    Word prefix(std::size_t n) const;
    Word suffix_from(std::size_t i) const;
    Word subword(std::size_t begin, std::size_t end) const;

    friend bool operator==(const Word&, const Word&) = default;
    /// Shortlex order, letters ordered a < A < b < B < ...
    friend std::strong_ordering operator<=>(const Word& u, const Word& v);

private:
    explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}
    std::vector<Letter> letters_;
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

/// Ambient free group F_k; the basepoint of every orbit computation is the identity.
class FreeContext {
public:
    explicit FreeContext(int rank);
    int rank() const { return rank_; }
    int alphabet_size() const { return 2 * rank_; }
    bool valid(Letter l) const { return l != 0 && l >= -rank_ && l <= rank_; }
    Word basepoint() const { return Word{}; }

    /// Reduces `raw`, rejecting generator indices outside 1..k.
    Word reduce(std::span<const Letter> raw) const;
    /// Parses `a b A ...`; uppercase letters are inverses, "1" is the identity.
    Word parse(std::string_view text) const;
    std::vector<Word> parse_list(std::string_view comma_separated) const;

    /// All reduced words of length <= radius, in shortlex order.
    std::vector<Word> ball(int radius) const;
    std::vector<Word> sphere(int radius) const;

    friend bool operator==(const FreeContext&, const FreeContext&) = default;

private:
    int rank_;
};

std::string to_string(const Word& w);
/// Renders with a custom lowercase alphabet; the inverse of alphabet[i] is its uppercase.
std::string to_string(const Word& w, std::string_view alphabet);
/// Parses with a custom alphabet; throws std::invalid_argument on unknown letters.
Word parse_word(std::string_view text, std::string_view alphabet);

Word multiply(const Word& u, const Word& v);
Word multiply(std::initializer_list<Word> factors);
Word inverse(const Word& u);
/// u^m for any integer m.
Word power(const Word& u, long long m);
Word conjugate_by(const Word& w, const Word& g); // g w g^-1
std::size_t distance(const Word& u, const Word& v);
/// Length of the longest common prefix.
std::size_t common_prefix(const Word& u, const Word& v);

struct CyclicDecomposition {
    Word core;       ///< cyclically reduced
    Word conjugator; ///< w = conjugator * core * conjugator^-1
};
CyclicDecomposition cyclic_reduce(const Word& w);
bool is_cyclically_reduced(const Word& w);

struct WordRoot {
    Word root;
    long long exponent = 1;
};
/// w = root^exponent with exponent maximal. Throws on the identity.
WordRoot root(const Word& w);

/// E(g): the maximal cyclic subgroup containing g, conjugator * <primitive> * conjugator^-1.
struct ElementaryClosure {
    Word primitive;  ///< cyclically reduced, not a proper power
    Word conjugator;
    bool contains(const Word& x) const;
};
ElementaryClosure elementary_closure(const Word& g);

/// Exact half-integer, stored as twice its value.
class HalfInteger {
public:
    constexpr HalfInteger() = default;
    static constexpr HalfInteger from_twice(long long twice) { HalfInteger h; h.twice_ = twice; return h; }
    static constexpr HalfInteger from_integer(long long v) { return from_twice(2 * v); }
    constexpr long long twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    Rational to_rational() const { return Rational(twice_, 2); }
    friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

private:
    long long twice_ = 0;
};
std::string to_string(HalfInteger h);

/// (x|y)_s = 1/2 (d(x,s) + d(y,s) - d(x,y)).
HalfInteger gromov_product(const Word& x, const Word& y, const Word& s);

/// Vertices of the tree geodesic [x, y], from x to y.
std::vector<Word> geodesic(const Word& x, const Word& y);
/// d(p, [x, y]) by scanning the geodesic's vertices.
std::size_t distance_to_geodesic(const Word& p, const Word& x, const Word& y);

/// Concatenation of geodesic segments; vertices[i+1] = vertices[i] * labels[i].
struct TreePath {
    std::vector<Word> vertices;
    std::vector<Word> labels;

    const Word& start() const { return vertices.front(); }
    const Word& end() const { return vertices.back(); }
    /// Sum of the label lengths.
    std::size_t length() const;
    std::size_t segments() const { return labels.size(); }
};

TreePath labeled_path(std::span<const Word> labels, const Word& base);

/// Every vertex-to-vertex subpath q satisfies |q| <= lambda d(q-, q+) + c.
bool is_quasi_geodesic(const TreePath& p, const Rational& lambda, const Rational& c);
/// Least c >= 0 for which `p` is a (lambda, c)-quasi-geodesic.
Rational minimal_c(const TreePath& p, const Rational& lambda);

struct BrokenGeodesicVerdict {
    bool hypothesis_holds = false;
    bool conclusion_holds = false;
};
/// Broken-geodesic criterion on a tree (delta = 0). Throws when C1 <= 12*C0 or C0 < 0.
BrokenGeodesicVerdict broken_geodesic_check(std::span<const Word> points, const Rational& c0,
                                            const Rational& c1);

} // namespace hypmix

#endif
