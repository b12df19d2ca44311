#include <hypmix/acceptance/oracles.hpp>
#include <hypmix/constants.hpp>
#include <hypmix/freegroup.hpp>

#include <doctest.h>

namespace {

using namespace hypmix;

const FreeContext f2(2);
const FreeContext f3(3);

Word w2(std::string_view s) { return f2.parse(s); }

Word random_word(const FreeContext& ctx, std::size_t len, SplitMix64& rng) {
    std::vector<Letter> raw;
    for (std::size_t i = 0; i < len; ++i)
        raw.push_back(letter_from_rank(static_cast<int>(rng.below(static_cast<std::uint64_t>(ctx.alphabet_size())))));
    return ctx.reduce(raw);
}

oracle::Letters letters(const Word& w) { return {w.letters().begin(), w.letters().end()}; }

} // namespace

TEST_CASE("reduce cancels adjacent inverse pairs") {
    CHECK(f2.reduce(std::vector<Letter>{1, -1}).empty());
    CHECK(to_string(f2.reduce(std::vector<Letter>{1, 2, -2, 1})) == "aa");
    CHECK(to_string(f2.reduce(std::vector<Letter>{-2, 1, 2})) == "Bab");
    CHECK_THROWS_AS(f2.reduce(std::vector<Letter>{3}), std::invalid_argument);
    CHECK_THROWS_AS(f2.parse("abc"), std::invalid_argument);
}

TEST_CASE("word syntax round-trips and prints the identity as 1") {
    CHECK(to_string(Word{}) == "1");
    CHECK(f2.parse("1").empty());
    CHECK(to_string(w2("aBAb")) == "aBAb");
    CHECK(f2.parse_list("a, bA").size() == 2);
}

TEST_CASE("group operations") {
    CHECK(to_string(multiply(w2("ab"), w2("Ba"))) == "aa");
    CHECK(to_string(inverse(w2("ab"))) == "BA");
    CHECK(distance(w2("a"), w2("b")) == 2);
    CHECK(to_string(power(w2("ab"), -2)) == "BABA");
    CHECK(to_string(conjugate_by(w2("a"), w2("b"))) == "baB");
}

TEST_CASE("reduction is idempotent and multiplication associative") {
    SplitMix64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const Word u = random_word(f2, rng.below(12), rng);
        const Word v = random_word(f2, rng.below(12), rng);
        const Word w = random_word(f2, rng.below(12), rng);
        CHECK(f2.reduce(u.letters()) == u);
        CHECK(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)));
        const auto expected = oracle::concat(oracle::concat(letters(u), letters(v)), letters(w));
        CHECK(letters(multiply({u, v, w})) == expected);
    }
}

TEST_CASE("distance is an invariant metric") {
    SplitMix64 rng(12);
    for (int i = 0; i < 500; ++i) {
        const Word u = random_word(f3, rng.below(10), rng);
        const Word v = random_word(f3, rng.below(10), rng);
        const Word x = random_word(f3, rng.below(10), rng);
        const Word g = random_word(f3, rng.below(10), rng);
        CHECK(distance(u, v) == distance(v, u));
        CHECK(distance(u, x) <= distance(u, v) + distance(v, x));
        CHECK(distance(multiply(g, u), multiply(g, v)) == distance(u, v));
        CHECK(distance(u, v) == oracle::tree_distance(letters(u), letters(v)));
    }
}

TEST_CASE("cyclic reduction") {
    auto d = cyclic_reduce(w2("Bab"));
    CHECK(to_string(d.core) == "a");
    CHECK(to_string(d.conjugator) == "B");
    d = cyclic_reduce(w2("ab"));
    CHECK(to_string(d.core) == "ab");
    CHECK(d.conjugator.empty());

    // Against the shortest conjugate found by brute force over conjugators of length <= |w|.
    SplitMix64 rng(13);
    for (int i = 0; i < 200; ++i) {
        const Word w = random_word(f2, 1 + rng.below(7), rng);
        if (w.empty()) continue;
        const auto c = cyclic_reduce(w);
        CHECK(multiply({c.conjugator, c.core, inverse(c.conjugator)}) == w);
        CHECK(is_cyclically_reduced(c.core));
        std::size_t best = w.size();
        for (const Word& g : f2.ball(static_cast<int>(w.size())))
            best = std::min(best, multiply({g, w, inverse(g)}).size());
        CHECK(c.core.size() == best);
    }
    const Word w = w2("babAB");
    CHECK(multiply({cyclic_reduce(w).conjugator, cyclic_reduce(w).core, inverse(cyclic_reduce(w).conjugator)}) == w);
}

TEST_CASE("roots") {
    CHECK(to_string(root(w2("aa")).root) == "a");
    CHECK(root(w2("aa")).exponent == 2);
    CHECK(root(w2("ab")).exponent == 1);
    CHECK(to_string(root(w2("abab")).root) == "ab");
    CHECK(root(w2("abab")).exponent == 2);
    CHECK_THROWS(root(Word{}));

    // Brute force: the largest m with w = r^m for some r.
    SplitMix64 rng(14);
    for (int i = 0; i < 200; ++i) {
        const Word base = random_word(f2, 1 + rng.below(3), rng);
        if (base.empty()) continue;
        const Word w = power(base, 1 + static_cast<long long>(rng.below(3)));
        long long best = 1;
        for (const Word& r : f2.ball(static_cast<int>(w.size())))
            for (long long m = 2; !r.empty() && r.size() * static_cast<std::size_t>(m) <= 3 * w.size(); ++m)
                if (power(r, m) == w) best = std::max(best, m);
        const auto rt = root(w);
        CHECK(rt.exponent == best);
        CHECK(power(rt.root, rt.exponent) == w);
    }
}

TEST_CASE("elementary closure contains the powers") {
    const auto e = elementary_closure(w2("Baab"));
    CHECK(e.contains(w2("Bab")));
    CHECK(e.contains(w2("Baaab")));
    CHECK_FALSE(e.contains(w2("a")));
}

TEST_CASE("gromov products") {
    CHECK(gromov_product(w2("ab"), w2("aB"), Word{}) == HalfInteger::from_integer(1));
    CHECK(gromov_product(f3.parse("ab"), f3.parse("ac"), Word{}) == HalfInteger::from_integer(1));
    CHECK(gromov_product(w2("ab"), w2("ab"), Word{}) == HalfInteger::from_integer(2));
    CHECK(gromov_product(w2("a"), w2("A"), Word{}) == HalfInteger::from_integer(0));
    CHECK(to_string(HalfInteger::from_twice(3)) == "3/2");
}

TEST_CASE("gromov product equals the distance to the geodesic on random triples") {
    SplitMix64 rng(15);
    for (int i = 0; i < 2000; ++i) {
        const Word x = random_word(f3, rng.below(9), rng);
        const Word y = random_word(f3, rng.below(9), rng);
        const Word s = random_word(f3, rng.below(9), rng);
        const auto g = gromov_product(x, y, s);
        CHECK(g.is_integer());
        CHECK(g.twice() == 2 * static_cast<long long>(oracle::distance_to_geodesic(letters(s), letters(x), letters(y))));
        CHECK(distance_to_geodesic(s, x, y) * 2 == static_cast<std::size_t>(g.twice()));
    }
}

TEST_CASE("geodesic vertices") {
    const auto g = geodesic(w2("ab"), w2("aB"));
    REQUIRE(g.size() == 3);
    CHECK(to_string(g[1]) == "a");
    CHECK(geodesic(w2("a"), w2("a")).size() == 1);
}

TEST_CASE("labeled paths") {
    auto p = labeled_path(std::vector<Word>{w2("a"), w2("b")}, Word{});
    REQUIRE(p.vertices.size() == 3);
    CHECK(to_string(p.vertices[1]) == "a");
    CHECK(to_string(p.end()) == "ab");

    p = labeled_path(std::vector<Word>{w2("a"), w2("A")}, Word{});
    CHECK(p.length() == 2);
    CHECK(distance(p.start(), p.end()) == 0);

    p = labeled_path(std::vector<Word>{w2("ab"), w2("ba")}, w2("b"));
    CHECK(to_string(p.vertices[1]) == "bab");
    CHECK(to_string(p.vertices[2]) == "babba");

    CHECK_THROWS_AS(labeled_path(std::vector<Word>{Word{}}, Word{}), std::invalid_argument);
}

TEST_CASE("quasi-geodesic checks") {
    const auto segment = labeled_path(std::vector<Word>{w2("abAb")}, Word{});
    CHECK(is_quasi_geodesic(segment, 1, 0));

    const auto back = labeled_path(std::vector<Word>{w2("a"), w2("A")}, Word{});
    CHECK_FALSE(is_quasi_geodesic(back, 1, 0));
    CHECK(minimal_c(back, 1) == 2);

    const auto powers = labeled_path(std::vector<Word>{w2("ab"), w2("ab"), w2("ab")}, Word{});
    CHECK(is_quasi_geodesic(powers, 1, 0));
    CHECK_THROWS(is_quasi_geodesic(powers, Rational(1, 2), 0));

    // Powers of a conjugate t c t^-1 backtrack over t at each of the 3 junctions.
    SplitMix64 rng(16);
    for (int i = 0; i < 100; ++i) {
        const Word w = random_word(f2, 1 + rng.below(6), rng);
        if (w.empty()) continue;
        const auto c = cyclic_reduce(w);
        const auto path = labeled_path(std::vector<Word>(4, w), Word{});
        CHECK(minimal_c(path, 1) == 6 * static_cast<long long>(c.conjugator.size()));
        CHECK(minimal_c(labeled_path(std::vector<Word>(4, c.core), Word{}), 1) == 0);
    }
}

TEST_CASE("broken geodesic criterion") {
    std::vector<Word> pts{Word{}, w2("aa"), w2("aabb")};
    auto v = broken_geodesic_check(pts, 0, 1);
    CHECK(v.hypothesis_holds);
    CHECK(v.conclusion_holds);

    pts = {Word{}, w2("a"), Word{}};
    CHECK_FALSE(broken_geodesic_check(pts, 0, 1).hypothesis_holds);

    pts = {w2("a"), w2("bb")};
    v = broken_geodesic_check(pts, 0, 1);
    CHECK(v.hypothesis_holds);
    CHECK(v.conclusion_holds);

    CHECK_THROWS(broken_geodesic_check(pts, 1, 12));
    CHECK_THROWS(broken_geodesic_check(pts, -1, 1));
    CHECK(constants::delta == 0);
}

TEST_CASE("shortlex order") {
    CHECK(w2("a") < w2("A"));
    CHECK(w2("A") < w2("b"));
    CHECK(w2("B") < w2("aa"));
    const auto ball = f2.ball(3);
    CHECK(ball.size() == 53);
    CHECK(std::is_sorted(ball.begin(), ball.end()));
    CHECK(f2.sphere(2).size() == 12);
}
