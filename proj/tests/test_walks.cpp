#include <hypmix/acceptance/oracles.hpp>
#include <hypmix/walks.hpp>

#include <doctest.h>

#include <cmath>
#include <set>

namespace {

using namespace hypmix;

const FreeContext f2(2);

Word w2(std::string_view s) { return f2.parse(s); }

std::vector<Word> letters_pm() { return f2.parse_list("a, A, b, B"); }

} // namespace

TEST_CASE("uniform measures") {
    const auto mu = uniform_on(f2, letters_pm());
    for (const auto& [w, p] : mu.support()) CHECK(p == Rational(1, 4));
    CHECK(mu.mass(w2("ab")) == 0);

    const auto lazy = uniform_on(f2, letters_pm(), Rational(1, 2));
    CHECK(lazy.mass(Word{}) == Rational(1, 2));
    CHECK(lazy.mass(w2("B")) == Rational(1, 8));

    const auto skew = uniform_on(f2, f2.parse_list("a, b"));
    CHECK_FALSE(validate_permissible(skew).symmetric);

    CHECK_THROWS_AS(uniform_on(f2, std::vector<Word>{}), std::invalid_argument);
    CHECK_THROWS_AS(uniform_on(f2, std::vector<Word>{Word{}}), std::invalid_argument);
    CHECK_THROWS_AS(StepMeasure(f2, {{w2("a"), Rational(1, 2)}}), std::invalid_argument);
}

TEST_CASE("permissibility") {
    auto r = validate_permissible(uniform_generators(f2));
    CHECK(r.permissible());

    r = validate_permissible(uniform_on(f2, f2.parse_list("a, A")));
    CHECK(r.symmetric);
    CHECK_FALSE(r.non_elementary);
    CHECK_FALSE(r.permissible());

    r = validate_permissible(uniform_on(f2, f2.parse_list("aa, AA, b, B")));
    CHECK(r.symmetric);
    CHECK_FALSE(r.generating);
    CHECK(r.non_elementary);
    CHECK_FALSE(r.describe().empty());
}

TEST_CASE("exact convolution") {
    const auto mu = uniform_generators(f2);
    const auto d1 = convolve(mu, 1);
    CHECK(d1.size() == 4);
    for (const auto& [w, p] : d1) CHECK(p == mu.mass(w));

    const auto d2 = convolve(mu, 2);
    CHECK(d2.at(Word{}) == Rational(1, 4));
    CHECK(d2.at(w2("aa")) == Rational(1, 16));

    // Against direct enumeration of increment pairs.
    std::map<Word, Rational> pairs;
    for (const auto& [x, px] : mu.support())
        for (const auto& [y, py] : mu.support()) pairs[multiply(x, y)] += px * py;
    CHECK(d2 == pairs);

    const auto mixed = StepMeasure(f2, {{w2("a"), Rational(1, 6)},
                                        {w2("A"), Rational(1, 6)},
                                        {w2("ab"), Rational(1, 3)},
                                        {w2("BA"), Rational(1, 3)}});
    for (int n = 0; n <= 6; ++n) {
        const auto d = convolve(mixed, n);
        Rational total = 0;
        for (const auto& [w, p] : d) {
            total += p;
            CHECK(p == d.at(inverse(w)));
        }
        CHECK(total == 1);
    }
    CHECK_THROWS_AS(convolve(mu, 9), std::length_error);
}

TEST_CASE("sampled walks") {
    const auto mu = uniform_generators(f2);
    const auto t0 = sample_walk(mu, 0, 42);
    REQUIRE(t0.positions.size() == 1);
    CHECK(t0.end().empty());

    const auto t = sample_walk(mu, 3, 42);
    CHECK(t.positions.size() == 4);
    CHECK(t.increments.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(t.positions[i + 1] == multiply(t.positions[i], t.increments[i]));
    CHECK(sample_walk(mu, 3, 42).positions == t.positions);
    // Frozen from the first run of this generator.
    CHECK(to_string(t.end()) == "b");

    SplitMix64 rng(42);
    CHECK(sample_endpoint(mu, 3, rng) == t.end());

    std::set<std::vector<Word>> distinct;
    for (std::uint64_t seed = 0; seed < 10000; ++seed) distinct.insert(sample_walk(mu, 30, seed).increments);
    CHECK(distinct.size() == 10000);
}

TEST_CASE("empirical two-step law matches the convolution") {
    const auto mu = uniform_generators(f2);
    const auto exact = convolve(mu, 2);
    std::map<Word, std::size_t> counts;
    const std::size_t samples = 100000;
    SplitMix64 rng(7);
    for (std::size_t i = 0; i < samples; ++i) ++counts[sample_endpoint(mu, 2, rng)];
    for (const auto& [w, p] : exact) {
        const double q = to_double(p);
        const double sigma = std::sqrt(q * (1 - q) / static_cast<double>(samples));
        CHECK(std::abs(static_cast<double>(counts[w]) / samples - q) <= 3 * sigma + 1e-12);
    }
    CHECK(counts.size() == exact.size());
}

TEST_CASE("drift") {
    const auto mu = uniform_generators(f2);
    const auto d = drift_estimate(mu, 2000, 400, 5);
    CHECK(d.ci_low() <= 0.5 + 0.02);
    CHECK(d.ci_high() >= 0.5 - 0.02);
    CHECK(std::abs(d.mean - oracle::drift_oracle(2, 2000)) < 0.02);

    const auto point = drift_estimate(point_mass(f2, w2("a")), 50, 10, 1, {1, true});
    CHECK(point.mean == 1.0);

    CHECK_THROWS(drift_estimate(mu, 10, 0, 1));
    CHECK_THROWS(drift_estimate(uniform_on(f2, f2.parse_list("a, A")), 10, 10, 1));

    RunOptions four{4, false};
    const auto a = drift_estimate(mu, 300, 64, 9);
    const auto b = drift_estimate(mu, 300, 64, 9, four);
    CHECK(a.mean == b.mean);
    CHECK(a.half_width == b.half_width);
}

TEST_CASE("loxodromic almost surely") {
    const auto mu = uniform_generators(f2);
    std::size_t nontrivial = 0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        SplitMix64 rng(substream_seed(3, i));
        nontrivial += !sample_endpoint(mu, 100, rng).empty();
    }
    CHECK(static_cast<double>(nontrivial) / 10000 > 0.999);
}

TEST_CASE("measure specifications") {
    const auto u = parse_measure(f2, R"(["a","A","b","B"])");
    CHECK(u.support().size() == 4);
    CHECK(parse_measure(f2, "uniform").support().size() == 4);
    CHECK(parse_measure(f2, "a, A, b, B").mass(w2("b")) == Rational(1, 4));
    const auto m = parse_measure(f2, R"([["a",1,3],["A",1,3],["b",1,6],["B",1,6]])");
    CHECK(m.mass(w2("a")) == Rational(1, 3));
    CHECK_THROWS(parse_measure(f2, R"([["a",1,2]])"));
    CHECK_THROWS(parse_measure(f2, "[["));
    CHECK_THROWS(parse_measure(f2, R"(["c"])"));
}
