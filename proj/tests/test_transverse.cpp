#include <hypmix/acceptance/oracles.hpp>
#include <hypmix/transverse.hpp>

#include <doctest.h>

#include <algorithm>

namespace {

using namespace hypmix;

const FreeContext f2(2);

SubgroupAutomaton sub(std::string_view gens) { return SubgroupAutomaton::from_generators(f2, f2.parse_list(gens)); }
Word w2(std::string_view s) { return f2.parse(s); }

bool meets_cyclic(const SubgroupAutomaton& h, const Word& u, const Word& g, int max_power) {
    for (int m = 1; m <= max_power; ++m)
        for (long long s : {1, -1})
            if (h.contains(multiply({u, power(g, s * m), inverse(u)}))) return true;
    return false;
}

} // namespace

TEST_CASE("power conjugacy decisions") {
    auto p = power_conjugate_into(sub("a"), w2("a"));
    REQUIRE(p);
    CHECK(p->exponent == 1);
    CHECK(p->conjugator.empty());

    CHECK_FALSE(power_conjugate_into(sub("a"), w2("b")));

    p = power_conjugate_into(sub("aa, bb"), w2("a"));
    REQUIRE(p);
    CHECK(p->exponent == 2);
    CHECK(sub("aa, bb").contains(w2("aa")));
    CHECK_FALSE(sub("aa, bb").contains(w2("a")));

    CHECK_THROWS(power_conjugate_into(sub("a"), Word{}));
}

TEST_CASE("transversality") {
    CHECK(is_transverse(sub("a"), w2("ab")));
    CHECK_FALSE(is_transverse(sub("a"), w2("baB")));
    const auto p = power_conjugate_into(sub("a"), w2("baB"));
    REQUIRE(p);
    CHECK(p->exponent == 1);
    CHECK(conjugate(sub("a"), p->conjugator).contains(w2("baB")));
    CHECK_FALSE(is_transverse(sub("ab"), w2("ab")));

    const auto cert = certify_transversality(sub("aa, bb"), w2("a"));
    CHECK_FALSE(cert.transverse);
    CHECK(cert.to_text().find("verdict: witness") != std::string::npos);
    CHECK(certify_transversality(sub("a"), w2("ab")).to_text().find("verdict: transverse") != std::string::npos);
}

TEST_CASE("power conjugacy agrees with brute force on small instances") {
    const auto graphs = oracle::enumerate_core_automata(3);
    const auto elements = f2.ball(3);
    for (const auto& h : graphs)
        for (const Word& f : elements) {
            if (f.empty()) continue;
            const auto fast = power_conjugate_into(h, f);
            const auto slow = oracle::brute_force_power_conjugacy(h, f, 6, 3);
            CHECK(fast.has_value() == slow.has_value());
            if (fast && slow) {
                CHECK(fast->exponent == *slow);
                CHECK(conjugate(h, fast->conjugator).contains(power(f, fast->exponent)));
            }
        }
}

TEST_CASE("overlap counts") {
    CHECK(overlap_count(sub("a"), w2("b"), Word{}, 2, {-10, 10}) == 5);
    CHECK(overlap_count(sub("a"), w2("a"), Word{}, 0, {-10, 10}) == 21);
    CHECK(overlap_count(sub("a"), w2("ab"), Word{}, 0, {-10, 10}) == 1);

    const auto bounded = overlap_bound(sub("a"), w2("ab"), 3, 4, {-200, 200});
    const auto wider = overlap_bound(sub("a"), w2("ab"), 3, 4, {-400, 400});
    CHECK(bounded.counts == wider.counts);
    CHECK(bounded.counts.size() == f2.ball(4).size());

    // A conjugate of a power inside H makes the count grow with the range.
    const auto narrow = overlap_count(sub("aa"), w2("baB"), w2("b"), 1, {-50, 50});
    const auto wide = overlap_count(sub("aa"), w2("baB"), w2("b"), 1, {-100, 100});
    CHECK(wide >= 2 * narrow - 1);
    CHECK(narrow >= 50);
}

TEST_CASE("forbidden cosets") {
    auto u0 = compute_U0(sub("a"), w2("a"));
    CHECK(u0.representatives == std::vector<Word>{Word{}});
    CHECK(compute_U0(sub("a"), w2("b")).representatives.empty());

    // Contract: every u with u^-1 H u meeting <g> lies in H U0, checked over a ball.
    for (auto [gens, g] : std::vector<std::pair<std::string, std::string>>{
             {"aa, bb", "a"}, {"a", "a"}, {"ab", "ba"}, {"aab, bA", "ab"}, {"a, bb", "b"}, {"aaa", "a"}}) {
        const auto h = sub(gens);
        const auto u0 = compute_U0(h, w2(g));
        for (const Word& u : f2.ball(5))
            if (meets_cyclic(h, u, w2(g), h.state_count() + 1)) CHECK(u0.covers(h, u));
        for (const Word& rep : u0.representatives) CHECK(meets_cyclic(h, rep, w2(g), h.state_count() + 1));
    }
    u0 = compute_U0(sub("aa, bb"), w2("a"));
    CHECK(u0.covers(sub("aa, bb"), w2("a")));
    CHECK_THROWS(compute_U0(sub("a"), Word{}));
}

TEST_CASE("apt verification") {
    auto r = apt_check(sub("a"), w2("b"), 0);
    CHECK(r.verified);
    CHECK(r.exponent == 1);
    CHECK(r.cosets.empty());

    r = apt_check(sub("a"), w2("a"), 0);
    CHECK(r.verified);
    CHECK(r.cosets == std::vector<Word>{Word{}});

    r = apt_check(sub("a"), w2("ab"), 1);
    CHECK(r.verified);
    const auto inv = apt_check(sub("a"), w2("BA"), 1);
    CHECK(inv.verified);
    CHECK(inv.cosets.size() == r.cosets.size());

    // Every filtered u at the reported exponent lies in one of the cosets.
    const auto h = sub("a");
    const Word g = power(w2("ab"), r.exponent + 2);
    for (const Word& u : f2.ball(1))
        if (distance_to_orbit(h, multiply(u, g)) <= 1)
            CHECK(std::any_of(r.cosets.begin(), r.cosets.end(),
                              [&](const Word& c) { return h.contains(multiply(u, inverse(c))); }));
}

TEST_CASE("gromov products along a transverse axis stabilise") {
    const auto h = sub("a");
    const Word g = w2("ab");
    auto max_over = [&](long long k_max) {
        long long best = 0;
        for (long long k = -k_max; k <= k_max; ++k)
            for (const Word& x : f2.ball(6))
                if (h.contains(x)) best = std::max(best, gromov_product(power(g, k), x, Word{}).twice());
        return best;
    };
    CHECK(max_over(50) == max_over(25));
}

TEST_CASE("transverse constructor") {
    std::vector<SubgroupAutomaton> one{sub("a")};
    auto c = construct_transverse(one, w2("a"));
    CHECK(to_string(c.shift) == "b");
    CHECK(to_string(c.f) == "ab");
    CHECK(c.exponent == 1);
    CHECK(c.certificates.front().transverse);

    std::vector<SubgroupAutomaton> two{sub("a"), sub("b")};
    c = construct_transverse(two, w2("ab"));
    for (const auto& t : two) CHECK(is_transverse(t, c.f));
    CHECK(c.f == multiply(power(w2("ab"), c.exponent), c.shift));

    std::vector<SubgroupAutomaton> finite{sub("aa, ab, bb")};
    CHECK_THROWS_AS(construct_transverse(finite, w2("a")), std::invalid_argument);
}
