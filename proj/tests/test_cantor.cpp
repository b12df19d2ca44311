#include <hypmix/acceptance/oracles.hpp>
#include <hypmix/cantor.hpp>

#include <doctest.h>

#include <algorithm>
#include <cmath>

namespace {

using namespace hypmix;
using namespace hypmix::cantor;

ConeLabel L(std::string_view s) { return parse_label(s); }

std::vector<std::string> fmt(const std::vector<ConeLabel>& v) {
    std::vector<std::string> out;
    for (const auto& w : v) out.push_back(format_label(w));
    return out;
}

/// Reduced words over x, y, z of exactly the given length, by filtering all 6^len strings.
std::vector<ConeLabel> all_labels(int len) {
    std::vector<ConeLabel> out;
    const Letter letters[6] = {x, -x, y, -y, z, -z};
    std::vector<int> digits(static_cast<std::size_t>(len), 0);
    while (true) {
        std::vector<Letter> w;
        bool reduced = true;
        for (int d : digits) {
            if (!w.empty() && w.back() == -letters[d]) reduced = false;
            w.push_back(letters[d]);
        }
        if (reduced) out.push_back(Word::reduce(w));
        int i = len - 1;
        while (i >= 0 && ++digits[static_cast<std::size_t>(i)] == 6) digits[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
    }
    return out;
}

} // namespace

TEST_CASE("label syntax") {
    CHECK(format_label(L("zXy")) == "zXy");
    CHECK(L("zXy").letters() == std::vector<Letter>{z, -x, y});
    CHECK_THROWS(parse_label(""));
    CHECK_THROWS(parse_label("zw"));
    CHECK(in_f2(L("xYx")));
    CHECK_FALSE(in_f2(L("xz")));
    CHECK(omega().size() == 18);
    CHECK(omega_index(L("zx")).has_value());
    CHECK_FALSE(omega_index(L("xy")).has_value());
}

TEST_CASE("order cones") {
    CHECK(fmt(order_cones(L("zx"), 1)) == std::vector<std::string>{"zxx", "zxy", "zxY", "zxz", "zxZ"});
    CHECK(fmt(order_cones(L("z"), 1)) == std::vector<std::string>{"zx", "zX", "zy", "zY", "zz"});
    CHECK(order_cones(L("yZ"), 0) == std::vector<ConeLabel>{L("yZ")});
    CHECK_THROWS(order_cones(L("z"), -1));

    // Extensions found by filtering every reduced word of the target length, sorted by letter rank.
    for (const auto& u : {L("zx"), L("Y"), L("xzY")}) {
        for (int n : {1, 2, 3}) {
            std::vector<ConeLabel> expected;
            for (const auto& w : all_labels(static_cast<int>(u.size()) + n))
                if (w.prefix(u.size()) == u) expected.push_back(w);
            std::sort(expected.begin(), expected.end(), [](const Word& a, const Word& b) {
                return std::lexicographical_compare(a.letters().begin(), a.letters().end(), b.letters().begin(),
                                                    b.letters().end(), [](Letter p, Letter q) {
                                                        return letter_rank(p) < letter_rank(q);
                                                    });
            });
            CHECK(order_cones(u, n) == expected);
        }
    }
}

TEST_CASE("order-preserving bijections between cones") {
    CHECK(format_label(xi(L("zx"), L("zy"), L("zxx"))) == "zyx");
    CHECK(format_label(xi(L("zx"), L("zy"), L("zxy"))) == "zyX");
    CHECK(xi(L("zYx"), L("zYx"), L("zYxzz")) == L("zYxzz"));
    CHECK_THROWS(xi(L("zx"), L("zy"), L("zyx")));

    const auto u = L("zx"), v = L("Yz"), w = L("xZy");
    for (int n : {1, 2, 3}) {
        const auto from = order_cones(u, n);
        const auto to = order_cones(v, n);
        REQUIRE(from.size() == to.size());
        for (std::size_t i = 0; i < from.size(); ++i) {
            CHECK(xi(u, v, from[i]) == to[i]);
            CHECK(xi(v, u, xi(u, v, from[i])) == from[i]);
            CHECK(xi(v, w, xi(u, v, from[i])) == xi(u, w, from[i]));
        }
    }
}

TEST_CASE("permutations of the z labels") {
    const auto sigma = S18Perm::from_constraints({{L("zx"), L("zy")}});
    CHECK(sigma(L("zx")) == L("zy"));
    CHECK(apply(GElement::perm(sigma), L("zxx")) == std::optional<ConeLabel>{L("zyx")});
    CHECK(sigma.compose(sigma.inverse()).is_identity());
    CHECK(S18Perm::transposition(L("zz"), L("ZZ"))(L("ZZ")) == L("zz"));
    CHECK_THROWS(S18Perm::from_constraints({{L("zx"), L("zy")}, {L("zX"), L("zy")}}));
    CHECK_THROWS(S18Perm::transposition(L("xy"), L("zz")));

    SplitMix64 rng(3);
    for (int t = 0; t < 20; ++t) {
        const auto p = S18Perm::random(rng);
        CHECK(p.inverse().compose(p).is_identity());
        for (const auto& w : all_labels(4))
            if (in_f2(w.prefix(2))) CHECK(apply(GElement::perm(p), w) == std::optional<ConeLabel>{w});
    }
}

TEST_CASE("letter actions") {
    CHECK(apply(GElement::letter(x), L("zx")) == std::optional<ConeLabel>{L("xzx")});
    CHECK(apply(GElement::letter(x), L("Xz")) == std::optional<ConeLabel>{L("z")});
    CHECK_FALSE(apply(GElement::letter(x), L("X")).has_value());
    CHECK_FALSE(apply(GElement::perm(S18Perm()), L("z")).has_value());
    CHECK(apply(GElement{}, L("yy")) == std::optional<ConeLabel>{L("yy")});

    SplitMix64 rng(5);
    const GElement g = parse_gelement(to_string(GElement::letter(y) * GElement::perm(S18Perm::random(rng))));
    for (const auto& w : all_labels(4)) {
        const auto there = apply(g, w);
        REQUIRE(there.has_value());
        CHECK(apply(g.inverse(), *there) == std::optional<ConeLabel>{w});
    }
}

TEST_CASE("antichain images") {
    for (int depth : {2, 3, 4}) {
        const auto full = full_partition(depth);
        SplitMix64 rng(static_cast<std::uint64_t>(depth));
        const GElement g = GElement::perm(S18Perm::random(rng)) * GElement::letter(-x) *
                           GElement::perm(S18Perm::random(rng)) * GElement::letter(y);
        CHECK(image_antichain(g, full) == normalize(full));
        CHECK(image_antichain(GElement{}, full) == normalize(full));
    }
    CHECK(full_partition(1).size() == 6);
    CHECK(normalize(full_partition(2)) == normalize(full_partition(1)));

    // x Cone(X), checked pointwise at depth 3 against the letter action.
    const auto image = image_antichain(GElement::letter(x), {L("X")});
    for (const auto& w : all_labels(3)) {
        const bool inside = std::any_of(image.begin(), image.end(),
                                        [&](const Word& c) { return c.size() <= w.size() && w.prefix(c.size()) == c; });
        const bool expected = apply(GElement::letter(-x), w).has_value() && apply(GElement::letter(-x), w)->front() == -x;
        CHECK(inside == expected);
    }
    CHECK_THROWS_AS(image_antichain(GElement::letter(x), {Word::reduce(std::vector<Letter>(10, z))}, 4), DepthCapExceeded);
}

TEST_CASE("claim 1") {
    const auto f = claim1_f(L("zx"));
    REQUIRE(f.size() == 1);
    const auto& sigma = std::get<S18Perm>(f.letters().front());
    CHECK(sigma(L("zx")) == L("zz"));
    CHECK(sigma(L("ZZ")) == L("ZZ"));
    CHECK(verify_claim1(L("zx"), f).holds);

    for (const char* s : {"xzx", "Zxz", "zxyX", "ZZx", "yyZx"}) {
        const auto u = L(s);
        const auto g = claim1_f(u);
        CHECK(verify_claim1(u, g).holds);
        // On Cone(u) the element acts as the order-preserving bijection onto Cone(zz).
        std::vector<ConeLabel> images;
        for (const auto& w : order_cones(u, 2)) images.push_back(apply(g, w).value());
        CHECK(images == order_cones(L("zz"), 2));
    }
    CHECK_THROWS(claim1_f(L("ZZZ")));
    CHECK_THROWS(claim1_f(L("xy")));
    CHECK_THROWS(claim1_f(L("z")));
}

TEST_CASE("claim 2") {
    CHECK(claim2_g(L("ZZZ")).is_identity_word());
    const auto u = L("zx");
    const auto g = claim2_g(u);
    const auto v = verify_claim2(u, g, 100, 1);
    CHECK(v.holds);
    CHECK(v.transcript.size() == 3);
    CHECK(fixes_cone(g, L("yzyzy")));
    CHECK(sends_cone(g, u, L("ZZ"), 3));

    for (const char* s : {"xZy", "zYzx", "Zy"}) {
        const auto w = L(s);
        CHECK(verify_claim2(w, claim2_g(w), 100, 2).holds);
    }
}

TEST_CASE("claim 3") {
    const std::vector<std::pair<ConeLabel, ConeLabel>> one{{L("zx"), L("yz")}};
    CHECK(verify_claim3(one, claim3_witness(one, 2)).holds);
    const std::vector<std::pair<ConeLabel, ConeLabel>> same{{L("zx"), L("zx")}};
    CHECK(verify_claim3(same, claim3_witness(same, 2)).holds);

    const std::vector<std::pair<ConeLabel, ConeLabel>> three{
        {L("zxy"), L("Yzz")}, {L("xZy"), L("zxy")}, {L("ZZZ"), L("yzX")}};
    CHECK(verify_claim3(three, claim3_witness(three, 3)).holds);

    const std::vector<std::pair<ConeLabel, ConeLabel>> clash{{L("zx"), L("yz")}, {L("zy"), L("yz")}};
    CHECK_THROWS(claim3_witness(clash, 2));
    const std::vector<std::pair<ConeLabel, ConeLabel>> flat{{L("xy"), L("yz")}};
    CHECK_THROWS(claim3_witness(flat, 2));
    CHECK_THROWS(claim3_witness(one, 3));
}

TEST_CASE("transience constants") {
    const auto roots = hit_probability_exact();
    CHECK(roots.minimal_root == Rational(1, 3));
    CHECK(roots.other_root == Rational(1));
    CHECK(oracle::hitting_value_iteration(400) == doctest::Approx(1.0 / 3).epsilon(1e-6));

    const auto mc = estimate_hit_probability(20000, 400, 4);
    CHECK(std::abs(mc.p_hat - oracle::hitting_within(400)) < 4 * mc.sigma());
    CHECK(estimate_hit_probability(500, 50, 4, 3).successes == estimate_hit_probability(500, 50, 4, 1).successes);

    const auto small = superharmonic_check(1);
    const auto large = superharmonic_check(8);
    CHECK(small.holds());
    CHECK(large.holds() == small.holds());
    CHECK(small.points_checked == 5);
    CHECK(large.support_size == BigInt("6402373705728004"));
}

TEST_CASE("non-mixing signature") {
    QnOptions o;
    o.n_list = {0, 1, 2, 10};
    o.trials = 20000;
    o.p_letter = Rational(1, 4);
    o.seed = 12;
    const auto report = estimate_qn(o);
    REQUIRE(report.estimates.size() == 4);
    CHECK(report.depth_cap_failures == 0);
    CHECK(report.estimates[0].p_hat == 0.0);
    CHECK(report.estimates[1].p_hat == 0.0);

    // With no permutation steps, w_n(Cone(z)) meets Cone(xx) exactly when w_n starts with xx.
    // By symmetry that has probability P(|w_n| >= 2) / 12; the law of |w_n| is a reflected walk.
    for (std::size_t j = 2; j < 4; ++j) {
        const int n = o.n_list[j];
        std::vector<double> law{1.0};
        for (int s = 0; s < n; ++s) {
            std::vector<double> next(law.size() + 1, 0.0);
            next[1] += law[0];
            for (std::size_t d = 1; d < law.size(); ++d) {
                next[d + 1] += 0.75 * law[d];
                next[d - 1] += 0.25 * law[d];
            }
            law = next;
        }
        const double exact = (1.0 - law[0] - law[1]) / 12.0;
        const auto& e = report.estimates[j];
        CHECK(std::abs(e.p_hat - exact) < 4 * std::sqrt(exact * (1 - exact) / e.trials));
        CHECK(e.p_hat <= oracle::hitting_within(n) + 4 * e.sigma);
    }

    o.p_letter = Rational(1, 8);
    o.n_list = {30};
    o.trials = 300;
    const auto a = estimate_qn(o);
    o.threads = 3;
    CHECK(estimate_qn(o).estimates.front().successes == a.estimates.front().successes);

    o.p_letter = Rational(1, 3);
    CHECK_THROWS(estimate_qn(o));
}
