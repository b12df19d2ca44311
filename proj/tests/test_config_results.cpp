#include <hypmix/config.hpp>
#include <hypmix/mixing.hpp>
#include <hypmix/results.hpp>

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace hypmix;

TEST_CASE("config parsing") {
    const auto c = ExperimentConfig::parse(R"(; drift run
[experiment]
kind = drift
seed = 7
threads = 2

[drift]
n = 500
n_list = 10, 20,40
p = 3/8
lazy = true
)");
    CHECK(c.kind() == ExperimentKind::drift);
    CHECK(c.seed() == 7);
    CHECK(c.threads() == 2);
    CHECK(c.get_int("drift", "n") == 500);
    CHECK(c.get_int_list("drift", "n_list") == std::vector<long long>{10, 20, 40});
    CHECK(c.get_rational("drift", "p") == Rational(3, 8));
    CHECK(c.get_bool("drift", "lazy"));
    CHECK(c.get_int("drift", "trials", 99) == 99);
    CHECK(c.get_or("drift", "measure", "uniform") == "uniform");
    CHECK(c.sections().front().first == "experiment");

    CHECK(ExperimentConfig::parse(c.serialize()) == c);
    auto d = c;
    d.set("drift", "n", "600");
    d.set("extra", "key", "v");
    CHECK(ExperimentConfig::parse(d.serialize()) == d);
    CHECK_FALSE(d == c);
}

TEST_CASE("config errors name their field") {
    const auto c = ExperimentConfig::parse("[experiment]\nkind = mix\nthreads = 0\n[mix]\nn = ten\nlist = 1,,2\nflag = maybe\n");
    auto field_of = [](auto&& fn) {
        try {
            fn();
        } catch (const ConfigError& e) {
            return e.field();
        }
        return std::string("<none>");
    };
    CHECK(field_of([&] { (void)c.get_int("mix", "n"); }) == "mix.n");
    CHECK(field_of([&] { (void)c.get_int("mix", "missing"); }) == "mix.missing");
    CHECK(field_of([&] { (void)c.get_int_list("mix", "list"); }) == "mix.list");
    CHECK(field_of([&] { (void)c.get_bool("mix", "flag"); }) == "mix.flag");
    CHECK(field_of([&] { (void)c.threads(); }) == "experiment.threads");
    CHECK(field_of([] { (void)parse_kind("plot"); }) == "experiment.kind");
    CHECK(field_of([] { (void)ExperimentConfig::parse("orphan = 1\n"); }) != "<none>");
    CHECK(field_of([] { (void)ExperimentConfig::load("/nonexistent/config.ini"); }) == "config");
    CHECK(to_string(parse_kind("cantor")) == "cantor");
}

TEST_CASE("csv and json output") {
    CHECK(emit_csv({}) == "experiment,params,metric,value,ci_low,ci_high,seed\n");
    CHECK(parse_csv(emit_csv({})).rows.empty());

    const ResultRow r{"mix", "n=10, H=\"a\"", "p_hat", 0.125, 0.1, 0.15, 42};
    const auto one = emit_csv({r});
    CHECK(std::count(one.begin(), one.end(), '\n') == 2);

    std::vector<ResultRow> rows{r, point_row("drift", "k=2", "D", 1.0 / 3, 18446744073709551615ull)};
    rows.push_back({"walk", "", "distance", -0.0, 1e-300, 1e300, 0});
    const auto text = emit_csv(rows, {"seed = 1\nkind = mix", "wall_time = 0.5"});
    const auto doc = parse_csv(text);
    CHECK(doc.rows == rows);
    CHECK(doc.comments == std::vector<std::string>{"seed = 1", "kind = mix", "wall_time = 0.5"});
    CHECK(data_section(text) == emit_csv(rows));
    CHECK(text.find('\r') == std::string::npos);

    const auto json = emit_json({r});
    CHECK(json.find("\"experiment\": \"mix\"") != std::string::npos);
    CHECK(json.find("\"seed\": 42") != std::string::npos);
    CHECK(emit_json({}) == "[]\n");

    ResultRow bad = r;
    bad.value = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS(emit_csv({bad}));
    CHECK_THROWS(parse_csv("n,p\n1,2\n"));
    CHECK_THROWS(parse_csv("experiment,params,metric,value,ci_low,ci_high,seed\na,b,c,1,2\n"));
    CHECK(parse_format("json") == OutputFormat::json);
    CHECK_THROWS(parse_format("xml"));
}

TEST_CASE("mixing csv columns") {
    const auto text = emit_mixing_csv({make_estimate(10, 3, 4, 9, "x")}, {"c"});
    CHECK(text.rfind("# c\nn,trials,successes,p_hat,ci_low,ci_high,seed\n10,4,3,0.75,", 0) == 0);
    CHECK(text.substr(text.size() - 3) == ",9\n");
}
