#include <hypmix/harness.hpp>

#include <hypmix/acceptance/suite.hpp>
#include <hypmix/cantor.hpp>
#include <hypmix/transverse.hpp>
#include <hypmix/walks.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

namespace hypmix {

namespace {

std::string field(std::string_view section, std::string_view key) {
    return std::string(section) + "." + std::string(key);
}

/// Runs `fn`, turning module argument errors into ConfigErrors on `name`.
template <typename Fn>
auto checked(const std::string& name, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(name, e.what());
    }
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

FreeContext context(const ExperimentConfig& c, std::string_view section) {
    const auto k = c.get_int(section, "k", 2);
    if (k < 1 || k > 26) throw ConfigError(field(section, "k"), "rank must be between 1 and 26");
    return FreeContext(static_cast<int>(k));
}

SubgroupAutomaton subgroup_field(const ExperimentConfig& c, const FreeContext& ctx, std::string_view section,
                                 std::string_view key) {
    return checked(field(section, key), [&] {
        const std::string text = trim(c.get(section, key));
        if (text.empty() || text == "1") return SubgroupAutomaton(ctx);
        return SubgroupAutomaton::from_generators(ctx, ctx.parse_list(text));
    });
}

void require_infinite_index(const SubgroupAutomaton& h, std::string_view section, std::string_view key) {
    if (const auto index = h.index())
        throw ConfigError(field(section, key), "subgroup has finite index " + std::to_string(*index));
}

Word word_field(const ExperimentConfig& c, const FreeContext& ctx, std::string_view section, std::string_view key) {
    return checked(field(section, key), [&] { return ctx.parse(trim(c.get(section, key))); });
}

StepMeasure measure_field(const ExperimentConfig& c, const FreeContext& ctx, std::string_view section) {
    return checked(field(section, "measure"),
                   [&] { return parse_measure(ctx, c.get_or(section, "measure", "uniform")); });
}

int positive_int(const ExperimentConfig& c, std::string_view section, std::string_view key,
                 std::optional<long long> fallback, long long min = 1) {
    const auto v = c.get_int(section, key, fallback);
    if (v < min || v > 100000000)
        throw ConfigError(field(section, key), "must be between " + std::to_string(min) + " and 100000000");
    return static_cast<int>(v);
}

std::vector<int> length_list(const ExperimentConfig& c, std::string_view section, std::string_view key,
                             std::vector<long long> fallback) {
    const auto raw = c.get_int_list(section, key, fallback);
    if (raw.empty()) throw ConfigError(field(section, key), "list is empty");
    std::vector<int> out;
    for (auto v : raw) {
        if (v < 0 || v > 10000000) throw ConfigError(field(section, key), "walk lengths must be in [0, 10^7]");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

RunOptions run_options(const ExperimentConfig& c, std::string_view section) {
    return {c.threads(), c.get_bool(section, "allow_non_permissible", false)};
}

ResultRow estimate_row(const std::string& experiment, const std::string& params, const std::string& metric,
                       const MixingEstimate& e) {
    return {experiment, params, metric, e.p_hat, e.ci_low, e.ci_high, e.seed};
}

void run_walk(const ExperimentConfig& c, RunResult& r) {
    const auto ctx = context(c, "walk");
    const auto mu = measure_field(c, ctx, "walk");
    const int n = positive_int(c, "walk", "n", 20, 0);
    const auto t = sample_walk(mu, n, c.seed());
    for (std::size_t i = 0; i < t.positions.size(); ++i)
        r.rows.push_back(point_row("walk", "step=" + std::to_string(i) + " position=" + to_string(t.positions[i]),
                                   "distance", static_cast<double>(t.positions[i].size()), c.seed()));
}

void run_drift(const ExperimentConfig& c, RunResult& r) {
    const auto ctx = context(c, "drift");
    const auto mu = measure_field(c, ctx, "drift");
    const int n = positive_int(c, "drift", "n", 10000);
    const int trials = positive_int(c, "drift", "trials", 2000);
    const auto d = checked("drift", [&] {
        return drift_estimate(mu, n, static_cast<std::size_t>(trials), c.seed(), run_options(c, "drift"));
    });
    r.rows.push_back({"drift", "k=" + std::to_string(ctx.rank()) + " n=" + std::to_string(n) +
                                   " trials=" + std::to_string(trials),
                      "drift", d.mean, d.ci_low(), d.ci_high(), c.seed()});
}

void run_mix(const ExperimentConfig& c, RunResult& r) {
    const auto ctx = context(c, "mix");
    const auto h = subgroup_field(c, ctx, "mix", "H");
    const auto k = subgroup_field(c, ctx, "mix", "K");
    require_infinite_index(h, "mix", "H");
    require_infinite_index(k, "mix", "K");
    const int radius = positive_int(c, "mix", "window_radius", 2, 0);
    if (radius > 8) throw ConfigError("mix.window_radius", "window radius above 8 is not supported");
    const auto window = ctx.ball(radius);
    const auto mu = measure_field(c, ctx, "mix");
    const auto ns = length_list(c, "mix", "n_list", {10, 20, 40, 80, 160});
    const int trials = positive_int(c, "mix", "trials", 500);
    const auto options = run_options(c, "mix");
    const auto geometry_samples = c.get_int("mix", "geometry_samples", 0);
    if (geometry_samples < 0) throw ConfigError("mix.geometry_samples", "must be nonnegative");

    std::vector<MixingEstimate> estimates;
    for (int n : ns) {
        estimates.push_back(checked("mix", [&] {
            return estimate_mixing(h, k, window, mu, n, static_cast<std::size_t>(trials), c.seed(), options);
        }));
        const std::string params = "n=" + std::to_string(n) + " trials=" + std::to_string(trials);
        r.rows.push_back(estimate_row("mix", params, "p_hat", estimates.back()));
        if (geometry_samples > 0) {
            const auto g = witness_geometry(h, k, window, mu, n, static_cast<std::size_t>(trials),
                                            static_cast<std::size_t>(geometry_samples), c.seed());
            r.rows.push_back(point_row("mix_geometry", params, "mean_shortest_mixed_element",
                                       g.mean_shortest_mixed_element, c.seed()));
            r.rows.push_back(point_row("mix_geometry", params, "max_quasi_geodesic_c",
                                       to_double(g.max_quasi_geodesic_c), c.seed()));
        }
    }
    r.notes.push_back(std::string("p_hat is a ") + mixing_lower_bound_tag);
    // Geometry rows do not fit the mixing columns; keep the generic layout then.
    if (geometry_samples == 0) r.mixing = std::move(estimates);
}

void run_freeprod(const ExperimentConfig& c, RunResult& r) {
    const auto ctx = context(c, "freeprod");
    const auto mu = measure_field(c, ctx, "freeprod");
    const auto ns = length_list(c, "freeprod", "n_list", {100});
    const int trials = positive_int(c, "freeprod", "trials", 500);
    const auto options = run_options(c, "freeprod");
    const std::string mode = c.get_or("freeprod", "mode", "absorption");
    if (mode == "absorption") {
        const auto h = subgroup_field(c, ctx, "freeprod", "H");
        require_infinite_index(h, "freeprod", "H");
        for (int n : ns) {
            auto e = checked("freeprod", [&] {
                return free_product_experiment(h, mu, n, static_cast<std::size_t>(trials), c.seed(), options);
            });
            r.rows.push_back(estimate_row("freeprod", "n=" + std::to_string(n) + " trials=" + std::to_string(trials),
                                          "p_hat", e));
        }
    } else if (mode == "random_subgroup") {
        const int walks = positive_int(c, "freeprod", "walks", 2);
        const std::vector<StepMeasure> measures(static_cast<std::size_t>(walks), mu);
        for (int n : ns) {
            auto e = checked("freeprod", [&] {
                return random_subgroup_experiment(measures, n, static_cast<std::size_t>(trials), c.seed(), options);
            });
            r.rows.push_back(estimate_row("random_subgroup",
                                          "walks=" + std::to_string(walks) + " n=" + std::to_string(n) +
                                              " trials=" + std::to_string(trials),
                                          "p_hat", e));
        }
    } else {
        throw ConfigError("freeprod.mode", "expected absorption or random_subgroup, got '" + mode + "'");
    }
}

/// One subgroup per line as comma-separated generators; '#' starts a comment.
std::vector<std::pair<std::string, SubgroupAutomaton>> read_subgroups(const FreeContext& ctx, std::istream& in,
                                                                      const std::string& name) {
    std::vector<std::pair<std::string, SubgroupAutomaton>> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        out.emplace_back(line, checked(name + " line " + std::to_string(line_no), [&] {
                             return SubgroupAutomaton::from_generators(ctx, ctx.parse_list(line));
                         }));
    }
    if (out.empty()) throw ConfigError(name, "no subgroups given");
    return out;
}

void run_transverse(const ExperimentConfig& c, RunResult& r) {
    const auto ctx = context(c, "transverse");
    std::vector<std::pair<std::string, SubgroupAutomaton>> targets;
    if (c.has("transverse", "subgroups")) {
        const auto& path = c.get("transverse", "subgroups");
        std::ifstream in(path);
        if (!in) throw ConfigError("transverse.subgroups", "cannot open '" + path + "'");
        targets = read_subgroups(ctx, in, "transverse.subgroups");
    } else {
        std::string text = c.get("transverse", "targets");
        std::replace(text.begin(), text.end(), ';', '\n');
        std::istringstream in(text);
        targets = read_subgroups(ctx, in, "transverse.targets");
    }
    const Word g = word_field(c, ctx, "transverse", "g");
    ConstructOptions options;
    options.max_exponent = c.get_int("transverse", "max_exponent", options.max_exponent);
    const auto e = static_cast<std::size_t>(positive_int(c, "transverse", "overlap_e", 3, 0));
    const int radius = positive_int(c, "transverse", "overlap_radius", 4, 0);
    const long long range = positive_int(c, "transverse", "overlap_range", 200);

    std::vector<SubgroupAutomaton> automata;
    std::string label;
    for (const auto& [text, a] : targets) {
        automata.push_back(a);
        label += (label.empty() ? "" : "|") + text;
    }
    const auto built = checked("transverse", [&] { return construct_transverse(automata, g, options); });
    const std::string params = "targets=" + label + " g=" + to_string(g) + " f=" + to_string(built.f);
    r.rows.push_back(point_row("transverse", params, "exponent", static_cast<double>(built.exponent), 0));

    std::ostringstream cert;
    cert << "element: " << to_string(built.f) << "\nshift: " << to_string(built.shift)
         << "\nexponent: " << built.exponent << "\n";
    for (std::size_t i = 0; i < automata.size(); ++i) {
        const auto& certificate = built.certificates[i];
        const auto narrow = overlap_bound(automata[i], built.f, e, radius, {-range, range});
        const auto wide = overlap_bound(automata[i], built.f, e, radius, {-2 * range, 2 * range});
        const std::string p = "target=" + targets[i].first + " f=" + to_string(built.f);
        r.rows.push_back(point_row("transverse", p, "certified", certificate.transverse ? 1.0 : 0.0, 0));
        r.rows.push_back(point_row("transverse", p + " range=" + std::to_string(range), "max_overlap",
                                   static_cast<double>(narrow.max_count), 0));
        r.rows.push_back(point_row("transverse", p + " range=" + std::to_string(2 * range), "max_overlap",
                                   static_cast<double>(wide.max_count), 0));
        cert << "\n[target " << targets[i].first << "]\n"
             << certificate.to_text() << "overlap_e: " << e << "\noverlap_radius: " << radius
             << "\nmax_overlap: " << narrow.max_count << " (|m| <= " << range << "), " << wide.max_count
             << " (|m| <= " << 2 * range << ")\n";
    }
    r.certificate = cert.str();
}

std::vector<std::pair<cantor::ConeLabel, cantor::ConeLabel>> parse_pairs(const std::string& text) {
    std::vector<std::pair<cantor::ConeLabel, cantor::ConeLabel>> pairs;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        auto colon = item.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("pair '" + item + "' must look like u:v");
        pairs.emplace_back(cantor::parse_label(trim(item.substr(0, colon))),
                           cantor::parse_label(trim(item.substr(colon + 1))));
    }
    if (pairs.empty()) throw std::invalid_argument("no pairs given");
    return pairs;
}

void run_cantor(const ExperimentConfig& c, RunResult& r) {
    const std::string mode = c.get_or("cantor", "mode", c.has("cantor", "claim") ? "claim" : "qn");
    if (mode == "claim") {
        const auto claim = c.get_int("cantor", "claim");
        cantor::ClaimVerification v;
        std::string params, element;
        if (claim == 1 || claim == 2) {
            const auto u = checked("cantor.u", [&] { return cantor::parse_label(trim(c.get("cantor", "u"))); });
            const auto samples = static_cast<std::size_t>(positive_int(c, "cantor", "samples", 100));
            checked("cantor.u", [&] {
                const auto g = claim == 1 ? cantor::claim1_f(u) : cantor::claim2_g(u);
                element = to_string(g);
                v = claim == 1 ? cantor::verify_claim1(u, g) : cantor::verify_claim2(u, g, samples, c.seed());
                return 0;
            });
            params = "claim=" + std::to_string(claim) + " u=" + cantor::format_label(u);
        } else if (claim == 3) {
            const auto pairs = checked("cantor.pairs", [&] { return parse_pairs(c.get("cantor", "pairs")); });
            const auto n = pairs.front().first.size();
            checked("cantor.pairs", [&] {
                const auto g = cantor::claim3_witness(pairs, static_cast<int>(n));
                element = to_string(g);
                v = cantor::verify_claim3(pairs, g);
                return 0;
            });
            params = "claim=3 pairs=" + c.get("cantor", "pairs");
        } else {
            throw ConfigError("cantor.claim", "expected 1, 2 or 3");
        }
        r.rows.push_back(point_row("cantor_claim", params + " element=" + element, "verified", v.holds ? 1.0 : 0.0,
                                   c.seed()));
        r.notes.push_back("element: " + element);
        for (const auto& line : v.transcript) r.notes.push_back(line);
    } else if (mode == "qn") {
        cantor::QnOptions q;
        q.p_letter = c.get_rational("cantor", "p_letter", q.p_letter);
        if (q.p_letter <= 0 || q.p_letter * 4 > 1) throw ConfigError("cantor.p_letter", "must lie in (0, 1/4]");
        q.n_list = length_list(c, "cantor", "n_list", {10, 50, 100});
        q.trials = static_cast<std::size_t>(positive_int(c, "cantor", "trials", 10000));
        q.depth_cap = static_cast<std::size_t>(positive_int(c, "cantor", "depth_cap", 256));
        q.seed = c.seed();
        q.threads = c.threads();
        const auto report = checked("cantor", [&] { return cantor::estimate_qn(q); });
        for (const auto& e : report.estimates)
            r.rows.push_back(estimate_row("cantor_qn",
                                          "p_letter=" + to_string(q.p_letter) + " n=" + std::to_string(e.n) +
                                              " trials=" + std::to_string(e.trials),
                                          "q_hat", e));
        r.rows.push_back(point_row("cantor_qn", "p_letter=" + to_string(q.p_letter), "depth_cap_failures",
                                   static_cast<double>(report.depth_cap_failures), c.seed()));
    } else if (mode == "hit") {
        const auto exact = cantor::hit_probability_exact();
        const auto trials = static_cast<std::size_t>(positive_int(c, "cantor", "trials", 100000));
        const auto horizon = static_cast<std::size_t>(positive_int(c, "cantor", "horizon", 10000));
        const auto mc = cantor::estimate_hit_probability(trials, horizon, c.seed(), c.threads());
        r.rows.push_back(point_row("cantor_hit", "exact=" + to_string(exact.minimal_root), "hit_probability",
                                   to_double(exact.minimal_root), 0));
        r.rows.push_back({"cantor_hit",
                          "trials=" + std::to_string(trials) + " horizon=" + std::to_string(horizon),
                          "hit_probability_mc", mc.p_hat, mc.ci_low, mc.ci_high, c.seed()});
    } else {
        throw ConfigError("cantor.mode", "expected claim, qn or hit, got '" + mode + "'");
    }
}

void run_selftest(const ExperimentConfig& c, RunResult& r) {
    acceptance::SuiteOptions options;
    options.threads = c.threads();
    for (auto id : c.get_int_list("selftest", "only", std::vector<long long>{})) {
        if (id < 1 || id > acceptance::criterion_count) throw ConfigError("selftest.only", "criteria are 1..14");
        options.only.push_back(static_cast<int>(id));
    }
    options.rerun_threads = positive_int(c, "selftest", "rerun_threads", 3);
    for (const auto& cr : acceptance::run_suite(options)) {
        r.acceptance_lines.push_back(acceptance::format_line(cr));
        r.acceptance_passed = r.acceptance_passed && cr.passed;
        r.rows.push_back(point_row("selftest", "criterion=" + std::to_string(cr.id) + " " + cr.name, "passed",
                                   cr.passed ? 1.0 : 0.0, 0));
    }
}

} // namespace

RunResult run(const ExperimentConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    RunResult r;
    r.config = config;
    const auto kind = config.kind();
    config.seed();
    config.threads();
    switch (kind) {
    case ExperimentKind::walk: run_walk(config, r); break;
    case ExperimentKind::drift: run_drift(config, r); break;
    case ExperimentKind::mix: run_mix(config, r); break;
    case ExperimentKind::freeprod: run_freeprod(config, r); break;
    case ExperimentKind::transverse: run_transverse(config, r); break;
    case ExperimentKind::cantor: run_cantor(config, r); break;
    case ExperimentKind::selftest: run_selftest(config, r); break;
    }
    r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string emit(const RunResult& result, OutputFormat format) {
    if (format == OutputFormat::json) return emit_json(result.rows);
    std::vector<std::string> comments{result.config.serialize()};
    comments.insert(comments.end(), result.notes.begin(), result.notes.end());
    comments.push_back("wall_time = " + format_double(result.wall_time));
    if (result.mixing) return emit_mixing_csv(*result.mixing, comments);
    return emit_csv(result.rows, comments);
}

} // namespace hypmix
