// hypmix: command-line front end for the experiment harness.
//
//   hypmix <subcommand> [--config <path>] [--out <path>] [--format csv|json] [--threads N]
//
// Subcommand flags override the matching config keys. Exit status: 0 on
// success, 1 on a validation or runtime error, 2 when selftest finds a failing
// acceptance criterion.

#include <hypmix/harness.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>

namespace {

/// Flag value -> config key, applied after the config file is read.
struct Overrides {
    std::map<std::pair<std::string, std::string>, std::string> values;
    std::vector<std::string> raw; ///< --set section.key=value

    void bind(CLI::App* app, const std::string& flag, const std::string& section, const std::string& key,
              const std::string& help) {
        app->add_option_function<std::string>(
            flag, [this, section, key](const std::string& v) { values[{section, key}] = v; }, help);
    }
};

int fail(const std::string& message) {
    std::cerr << "hypmix: " << message << "\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subgroup mixing experiments on free groups"};
    app.require_subcommand(1);

    std::string config_path, out_path, format = "csv", certificate_path;
    std::optional<int> threads;
    std::optional<std::uint64_t> seed;
    bool qn = false;
    Overrides ov;

    const std::map<std::string, std::string> descriptions{
        {"walk", "sample one walk trajectory"},
        {"drift", "estimate the drift of a random walk"},
        {"mix", "estimate the mixing lower bound for a pair of subgroups"},
        {"freeprod", "free-product absorption and random subgroups"},
        {"transverse", "construct and certify a transverse element"},
        {"cantor", "boundary action claims and the non-mixing signature"},
        {"selftest", "run the acceptance suite"},
    };
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, help] : descriptions) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--config", config_path, "experiment config file (INI)")->check(CLI::ExistingFile);
        sub->add_option("--out", out_path, "output file (default: stdout)");
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--threads", threads, "worker threads (results do not depend on it)");
        sub->add_option("--seed", seed, "master seed");
        sub->add_option("--set", ov.raw, "override any config key: section.key=value");
        subs[name] = sub;
    }
    for (const std::string s : {"walk", "drift"}) {
        ov.bind(subs[s], "--k", s, "k", "rank of the free group");
        ov.bind(subs[s], "--n", s, "n", "walk length");
        ov.bind(subs[s], "--measure", s, "measure", "step measure");
    }
    ov.bind(subs["drift"], "--trials", "drift", "trials", "number of walks");

    auto* mix = subs["mix"];
    ov.bind(mix, "--H", "mix", "H", "generators of H, comma separated");
    ov.bind(mix, "--K", "mix", "K", "generators of K, comma separated");
    ov.bind(mix, "--window-radius", "mix", "window_radius", "radius of the trace window");
    ov.bind(mix, "--measure", "mix", "measure", "step measure");
    ov.bind(mix, "--n-list", "mix", "n_list", "walk lengths, e.g. 10,20,40");
    ov.bind(mix, "--trials", "mix", "trials", "trials per walk length");

    auto* fp = subs["freeprod"];
    ov.bind(fp, "--H", "freeprod", "H", "generators of H");
    ov.bind(fp, "--measure", "freeprod", "measure", "step measure");
    ov.bind(fp, "--n-list", "freeprod", "n_list", "walk lengths");
    ov.bind(fp, "--trials", "freeprod", "trials", "trials per walk length");
    ov.bind(fp, "--mode", "freeprod", "mode", "absorption or random_subgroup");

    auto* tr = subs["transverse"];
    ov.bind(tr, "--subgroups", "transverse", "subgroups", "file with one subgroup per line");
    ov.bind(tr, "--g", "transverse", "g", "loxodromic element");
    tr->add_option("--emit-certificate", certificate_path, "write the certificate to this path");

    auto* ca = subs["cantor"];
    ca->add_option_function<std::string>(
        "--claim", [&](const std::string& v) { ov.values[{"cantor", "claim"}] = v; ov.values[{"cantor", "mode"}] = "claim"; },
        "claim constructor to run")->check(CLI::IsMember({"1", "2", "3"}));
    ov.bind(ca, "--u", "cantor", "u", "cone label for claims 1 and 2");
    ov.bind(ca, "--pairs", "cantor", "pairs", "u1:v1,u2:v2 for claim 3");
    ca->add_flag("--qn", qn, "estimate q_n");
    ov.bind(ca, "--p-letter", "cantor", "p_letter", "mass of each F_2 letter");
    ov.bind(ca, "--n-list", "cantor", "n_list", "walk lengths");
    ov.bind(ca, "--trials", "cantor", "trials", "trials per walk length");
    ov.bind(ca, "--depth-cap", "cantor", "depth_cap", "largest cone depth followed");

    auto* st = subs["selftest"];
    ov.bind(st, "--only", "selftest", "only", "criteria to run, e.g. 3,8");
    ov.bind(st, "--rerun-threads", "selftest", "rerun_threads", "thread count of the determinism rerun");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        auto config = config_path.empty() ? hypmix::ExperimentConfig{} : hypmix::ExperimentConfig::load(config_path);
        if (config.has("experiment", "kind") && config.get("experiment", "kind") != name)
            throw hypmix::ConfigError("experiment.kind", "config is for '" + config.get("experiment", "kind") +
                                                             "' but the subcommand is '" + name + "'");
        config.set("experiment", "kind", name);
        if (threads) config.set("experiment", "threads", std::to_string(*threads));
        if (seed) config.set("experiment", "seed", std::to_string(*seed));
        if (qn) config.set("cantor", "mode", "qn");
        for (const auto& [where, value] : ov.values) config.set(where.first, where.second, value);
        for (const auto& item : ov.raw) {
            const auto eq = item.find('=');
            const auto dot = item.find('.');
            if (eq == std::string::npos || dot == std::string::npos || dot > eq)
                throw hypmix::ConfigError("--set", "expected section.key=value, got '" + item + "'");
            config.set(item.substr(0, dot), item.substr(dot + 1, eq - dot - 1), item.substr(eq + 1));
        }
        if (!certificate_path.empty()) config.set("transverse", "emit_certificate", certificate_path);

        const auto result = hypmix::run(config);
        const auto text = hypmix::emit(result, hypmix::parse_format(format));
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out || !(out << text)) return fail("cannot write " + out_path);
        }
        if (config.has("transverse", "emit_certificate")) {
            const auto& path = config.get("transverse", "emit_certificate");
            std::ofstream cert(path, std::ios::binary);
            if (!cert || !(cert << result.certificate)) return fail("cannot write " + path);
        }
        for (const auto& line : result.acceptance_lines) std::cerr << line << "\n";
        return result.acceptance_passed ? 0 : 2;
    } catch (const std::exception& e) {
        return fail(e.what());
    }
}
