// Python bindings. Words cross the boundary as strings ("abA", "1" for the
// identity), subgroups as Subgroup objects, rationals as fractions.Fraction.

#include <hypmix/cantor.hpp>
#include <hypmix/harness.hpp>
#include <hypmix/mixing.hpp>
#include <hypmix/stallings.hpp>
#include <hypmix/transverse.hpp>
#include <hypmix/walks.hpp>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hypmix;

namespace {

py::object fraction(const Rational& r) { return py::module_::import("fractions").attr("Fraction")(to_string(r)); }

std::string word_text(const Word& w) { return w.empty() ? "1" : to_string(w); }

std::vector<std::string> word_texts(const std::vector<Word>& ws) {
    std::vector<std::string> out;
    out.reserve(ws.size());
    for (const auto& w : ws) out.push_back(word_text(w));
    return out;
}

std::vector<Word> parse_words(const FreeContext& ctx, const std::vector<std::string>& texts) {
    std::vector<Word> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(ctx.parse(t));
    return out;
}

SubgroupAutomaton make_subgroup(const FreeContext& ctx, const std::vector<std::string>& gens) {
    return SubgroupAutomaton::from_generators(ctx, parse_words(ctx, gens));
}

py::dict estimate_dict(const MixingEstimate& e) {
    py::dict d;
    d["n"] = e.n;
    d["trials"] = e.trials;
    d["successes"] = e.successes;
    d["p_hat"] = e.p_hat;
    d["ci_low"] = e.ci_low;
    d["ci_high"] = e.ci_high;
    d["seed"] = e.seed;
    return d;
}

py::dict claim_dict(const cantor::GElement& g, const cantor::ClaimVerification& v) {
    py::dict d;
    d["element"] = cantor::to_string(g);
    d["holds"] = v.holds;
    d["transcript"] = v.transcript;
    return d;
}

cantor::ConeLabel label(const std::string& s) { return cantor::parse_label(s); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Free groups, Stallings automata and subgroup mixing experiments";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<SearchCapExceeded>(m, "SearchCapExceeded", PyExc_RuntimeError);

    py::class_<FreeContext>(m, "FreeGroup")
        .def(py::init<int>(), py::arg("rank"))
        .def_property_readonly("rank", &FreeContext::rank)
        .def("reduce", [](const FreeContext& c, const std::string& w) { return word_text(c.parse(w)); })
        .def("multiply",
             [](const FreeContext& c, const std::vector<std::string>& factors) {
                 Word out;
                 for (const auto& f : factors) out = multiply(out, c.parse(f));
                 return word_text(out);
             })
        .def("inverse", [](const FreeContext& c, const std::string& w) { return word_text(inverse(c.parse(w))); })
        .def("power", [](const FreeContext& c, const std::string& w, long long m) { return word_text(power(c.parse(w), m)); })
        .def("distance",
             [](const FreeContext& c, const std::string& u, const std::string& v) { return distance(c.parse(u), c.parse(v)); })
        .def("length", [](const FreeContext& c, const std::string& w) { return c.parse(w).size(); })
        .def("ball", [](const FreeContext& c, int r) { return word_texts(c.ball(r)); }, py::arg("radius"))
        .def("sphere", [](const FreeContext& c, int r) { return word_texts(c.sphere(r)); }, py::arg("radius"))
        .def("cyclic_reduce",
             [](const FreeContext& c, const std::string& w) {
                 const auto d = cyclic_reduce(c.parse(w));
                 return py::make_tuple(word_text(d.core), word_text(d.conjugator));
             },
             "(core, conjugator) with w = conjugator core conjugator^-1")
        .def("gromov_product",
             [](const FreeContext& c, const std::string& x, const std::string& y, const std::string& s) {
                 return gromov_product(c.parse(x), c.parse(y), c.parse(s)).twice() / 2.0;
             })
        .def("__repr__", [](const FreeContext& c) { return "FreeGroup(" + std::to_string(c.rank()) + ")"; });

    py::class_<SubgroupAutomaton>(m, "Subgroup")
        .def(py::init(&make_subgroup), py::arg("group"), py::arg("generators"))
        .def_static("parse", [](const FreeContext& c, const std::string& text) { return SubgroupAutomaton::parse(c, text); })
        .def_property_readonly("group", &SubgroupAutomaton::context)
        .def_property_readonly("rank", &SubgroupAutomaton::rank)
        .def_property_readonly("index", &SubgroupAutomaton::index, "None when the index is infinite")
        .def_property_readonly("states", &SubgroupAutomaton::state_count)
        .def("__contains__", [](const SubgroupAutomaton& h, const std::string& w) { return h.contains(h.context().parse(w)); })
        .def("generators", [](const SubgroupAutomaton& h) { return word_texts(h.generators()); })
        .def("serialize", &SubgroupAutomaton::serialize)
        .def("conjugate",
             [](const SubgroupAutomaton& h, const std::string& g) { return conjugate(h, h.context().parse(g)); },
             "g H g^-1")
        .def("intersect", [](const SubgroupAutomaton& a, const SubgroupAutomaton& b) { return intersect(a, b); })
        .def("join", [](const SubgroupAutomaton& a, const SubgroupAutomaton& b) { return join(a, b); })
        .def("distance_to_orbit",
             [](const SubgroupAutomaton& h, const std::string& w) { return distance_to_orbit(h, h.context().parse(w)); })
        .def(py::self == py::self)
        .def("__repr__", [](const SubgroupAutomaton& h) {
            std::string gens;
            for (const auto& g : h.generators()) gens += (gens.empty() ? "" : ", ") + word_text(g);
            return "Subgroup<" + gens + ">";
        });

    m.def(
        "power_conjugate_into",
        [](const SubgroupAutomaton& h, const std::string& f) -> py::object {
            const auto p = power_conjugate_into(h, h.context().parse(f));
            if (!p) return py::none();
            return py::make_tuple(p->exponent, word_text(p->conjugator));
        },
        "(m, v) with f^m in v H v^-1, or None when f is transverse to H");
    m.def("is_transverse", [](const SubgroupAutomaton& h, const std::string& f) { return is_transverse(h, h.context().parse(f)); });
    m.def("transversality_certificate", [](const SubgroupAutomaton& h, const std::string& f) {
        return certify_transversality(h, h.context().parse(f)).to_text();
    });
    m.def(
        "overlap_count",
        [](const SubgroupAutomaton& h, const std::string& f, const std::string& v, std::size_t e, long long lo,
           long long hi) {
            return overlap_count(h, h.context().parse(f), h.context().parse(v), e, ExponentRange{lo, hi});
        },
        py::arg("H"), py::arg("f"), py::arg("v"), py::arg("E"), py::arg("lo"), py::arg("hi"));
    m.def(
        "construct_transverse",
        [](const std::vector<SubgroupAutomaton>& targets, const std::string& g, long long max_exponent) {
            if (targets.empty()) throw std::invalid_argument("construct_transverse needs at least one target");
            const auto r = construct_transverse(targets, targets.front().context().parse(g), {max_exponent, 8});
            py::dict d;
            d["f"] = word_text(r.f);
            d["shift"] = word_text(r.shift);
            d["exponent"] = r.exponent;
            return d;
        },
        py::arg("targets"), py::arg("g"), py::arg("max_exponent") = 64);

    m.def(
        "sample_walk",
        [](const FreeContext& c, int n, std::uint64_t seed, const std::string& measure) {
            return word_texts(sample_walk(parse_measure(c, measure), n, seed).positions);
        },
        py::arg("group"), py::arg("n"), py::arg("seed"), py::arg("measure") = "uniform");
    m.def(
        "drift",
        [](const FreeContext& c, int n, std::size_t trials, std::uint64_t seed, const std::string& measure,
           int threads) {
            const auto d = drift_estimate(parse_measure(c, measure), n, trials, seed, {threads, false});
            return py::make_tuple(d.mean, d.ci_low(), d.ci_high());
        },
        py::arg("group"), py::arg("n"), py::arg("trials"), py::arg("seed"), py::arg("measure") = "uniform",
        py::arg("threads") = 1, "(mean of |w_n|/n, ci_low, ci_high)");

    m.def(
        "estimate_mixing",
        [](const SubgroupAutomaton& h, const SubgroupAutomaton& k, int window_radius, int n, std::size_t trials,
           std::uint64_t seed, const std::string& measure, int threads) {
            const auto& c = h.context();
            return estimate_dict(
                estimate_mixing(h, k, c.ball(window_radius), parse_measure(c, measure), n, trials, seed, {threads, false}));
        },
        py::arg("H"), py::arg("K"), py::arg("window_radius"), py::arg("n"), py::arg("trials"), py::arg("seed"),
        py::arg("measure") = "uniform", py::arg("threads") = 1,
        "Certified lower bound on the probability that w_n lies in N(U, V)");
    m.def(
        "free_product_experiment",
        [](const SubgroupAutomaton& h, int n, std::size_t trials, std::uint64_t seed, const std::string& measure) {
            return estimate_dict(free_product_experiment(h, parse_measure(h.context(), measure), n, trials, seed));
        },
        py::arg("H"), py::arg("n"), py::arg("trials"), py::arg("seed"), py::arg("measure") = "uniform");

    auto c = m.def_submodule("cantor", "The F_2 * S_18 action on the boundary of the F_3 tree");
    c.def("order_cones", [](const std::string& u, int n) {
        std::vector<std::string> out;
        for (const auto& w : cantor::order_cones(label(u), n)) out.push_back(cantor::format_label(w));
        return out;
    });
    c.def("xi", [](const std::string& u, const std::string& v, const std::string& w) {
        return cantor::format_label(cantor::xi(label(u), label(v), label(w)));
    });
    c.def("apply", [](const std::string& g, const std::string& w) -> py::object {
        const auto r = cantor::apply(cantor::parse_gelement(g), label(w));
        if (!r) return py::none();
        return py::str(cantor::format_label(*r));
    });
    c.def("claim1", [](const std::string& u) {
        const auto f = cantor::claim1_f(label(u));
        return claim_dict(f, cantor::verify_claim1(label(u), f));
    });
    c.def(
        "claim2",
        [](const std::string& u, std::size_t samples, std::uint64_t seed) {
            const auto g = cantor::claim2_g(label(u));
            return claim_dict(g, cantor::verify_claim2(label(u), g, samples, seed));
        },
        py::arg("u"), py::arg("samples") = 100, py::arg("seed") = 1);
    c.def("claim3", [](const std::vector<std::pair<std::string, std::string>>& pairs) {
        if (pairs.empty()) throw std::invalid_argument("claim 3 needs at least one pair");
        std::vector<std::pair<cantor::ConeLabel, cantor::ConeLabel>> ps;
        for (const auto& [u, v] : pairs) ps.emplace_back(label(u), label(v));
        const auto g = cantor::claim3_witness(ps, static_cast<int>(ps.front().first.size()));
        return claim_dict(g, cantor::verify_claim3(ps, g));
    });
    c.def("hit_probability_exact", [] {
        const auto h = cantor::hit_probability_exact();
        return py::make_tuple(fraction(h.minimal_root), fraction(h.other_root));
    });
    c.def(
        "estimate_qn",
        [](const std::string& p_letter, const std::vector<int>& n_list, std::size_t trials, std::uint64_t seed,
           int threads) {
            cantor::QnOptions o;
            o.p_letter = parse_rational(p_letter);
            o.n_list = n_list;
            o.trials = trials;
            o.seed = seed;
            o.threads = threads;
            const auto r = cantor::estimate_qn(o);
            py::list out;
            for (const auto& e : r.estimates) out.append(estimate_dict(e));
            return out;
        },
        py::arg("p_letter") = "1/8", py::arg("n_list") = std::vector<int>{10, 50, 100}, py::arg("trials") = 10000,
        py::arg("seed") = 1, py::arg("threads") = 1);

    m.def(
        "run_config",
        [](const std::string& text, const std::string& format) {
            py::gil_scoped_release release;
            return emit(run(ExperimentConfig::parse(text)), parse_format(format));
        },
        py::arg("text"), py::arg("format") = "csv", "Runs an INI experiment config and returns CSV or JSON text");
}
