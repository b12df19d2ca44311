#include <hypmix/walks.hpp>

#include <hypmix/parallel.hpp>
#include <hypmix/stallings.hpp>
#include <hypmix/stats.hpp>

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hypmix {

StepMeasure::StepMeasure(const FreeContext& ctx, std::vector<std::pair<Word, Rational>> entries) : ctx_(ctx) {
    if (entries.empty()) throw std::invalid_argument("step measure needs a nonempty support");
    std::map<Word, Rational> merged;
    for (auto& [w, p] : entries) {
        for (Letter l : w.letters())
            if (!ctx.valid(l)) throw std::invalid_argument("support word " + to_string(w) + " outside the context rank");
        if (p <= 0) throw std::invalid_argument("support weight of " + to_string(w) + " must be positive");
        merged[w] += p;
    }
    Rational total = 0;
    for (auto& [w, p] : merged) total += p;
    if (total != 1) throw std::invalid_argument("step measure weights sum to " + total.str() + ", not 1");
    support_.assign(merged.begin(), merged.end());

    BigInt common = 1;
    for (auto& [w, p] : support_) common = boost::multiprecision::lcm(common, denominator(p));
    if (common > BigInt(std::numeric_limits<std::uint64_t>::max()))
        throw std::invalid_argument("step measure denominators exceed 64 bits");
    for (auto& [w, p] : support_) {
        BigInt scaled = numerator(p) * (common / denominator(p));
        integer_weights_.push_back(scaled.convert_to<std::uint64_t>());
    }
    sampler_ = std::make_shared<const DiscreteSampler>(integer_weights_);
}

Rational StepMeasure::mass(const Word& w) const {
    auto it = std::lower_bound(support_.begin(), support_.end(), w,
                               [](const auto& entry, const Word& key) { return entry.first < key; });
    if (it == support_.end() || it->first != w) return 0;
    return it->second;
}

std::size_t StepMeasure::max_step_length() const {
    std::size_t m = 0;
    for (auto& [w, p] : support_) m = std::max(m, w.size());
    return m;
}

std::size_t StepMeasure::sample_index(SplitMix64& rng) const {
    return (*sampler_)(rng);
}

Word StepMeasure::sample(SplitMix64& rng) const { return support_[sample_index(rng)].first; }

StepMeasure uniform_on(const FreeContext& ctx, std::span<const Word> set, std::optional<Rational> lazy) {
    if (set.empty()) throw std::invalid_argument("uniform measure on an empty set");
    std::vector<Word> words(set.begin(), set.end());
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    for (const Word& w : words)
        if (w.empty())
            throw std::invalid_argument("uniform measure support contains the identity; use the laziness parameter");
    Rational rest = 1;
    std::vector<std::pair<Word, Rational>> entries;
    if (lazy) {
        if (*lazy < 0 || *lazy >= 1) throw std::invalid_argument("laziness must lie in [0, 1)");
        if (*lazy > 0) entries.emplace_back(Word{}, *lazy);
        rest -= *lazy;
    }
    const Rational each = rest / static_cast<long long>(words.size());
    for (const Word& w : words) entries.emplace_back(w, each);
    return StepMeasure(ctx, std::move(entries));
}

StepMeasure uniform_generators(const FreeContext& ctx) {
    std::vector<Word> letters;
    for (int r = 0; r < ctx.alphabet_size(); ++r) letters.push_back(Word::letter(letter_from_rank(r)));
    return uniform_on(ctx, letters);
}

StepMeasure point_mass(const FreeContext& ctx, const Word& w) { return StepMeasure(ctx, {{w, Rational(1)}}); }

std::string PermissibilityReport::describe() const {
    std::ostringstream os;
    auto flag = [](bool b) { return b ? "yes" : "no"; };
    os << "finite=" << flag(finite) << " symmetric=" << flag(symmetric) << " generating=" << flag(generating)
       << " non_elementary=" << flag(non_elementary) << " elementary_subgroups_agree=" << flag(elementary_subgroups_agree)
       << " (automatic in F_k)";
    return os.str();
}

PermissibilityReport validate_permissible(const StepMeasure& mu) {
    PermissibilityReport r;
    r.symmetric = true;
    std::vector<Word> gens;
    for (auto& [w, p] : mu.support()) {
        if (mu.mass(inverse(w)) != p) r.symmetric = false;
        if (!w.empty()) gens.push_back(w);
    }
    auto folded = SubgroupAutomaton::from_generators(mu.context(), gens);
    auto index = folded.index();
    r.generating = index && *index == 1;
    r.non_elementary = folded.rank() >= 2;
    return r;
}

Distribution convolve(const StepMeasure& mu, int n, ConvolutionCap cap) {
    if (n < 0) throw std::invalid_argument("convolution power must be nonnegative");
    if (n > cap.max_steps || mu.support().size() > cap.max_support)
        throw std::length_error("exact convolution cap exceeded: n=" + std::to_string(n) + " (cap " +
                                std::to_string(cap.max_steps) + "), |support|=" + std::to_string(mu.support().size()) +
                                " (cap " + std::to_string(cap.max_support) + ")");
    Distribution current{{Word{}, Rational(1)}};
    for (int step = 0; step < n; ++step) {
        Distribution next;
        for (auto& [w, p] : current)
            for (auto& [g, q] : mu.support()) next[multiply(w, g)] += p * q;
        current = std::move(next);
    }
    return current;
}

namespace {

void append_reduced(std::vector<Letter>& position, const Word& step) {
    for (Letter l : step.letters()) {
        if (!position.empty() && position.back() == -l)
            position.pop_back();
        else
            position.push_back(l);
    }
}

} // namespace

Trajectory sample_walk(const StepMeasure& mu, int n, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("walk length must be nonnegative");
    SplitMix64 rng(seed);
    Trajectory t;
    t.seed = seed;
    t.positions.push_back(Word{});
    for (int i = 0; i < n; ++i) {
        Word g = mu.sample(rng);
        t.positions.push_back(multiply(t.positions.back(), g));
        t.increments.push_back(std::move(g));
    }
    return t;
}

Word sample_endpoint(const StepMeasure& mu, int n, SplitMix64& rng) {
    if (n < 0) throw std::invalid_argument("walk length must be nonnegative");
    std::vector<Letter> position;
    for (int i = 0; i < n; ++i) append_reduced(position, mu.sample(rng));
    return Word::reduce(position);
}

DriftEstimate drift_estimate(const StepMeasure& mu, int n, std::size_t trials, std::uint64_t seed, RunOptions options) {
    if (trials == 0) throw std::invalid_argument("drift estimate needs at least one trial");
    if (n <= 0) throw std::invalid_argument("drift estimate needs n >= 1");
    if (!options.allow_non_permissible) {
        auto report = validate_permissible(mu);
        if (!report.permissible()) throw std::invalid_argument("measure is not permissible: " + report.describe());
    }
    std::vector<double> speeds(trials);
    parallel_for(trials, options.threads, [&](std::size_t i) {
        SplitMix64 rng(substream_seed(seed, i));
        std::vector<Letter> position;
        for (int step = 0; step < n; ++step) append_reduced(position, mu.sample(rng));
        speeds[i] = static_cast<double>(position.size()) / static_cast<double>(n);
    });
    auto m = estimate_mean(speeds);
    return {m.mean, m.half_width, trials, n, seed};
}

StepMeasure parse_measure(const FreeContext& ctx, std::string_view spec) {
    std::string s(spec);
    auto trim = [](std::string x) {
        auto b = x.find_first_not_of(" \t\r\n");
        auto e = x.find_last_not_of(" \t\r\n");
        return b == std::string::npos ? std::string{} : x.substr(b, e - b + 1);
    };
    s = trim(s);
    if (s.empty()) throw std::invalid_argument("empty measure specification");
    if (s.rfind("uniform", 0) == 0) {
        s = trim(s.substr(7));
        if (!s.empty() && (s[0] == '=' || s[0] == ':')) s = trim(s.substr(1));
        if (s.empty()) return uniform_generators(ctx);
    }
    if (s[0] != '[') {
        auto words = ctx.parse_list(s);
        return uniform_on(ctx, words);
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(s);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("malformed measure specification: ") + e.what());
    }
    if (!j.is_array() || j.empty()) throw std::invalid_argument("measure specification must be a nonempty list");
    if (j.front().is_string()) {
        std::vector<Word> words;
        for (auto& item : j) {
            if (!item.is_string()) throw std::invalid_argument("uniform measure list must contain only words");
            words.push_back(ctx.parse(item.get<std::string>()));
        }
        return uniform_on(ctx, words);
    }
    std::vector<std::pair<Word, Rational>> entries;
    for (auto& item : j) {
        if (!item.is_array() || item.size() != 3 || !item[0].is_string() || !item[1].is_number_integer() ||
            !item[2].is_number_integer())
            throw std::invalid_argument("measure entries must be [word, numerator, denominator]");
        long long num = item[1].get<long long>();
        long long den = item[2].get<long long>();
        if (den <= 0) throw std::invalid_argument("measure entry denominator must be positive");
        entries.emplace_back(ctx.parse(item[0].get<std::string>()), Rational(num, den));
    }
    return StepMeasure(ctx, std::move(entries));
}

} // namespace hypmix
