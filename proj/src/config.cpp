#include <hypmix/config.hpp>

#include <json.hpp>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

namespace hypmix {

namespace {

constexpr std::array<std::pair<ExperimentKind, std::string_view>, 7> kind_names{{
    {ExperimentKind::walk, "walk"},
    {ExperimentKind::drift, "drift"},
    {ExperimentKind::mix, "mix"},
    {ExperimentKind::freeprod, "freeprod"},
    {ExperimentKind::transverse, "transverse"},
    {ExperimentKind::cantor, "cantor"},
    {ExperimentKind::selftest, "selftest"},
}};

std::string field_name(std::string_view section, std::string_view key) {
    return std::string(section) + "." + std::string(key);
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

template <typename T>
std::optional<T> parse_integer(std::string_view text) {
    std::string t = trim(text);
    T value{};
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) return std::nullopt;
    return value;
}

} // namespace

std::string_view to_string(ExperimentKind kind) {
    for (auto& [k, name] : kind_names)
        if (k == kind) return name;
    return "unknown";
}

ExperimentKind parse_kind(std::string_view text) {
    for (auto& [k, name] : kind_names)
        if (name == text) return k;
    throw ConfigError("experiment.kind", "unknown experiment kind '" + std::string(text) +
                                             "' (expected walk, drift, mix, freeprod, transverse, cantor or selftest)");
}

ConfigError::ConfigError(std::string field, const std::string& message)
    : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

ExperimentConfig ExperimentConfig::parse(std::string_view text) {
    boost::property_tree::ptree tree;
    std::istringstream in{std::string(text)};
    try {
        boost::property_tree::read_ini(in, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw ConfigError("config", "line " + std::to_string(e.line()) + ": " + e.message());
    }
    ExperimentConfig c;
    for (const auto& [section, body] : tree) {
        if (body.empty() && !body.data().empty())
            throw ConfigError(section, "key outside any section; put it under a [section] header");
        Section s{section, {}};
        for (const auto& [key, value] : body) s.second.emplace_back(key, value.data());
        c.sections_.push_back(std::move(s));
    }
    return c;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string ExperimentConfig::serialize() const {
    std::string out;
    for (const auto& [section, entries] : sections_) {
        if (!out.empty()) out += '\n';
        out += "[" + section + "]\n";
        for (const auto& [k, v] : entries) out += k + " = " + v + "\n";
    }
    return out;
}

ExperimentKind ExperimentConfig::kind() const { return parse_kind(get("experiment", "kind")); }

std::uint64_t ExperimentConfig::seed() const { return get_u64("experiment", "seed", 1); }

int ExperimentConfig::threads() const {
    long long t = get_int("experiment", "threads", 1);
    if (t < 1 || t > 1024) throw ConfigError("experiment.threads", "expected 1..1024, got " + std::to_string(t));
    return static_cast<int>(t);
}

bool ExperimentConfig::has(std::string_view section, std::string_view key) const {
    for (const auto& [s, entries] : sections_)
        if (s == section)
            for (const auto& [k, v] : entries)
                if (k == key) return true;
    return false;
}

const std::string& ExperimentConfig::get(std::string_view section, std::string_view key) const {
    for (const auto& [s, entries] : sections_)
        if (s == section)
            for (const auto& [k, v] : entries)
                if (k == key) return v;
    throw ConfigError(field_name(section, key), "missing required field");
}

std::string ExperimentConfig::get_or(std::string_view section, std::string_view key, std::string_view fallback) const {
    return has(section, key) ? get(section, key) : std::string(fallback);
}

long long ExperimentConfig::get_int(std::string_view section, std::string_view key,
                                    std::optional<long long> fallback) const {
    if (!has(section, key) && fallback) return *fallback;
    const std::string& raw = get(section, key);
    auto v = parse_integer<long long>(raw);
    if (!v) throw ConfigError(field_name(section, key), "expected an integer, got '" + raw + "'");
    return *v;
}

std::uint64_t ExperimentConfig::get_u64(std::string_view section, std::string_view key,
                                        std::optional<std::uint64_t> fallback) const {
    if (!has(section, key) && fallback) return *fallback;
    const std::string& raw = get(section, key);
    auto v = parse_integer<std::uint64_t>(raw);
    if (!v) throw ConfigError(field_name(section, key), "expected an unsigned 64-bit integer, got '" + raw + "'");
    return *v;
}

Rational ExperimentConfig::get_rational(std::string_view section, std::string_view key,
                                        std::optional<Rational> fallback) const {
    if (!has(section, key) && fallback) return *fallback;
    const std::string& raw = get(section, key);
    try {
        return parse_rational(trim(raw));
    } catch (const std::exception& e) {
        throw ConfigError(field_name(section, key), e.what());
    }
}

std::vector<long long> ExperimentConfig::get_int_list(std::string_view section, std::string_view key,
                                                      std::optional<std::vector<long long>> fallback) const {
    if (!has(section, key) && fallback) return *fallback;
    std::string raw = trim(get(section, key));
    const std::string field = field_name(section, key);
    if (!raw.empty() && raw.front() == '[') {
        try {
            auto j = nlohmann::json::parse(raw);
            return j.get<std::vector<long long>>();
        } catch (const std::exception& e) {
            throw ConfigError(field, std::string("expected a list of integers: ") + e.what());
        }
    }
    std::vector<long long> out;
    std::istringstream in(raw);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto v = parse_integer<long long>(item);
        if (!v) throw ConfigError(field, "expected a comma-separated list of integers, got '" + raw + "'");
        out.push_back(*v);
    }
    if (out.empty()) throw ConfigError(field, "list is empty");
    return out;
}

bool ExperimentConfig::get_bool(std::string_view section, std::string_view key, std::optional<bool> fallback) const {
    if (!has(section, key) && fallback) return *fallback;
    std::string raw = trim(get(section, key));
    if (raw == "true" || raw == "1" || raw == "yes") return true;
    if (raw == "false" || raw == "0" || raw == "no") return false;
    throw ConfigError(field_name(section, key), "expected true or false, got '" + raw + "'");
}

void ExperimentConfig::set(std::string_view section, std::string_view key, std::string value) {
    auto s = std::find_if(sections_.begin(), sections_.end(), [&](const Section& x) { return x.first == section; });
    if (s == sections_.end()) {
        sections_.push_back({std::string(section), {}});
        s = std::prev(sections_.end());
    }
    for (auto& [k, v] : s->second)
        if (k == key) {
            v = std::move(value);
            return;
        }
    s->second.emplace_back(std::string(key), std::move(value));
}

} // namespace hypmix
