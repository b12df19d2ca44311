#ifndef HYPMIX_CONFIG_HPP
#define HYPMIX_CONFIG_HPP

#include <hypmix/rational.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hypmix {

enum class ExperimentKind { walk, drift, mix, freeprod, transverse, cantor, selftest };

std::string_view to_string(ExperimentKind kind);
ExperimentKind parse_kind(std::string_view text);

/// Validation failure tied to a config field, e.g. "mix.trials".
class ConfigError : public std::invalid_argument {
public:
    ConfigError(std::string field, const std::string& message);
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/**
 * INI-style experiment description:
 *
 *   [experiment]
 *   kind = mix
 *   seed = 7
 *   threads = 4
 *
 *   [mix]
 *   H = a
 *   n_list = 10, 20, 40
 *
 * Sections and keys keep their file order, so parse(serialize(c)) == c.
 * Comment lines start with ';'.
 */
class ExperimentConfig {
public:
    using Section = std::pair<std::string, std::vector<std::pair<std::string, std::string>>>;

    ExperimentConfig() = default;
    static ExperimentConfig parse(std::string_view text);
    static ExperimentConfig load(const std::string& path);
    std::string serialize() const;

    ExperimentKind kind() const;
    std::uint64_t seed() const;
    int threads() const;

    bool has(std::string_view section, std::string_view key) const;
    /// Raw value; throws ConfigError naming section.key when missing.
    const std::string& get(std::string_view section, std::string_view key) const;
    std::string get_or(std::string_view section, std::string_view key, std::string_view fallback) const;
    long long get_int(std::string_view section, std::string_view key, std::optional<long long> fallback = {}) const;
    std::uint64_t get_u64(std::string_view section, std::string_view key,
                          std::optional<std::uint64_t> fallback = {}) const;
    Rational get_rational(std::string_view section, std::string_view key,
                          std::optional<Rational> fallback = {}) const;
    /// "10, 20, 40" or "[10, 20, 40]".
    std::vector<long long> get_int_list(std::string_view section, std::string_view key,
                                        std::optional<std::vector<long long>> fallback = {}) const;
    bool get_bool(std::string_view section, std::string_view key, std::optional<bool> fallback = {}) const;

    void set(std::string_view section, std::string_view key, std::string value);
    const std::vector<Section>& sections() const { return sections_; }

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;

private:
    std::vector<Section> sections_;
};

} // namespace hypmix

#endif
