#ifndef HYPMIX_HARNESS_HPP
#define HYPMIX_HARNESS_HPP

#include <hypmix/config.hpp>
#include <hypmix/mixing.hpp>
#include <hypmix/results.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hypmix {

struct RunResult {
    ExperimentConfig config;
    std::vector<ResultRow> rows;
    /// Extra header lines (claim transcripts, certificates, notes).
    std::vector<std::string> notes;
    /// Set for kind = mix; the CSV then uses the mixing columns.
    std::optional<std::vector<MixingEstimate>> mixing;
    /// One "[PASS] ..." line per criterion for kind = selftest.
    std::vector<std::string> acceptance_lines;
    bool acceptance_passed = true;
    /// Transverse certificate text, written when transverse.emit_certificate is set.
    std::string certificate;
    double wall_time = 0.0;
};

/// Validates the config and dispatches to the owning module. Validation
/// failures raise ConfigError naming the offending field.
RunResult run(const ExperimentConfig& config);

/// CSV carries the config and wall time as '#' comment lines ahead of the data;
/// JSON is the bare array of rows.
std::string emit(const RunResult& result, OutputFormat format);

} // namespace hypmix

#endif
