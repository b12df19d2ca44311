#ifndef HYPMIX_RESULTS_HPP
#define HYPMIX_RESULTS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hypmix {

struct MixingEstimate;

/// One measured quantity. Rows without an interval carry ci_low = ci_high = value.
struct ResultRow {
    std::string experiment;
    std::string params;
    std::string metric;
    double value = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t seed = 0;

    friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

ResultRow point_row(std::string experiment, std::string params, std::string metric, double value, std::uint64_t seed);

enum class OutputFormat { csv, json };
OutputFormat parse_format(std::string_view text);

/// Lines starting with '#' are comments; everything else is data.
struct CsvDocument {
    std::vector<std::string> comments; ///< without the leading "# "
    std::vector<ResultRow> rows;
};

/// Header line plus one line per row; doubles use %.17g so parsing restores them exactly.
std::string emit_csv(const std::vector<ResultRow>& rows, const std::vector<std::string>& comments = {});
std::string emit_json(const std::vector<ResultRow>& rows);
CsvDocument parse_csv(std::string_view text);
/// The CSV with every comment line removed.
std::string data_section(std::string_view csv);

/// Columns n, trials, successes, p_hat, ci_low, ci_high, seed.
std::string emit_mixing_csv(const std::vector<MixingEstimate>& estimates, const std::vector<std::string>& comments = {});

std::string format_double(double v);

} // namespace hypmix

#endif
