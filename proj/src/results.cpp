#include <hypmix/results.hpp>

#include <hypmix/mixing.hpp>

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace hypmix {

namespace {

constexpr const char* row_header = "experiment,params,metric,value,ci_low,ci_high,seed";

std::string quote(std::string_view field) {
    if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    if (quoted) throw std::invalid_argument("unterminated quote on CSV line " + std::to_string(line_no));
    return fields;
}

double parse_double(const std::string& s, std::size_t line_no) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("bad number '" + s + "' on CSV line " + std::to_string(line_no));
    return v;
}

std::string comment_block(const std::vector<std::string>& comments) {
    std::string out;
    for (const auto& c : comments) {
        std::istringstream lines(c);
        std::string line;
        while (std::getline(lines, line)) out += line.empty() ? "#\n" : "# " + line + "\n";
    }
    return out;
}

void require_finite(const ResultRow& r) {
    if (!std::isfinite(r.value) || !std::isfinite(r.ci_low) || !std::isfinite(r.ci_high))
        throw std::invalid_argument("result row " + r.experiment + "/" + r.metric + " has a non-finite value");
}

} // namespace

ResultRow point_row(std::string experiment, std::string params, std::string metric, double value, std::uint64_t seed) {
    return {std::move(experiment), std::move(params), std::move(metric), value, value, value, seed};
}

OutputFormat parse_format(std::string_view text) {
    if (text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown output format '" + std::string(text) + "' (expected csv or json)");
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string emit_csv(const std::vector<ResultRow>& rows, const std::vector<std::string>& comments) {
    std::string out = comment_block(comments);
    out += row_header;
    out += '\n';
    for (const auto& r : rows) {
        require_finite(r);
        out += quote(r.experiment) + ',' + quote(r.params) + ',' + quote(r.metric) + ',' + format_double(r.value) +
               ',' + format_double(r.ci_low) + ',' + format_double(r.ci_high) + ',' + std::to_string(r.seed) + '\n';
    }
    return out;
}

std::string emit_json(const std::vector<ResultRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        require_finite(r);
        nlohmann::ordered_json o;
        o["experiment"] = r.experiment;
        o["params"] = r.params;
        o["metric"] = r.metric;
        o["value"] = r.value;
        o["ci_low"] = r.ci_low;
        o["ci_high"] = r.ci_high;
        o["seed"] = r.seed;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

CsvDocument parse_csv(std::string_view text) {
    CsvDocument doc;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line.front() == '#') {
            doc.comments.push_back(line.size() > 2 ? line.substr(2) : std::string{});
            continue;
        }
        if (line.empty()) continue;
        if (!header_seen) {
            if (line != row_header) throw std::invalid_argument("unexpected CSV header '" + line + "'");
            header_seen = true;
            continue;
        }
        auto f = split_csv_line(line, line_no);
        if (f.size() != 7)
            throw std::invalid_argument("CSV line " + std::to_string(line_no) + " has " + std::to_string(f.size()) +
                                        " fields, expected 7");
        ResultRow r{f[0], f[1], f[2], parse_double(f[3], line_no), parse_double(f[4], line_no),
                    parse_double(f[5], line_no), 0};
        auto [ptr, ec] = std::from_chars(f[6].data(), f[6].data() + f[6].size(), r.seed);
        if (ec != std::errc{} || ptr != f[6].data() + f[6].size())
            throw std::invalid_argument("bad seed on CSV line " + std::to_string(line_no));
        doc.rows.push_back(std::move(r));
    }
    if (!header_seen) throw std::invalid_argument("CSV has no header line");
    return doc;
}

std::string data_section(std::string_view csv) {
    std::string out;
    std::istringstream in{std::string(csv)};
    std::string line;
    while (std::getline(in, line))
        if (line.empty() || line.front() != '#') out += line + '\n';
    return out;
}

std::string emit_mixing_csv(const std::vector<MixingEstimate>& estimates, const std::vector<std::string>& comments) {
    std::string out = comment_block(comments);
    out += "n,trials,successes,p_hat,ci_low,ci_high,seed\n";
    for (const auto& e : estimates)
        out += std::to_string(e.n) + ',' + std::to_string(e.trials) + ',' + std::to_string(e.successes) + ',' +
               format_double(e.p_hat) + ',' + format_double(e.ci_low) + ',' + format_double(e.ci_high) + ',' +
               std::to_string(e.seed) + '\n';
    return out;
}

} // namespace hypmix
