#ifndef HYPMIX_ACCEPTANCE_SUITE_HPP
#define HYPMIX_ACCEPTANCE_SUITE_HPP

#include <hypmix/results.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hypmix::acceptance {

struct SuiteOptions {
    int threads = 1;
    /// Criterion ids to run; empty means all of 1..14.
    std::vector<int> only;
    /// Thread count of the rerun used by the determinism criterion.
    int rerun_threads = 3;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    /// Measured values; the determinism criterion compares these across thread counts.
    std::vector<ResultRow> rows;
};

inline constexpr int criterion_count = 14;

std::string criterion_name(int id);
CriterionResult run_criterion(int id, const SuiteOptions& options);
std::vector<CriterionResult> run_suite(const SuiteOptions& options);

/// "[PASS] 3 drift: ..." style line.
std::string format_line(const CriterionResult& r);

} // namespace hypmix::acceptance

#endif
