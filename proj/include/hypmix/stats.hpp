#ifndef HYPMIX_STATS_HPP
#define HYPMIX_STATS_HPP

#include <cstddef>
#include <span>
#include <string>

namespace hypmix {

inline constexpr double z95 = 1.959963984540054;

struct ProportionEstimate {
    std::size_t trials = 0;
    std::size_t successes = 0;
    double p_hat = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::string method; ///< "wald" or "wilson"

    /// Binomial standard error sqrt(p(1-p)/n) at the point estimate.
    double sigma() const;
};

/// 95% interval: normal approximation, Wilson score when fewer than 10
/// successes or failures were observed.
ProportionEstimate estimate_proportion(std::size_t successes, std::size_t trials);

struct MeanEstimate {
    std::size_t samples = 0;
    double mean = 0.0;
    double stddev = 0.0;
    double half_width = 0.0; ///< 95% normal-approximation half width
};

/// Summation runs in index order, so equal inputs give bit-identical output.
MeanEstimate estimate_mean(std::span<const double> values);

} // namespace hypmix

#endif
