#include <hypmix/stats.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hypmix {

double ProportionEstimate::sigma() const {
    if (trials == 0) return 0.0;
    return std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(trials));
}

ProportionEstimate estimate_proportion(std::size_t successes, std::size_t trials) {
    if (trials == 0) throw std::invalid_argument("proportion estimate needs at least one trial");
    if (successes > trials) throw std::invalid_argument("successes exceed trials");
    ProportionEstimate e;
    e.trials = trials;
    e.successes = successes;
    const double n = static_cast<double>(trials);
    e.p_hat = static_cast<double>(successes) / n;
    const std::size_t failures = trials - successes;
    if (std::min(successes, failures) < 10) {
        const double z2 = z95 * z95;
        const double centre = (e.p_hat + z2 / (2 * n)) / (1 + z2 / n);
        const double half = z95 * std::sqrt(e.p_hat * (1 - e.p_hat) / n + z2 / (4 * n * n)) / (1 + z2 / n);
        e.ci_low = std::max(0.0, centre - half);
        e.ci_high = std::min(1.0, centre + half);
        e.method = "wilson";
    } else {
        const double half = z95 * e.sigma();
        e.ci_low = std::max(0.0, e.p_hat - half);
        e.ci_high = std::min(1.0, e.p_hat + half);
        e.method = "wald";
    }
    return e;
}

MeanEstimate estimate_mean(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("mean estimate needs at least one sample");
    MeanEstimate e;
    e.samples = values.size();
    double sum = 0.0;
    for (double v : values) sum += v;
    e.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - e.mean) * (v - e.mean);
        e.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
        e.half_width = z95 * e.stddev / std::sqrt(static_cast<double>(values.size()));
    }
    return e;
}

} // namespace hypmix
