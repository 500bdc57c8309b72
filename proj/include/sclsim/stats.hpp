#ifndef SCLSIM_STATS_HPP
#define SCLSIM_STATS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sclsim {

/// Two-sided confidence interval on a binomial proportion k/n.
/// Method selection: normal approximation above 30 events, exact
/// (Clopper-Pearson) below, one-sided rule of three for zero events.
struct ProportionCi {
    double estimate = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    std::string method;  // "normal" | "exact_binomial" | "rule_of_three" | "none"
};

ProportionCi proportion_ci(std::uint64_t successes, std::uint64_t trials,
                           double confidence = 0.95);

/// Standard normal quantile (inverse CDF), by bisection on erfc.
double normal_quantile(double p);

/// Regularized binomial CDF P(X <= k) for small k (direct stable summation).
double binomial_cdf(std::uint64_t k, std::uint64_t n, double p);

struct LatencySummary {
    std::uint64_t count = 0;
    std::uint64_t min_us = 0;
    std::uint64_t median_us = 0;
    std::uint64_t p99_us = 0;
    std::uint64_t max_us = 0;
};

/// Order statistics of a latency sample; percentile index is
/// ceil(q * count) - 1 on the sorted values. Consumes the input vector.
LatencySummary summarize_latencies(std::vector<std::uint64_t> samples);

} // namespace sclsim

#endif
