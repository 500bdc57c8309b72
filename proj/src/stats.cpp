#include "sclsim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sclsim {

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("normal quantile needs p in (0, 1)");
    auto cdf = [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); };
    double lo = -40.0, hi = 40.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (cdf(mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double binomial_cdf(std::uint64_t k, std::uint64_t n, double p) {
    if (p <= 0.0) return 1.0;
    if (p >= 1.0) return k >= n ? 1.0 : 0.0;
    // Sum pmf terms 0..k in the log domain; intended for small k.
    double total = 0.0;
    const double lp = std::log(p), lq = std::log1p(-p);
    for (std::uint64_t i = 0; i <= k && i <= n; ++i) {
        const double lc = std::lgamma(static_cast<double>(n) + 1.0) -
                          std::lgamma(static_cast<double>(i) + 1.0) -
                          std::lgamma(static_cast<double>(n - i) + 1.0);
        total += std::exp(lc + static_cast<double>(i) * lp +
                          static_cast<double>(n - i) * lq);
    }
    return std::min(total, 1.0);
}

namespace {

// Clopper-Pearson bound by bisection on the binomial CDF; feasible because
// we only take this path for k <= 30.
double cp_lower(std::uint64_t k, std::uint64_t n, double alpha) {
    if (k == 0) return 0.0;
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        // P(X >= k | mid) = 1 - CDF(k-1); lower bound solves it = alpha/2
        if (1.0 - binomial_cdf(k - 1, n, mid) < alpha / 2) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

double cp_upper(std::uint64_t k, std::uint64_t n, double alpha) {
    if (k >= n) return 1.0;
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        // P(X <= k | mid) = alpha/2 at the upper bound
        if (binomial_cdf(k, n, mid) > alpha / 2) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

ProportionCi proportion_ci(std::uint64_t successes, std::uint64_t trials, double confidence) {
    if (!(confidence > 0.0 && confidence < 1.0))
        throw std::domain_error("confidence must lie in (0, 1)");
    ProportionCi ci;
    if (trials == 0) {
        ci.method = "none";
        return ci;
    }
    const double n = static_cast<double>(trials);
    ci.estimate = static_cast<double>(successes) / n;
    const double alpha = 1.0 - confidence;

    if (successes == 0) {
        ci.lower = 0.0;
        ci.upper = std::min(3.0 / n, 1.0);
        ci.method = "rule_of_three";
    } else if (successes <= 30) {
        ci.lower = cp_lower(successes, trials, alpha);
        ci.upper = cp_upper(successes, trials, alpha);
        ci.method = "exact_binomial";
    } else {
        const double z = normal_quantile(1.0 - alpha / 2);
        const double half = z * std::sqrt(ci.estimate * (1.0 - ci.estimate) / n);
        ci.lower = std::max(0.0, ci.estimate - half);
        ci.upper = std::min(1.0, ci.estimate + half);
        ci.method = "normal";
    }
    return ci;
}

LatencySummary summarize_latencies(std::vector<std::uint64_t> samples) {
    LatencySummary s;
    s.count = samples.size();
    if (samples.empty()) return s;
    std::sort(samples.begin(), samples.end());
    auto at_quantile = [&](double q) {
        const std::size_t idx = static_cast<std::size_t>(
            std::ceil(q * static_cast<double>(samples.size())));
        return samples[idx == 0 ? 0 : idx - 1];
    };
    s.min_us = samples.front();
    s.median_us = at_quantile(0.5);
    s.p99_us = at_quantile(0.99);
    s.max_us = samples.back();
    return s;
}

} // namespace sclsim
