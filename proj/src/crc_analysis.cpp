#include "sclsim/crc_analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace sclsim {

namespace {

void check_analysis_args(const GeneratorPolynomial& poly, std::size_t n_bits, double p) {
    if (poly.degree() > kMaxExactAnalysisDegree) throw DegreeTooLargeError(poly.degree());
    if (n_bits == 0) throw std::domain_error("data length must be at least 1 bit");
    if (!(p >= 0.0 && p <= 0.5))
        throw std::domain_error("bit error probability must lie in [0, 0.5]");
}

// Register successors for feed bit 0 and 1 from each syndrome state.
struct Transitions {
    std::vector<std::uint32_t> next0, next1;

    explicit Transitions(const GeneratorPolynomial& poly) {
        const unsigned r = poly.degree();
        const std::uint64_t mask = poly.register_mask();
        const std::uint64_t g = poly.coefficients();
        const std::size_t states = std::size_t{1} << r;
        next0.resize(states);
        next1.resize(states);
        for (std::size_t s = 0; s < states; ++s) {
            const bool top = (s >> (r - 1)) & 1u;
            const std::uint64_t shifted = (s << 1) & mask;
            next0[s] = static_cast<std::uint32_t>(top ? shifted ^ g : shifted);
            next1[s] = static_cast<std::uint32_t>(top ? shifted : shifted ^ g);
        }
    }
};

// One DP sweep to n_max. The vector `dev` holds only the mass of patterns
// that already contain at least one error bit; `zero_mass` = (1-p)^k is the
// untouched-pattern mass. P_ud(k, p) = dev[0] after step k, with no
// subtraction of nearly-equal quantities.
std::vector<double> dp_sweep(const GeneratorPolynomial& poly, std::size_t n_max, double p,
                             DpDiagnostics* diag) {
    const Transitions tr(poly);
    const std::size_t states = tr.next0.size();
    const double q = 1.0 - p;

    std::vector<double> dev(states, 0.0), scratch(states, 0.0);
    double zero_mass = 1.0;
    std::vector<double> curve;
    curve.reserve(n_max);

    for (std::size_t k = 0; k < n_max; ++k) {
        std::fill(scratch.begin(), scratch.end(), 0.0);
        for (std::size_t s = 0; s < states; ++s) {
            const double m = dev[s];
            if (m == 0.0) continue;
            scratch[tr.next0[s]] += q * m;
            scratch[tr.next1[s]] += p * m;
        }
        // first error bit branching off the all-zero history
        scratch[tr.next1[0]] += p * zero_mass;
        zero_mass *= q;
        dev.swap(scratch);
        curve.push_back(dev[0]);

        if (diag) {
            const double total =
                std::accumulate(dev.begin(), dev.end(), 0.0) + zero_mass;
            diag->max_mass_error = std::max(diag->max_mass_error, std::abs(total - 1.0));
            ++diag->steps;
        }
    }
    return curve;
}

} // namespace

double residual_error_probability(const GeneratorPolynomial& poly, std::size_t n_bits,
                                  double p, DpDiagnostics* diag) {
    check_analysis_args(poly, n_bits, p);
    return dp_sweep(poly, n_bits, p, diag).back();
}

std::vector<double> residual_error_curve(const GeneratorPolynomial& poly,
                                         std::size_t n_max, double p) {
    check_analysis_args(poly, n_max, p);
    return dp_sweep(poly, n_max, p, nullptr);
}

std::vector<std::uint64_t> undetected_weight_spectrum(const GeneratorPolynomial& poly,
                                                      std::size_t n_bits) {
    if (n_bits > 24) throw LengthTooLargeError(n_bits);
    if (poly.degree() > kMaxExactAnalysisDegree) throw DegreeTooLargeError(poly.degree());
    if (n_bits == 0) throw std::domain_error("data length must be at least 1 bit");

    const unsigned r = poly.degree();
    const std::uint64_t g_full = (std::uint64_t{1} << r) | poly.coefficients();

    // Syndrome of the single-bit pattern x^j is x^(j+r) mod g, computed by
    // plain long division.
    std::vector<std::uint64_t> column(n_bits);
    for (std::size_t j = 0; j < n_bits; ++j) {
        std::uint64_t rem = std::uint64_t{1} << (j + r);  // j + r <= 43
        for (std::size_t bitpos = j + r; bitpos + 1 > r; --bitpos)
            if ((rem >> bitpos) & 1u) rem ^= g_full << (bitpos - r);
        column[j] = rem;
    }

    std::vector<std::uint64_t> spectrum(n_bits + 1, 0);
    // Gray-code walk visits every nonzero pattern once; each step flips one
    // bit, so syndrome and weight update incrementally.
    std::uint64_t pattern = 0, syndrome = 0;
    unsigned weight = 0;
    const std::uint64_t count = std::uint64_t{1} << n_bits;
    for (std::uint64_t i = 1; i < count; ++i) {
        const unsigned flip = static_cast<unsigned>(std::countr_zero(i));
        pattern ^= std::uint64_t{1} << flip;
        syndrome ^= column[flip];
        if ((pattern >> flip) & 1u) ++weight; else --weight;
        if (syndrome == 0) ++spectrum[weight];
    }
    return spectrum;
}

double residual_error_probability_bruteforce(const GeneratorPolynomial& poly,
                                             std::size_t n_bits, double p) {
    if (!(p >= 0.0 && p <= 0.5))
        throw std::domain_error("bit error probability must lie in [0, 0.5]");
    const std::vector<std::uint64_t> spectrum = undetected_weight_spectrum(poly, n_bits);
    double total = 0.0;
    for (std::size_t w = 1; w <= n_bits; ++w) {
        if (spectrum[w] == 0) continue;
        total += static_cast<double>(spectrum[w]) *
                 std::pow(p, static_cast<double>(w)) *
                 std::pow(1.0 - p, static_cast<double>(n_bits - w));
    }
    return total;
}

std::vector<double> default_bep_grid() {
    return {1e-4, 1e-3, 1e-2, 0.1, 0.25, 0.5};
}

PropernessReport properness_check(const GeneratorPolynomial& poly, std::size_t n_min,
                                  std::size_t n_max, const std::vector<double>& bep_grid) {
    if (n_min < 1) throw std::domain_error("n_min must be at least 1");
    if (n_max < n_min) throw std::domain_error("n_max must be >= n_min");
    if (bep_grid.empty()) throw std::domain_error("BEP grid must not be empty");
    for (double p : bep_grid)
        if (!(p > 0.0 && p <= 0.5))
            throw std::domain_error("BEP grid values must lie in (0, 0.5]");
    if (poly.degree() > kMaxExactAnalysisDegree) throw DegreeTooLargeError(poly.degree());

    PropernessReport report{poly, n_min, n_max, bep_grid,
                            std::ldexp(1.0, -static_cast<int>(poly.degree()))};
    report.proper = true;
    report.proper_at_standard_bep = true;
    report.worst_rp = -1.0;

    for (double p : bep_grid) {
        const std::vector<double> full = residual_error_curve(poly, n_max, p);
        std::vector<double> window(full.begin() + (n_min - 1), full.end());
        const bool is_standard = p == kStandardBep;
        if (is_standard) report.grid_covers_standard_bep = true;
        for (std::size_t k = 0; k < window.size(); ++k) {
            const double v = window[k];
            if (v > report.conservative_limit) {
                report.proper = false;
                if (is_standard) report.proper_at_standard_bep = false;
            }
            if (v > report.worst_rp) {
                report.worst_rp = v;
                report.worst_n = n_min + k;
                report.worst_p = p;
            }
        }
        report.curves.push_back(std::move(window));
    }
    // Without the standard 1e-2 point the per-BEP verdict is vacuous.
    if (!report.grid_covers_standard_bep) report.proper_at_standard_bep = report.proper;
    return report;
}

} // namespace sclsim
