#ifndef SCLSIM_CRC_ANALYSIS_HPP
#define SCLSIM_CRC_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sclsim/crc.hpp"

namespace sclsim {

/// Exact residual-error analysis is bounded by the 2^r syndrome state space.
inline constexpr unsigned kMaxExactAnalysisDegree = 20;

/// Raised when a polynomial degree exceeds the exact-analysis cap; callers
/// should fall back to Monte Carlo estimation (`sim run`).
class DegreeTooLargeError : public std::domain_error {
public:
    explicit DegreeTooLargeError(unsigned degree)
        : std::domain_error("polynomial degree " + std::to_string(degree) +
                            " exceeds the exact-analysis cap of " +
                            std::to_string(kMaxExactAnalysisDegree) +
                            "; use Monte Carlo estimation (sim run) instead"),
          degree_(degree) {}
    unsigned degree() const noexcept { return degree_; }

private:
    unsigned degree_;
};

class LengthTooLargeError : public std::domain_error {
public:
    explicit LengthTooLargeError(std::size_t n)
        : std::domain_error("data length " + std::to_string(n) +
                            " exceeds the brute-force enumeration cap of 24 bits") {}
};

/// Optional instrumentation for the dynamic program: records how far the
/// total probability mass drifts from 1 across bit steps.
struct DpDiagnostics {
    double max_mass_error = 0.0;
    std::size_t steps = 0;
};

/// Probability that a nonzero BSC error pattern of length `n_bits` has zero
/// CRC syndrome under `poly` (per-bit error probability `p`). Computed by
/// propagating a probability vector over the 2^r register states. The
/// all-zero pattern mass is tracked separately so no cancellation occurs for
/// small p. Analysis is init-invariant (syndromes are linear in the pattern).
///
/// Throws DegreeTooLargeError for r > 20 and std::domain_error for p outside
/// [0, 0.5] or n_bits == 0.
double residual_error_probability(const GeneratorPolynomial& poly, std::size_t n_bits,
                                  double p, DpDiagnostics* diag = nullptr);

/// P_ud(k, p) for every k in [1, n_max], from a single DP sweep.
std::vector<double> residual_error_curve(const GeneratorPolynomial& poly,
                                         std::size_t n_max, double p);

/// Number of nonzero zero-syndrome patterns of length `n_bits`, indexed by
/// Hamming weight. Enumerates all 2^n patterns. Caps: n ≤ 24, r ≤ 20.
std::vector<std::uint64_t> undetected_weight_spectrum(const GeneratorPolynomial& poly,
                                                      std::size_t n_bits);

/// Same quantity as residual_error_probability, by explicit enumeration of
/// every nonzero error pattern with a long-division syndrome check. Oracle
/// counterpart of the DP; n ≤ 24.
double residual_error_probability_bruteforce(const GeneratorPolynomial& poly,
                                             std::size_t n_bits, double p);

/// Default evaluation grid: {1e-4, 1e-3, 1e-2, 0.1, 0.25, 0.5}.
std::vector<double> default_bep_grid();

/// The bit-error probability IEC 61784-3 assumes unless a lower one is proven.
inline constexpr double kStandardBep = 1e-2;

struct PropernessReport {
    GeneratorPolynomial poly;
    std::size_t n_min = 0;
    std::size_t n_max = 0;
    std::vector<double> bep_grid;
    double conservative_limit = 0.0;  // 2^-r

    bool proper = false;               // P_ud <= 2^-r on the whole grid
    bool proper_at_standard_bep = false;  // verdict restricted to p = 1e-2
    bool grid_covers_standard_bep = false;

    double worst_rp = 0.0;  // max P_ud over the grid; usable as RP_I
    std::size_t worst_n = 0;
    double worst_p = 0.0;

    /// curves[i][k] = P_ud(n_min + k, bep_grid[i]).
    std::vector<std::vector<double>> curves;
};

/// Evaluates P_ud over [n_min, n_max] x grid and compares every value
/// against the conservative limit 2^-r. Grid values must lie in (0, 0.5].
PropernessReport properness_check(const GeneratorPolynomial& poly, std::size_t n_min,
                                  std::size_t n_max, const std::vector<double>& bep_grid);

} // namespace sclsim

#endif
