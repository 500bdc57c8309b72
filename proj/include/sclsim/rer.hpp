#ifndef SCLSIM_RER_HPP
#define SCLSIM_RER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sclsim {

// Residual-error-rate calculus for an IEC 61784-3 safety communication
// layer. All rates are per hour of operation; all code lengths are in bits.

struct SafetyParameters {
    unsigned la_bits = 0;      // authenticity code length (LA)
    unsigned lt_bits = 0;      // timeliness code length (LT)
    unsigned lr_bits = 0;      // redundant cross-check length (LR), 0 if unused
    unsigned crc_bits = 0;     // CRC signature length (r)
    std::uint64_t accepted_t_codes = 1;   // w
    double message_rate = 0.0;            // v, messages per hour
    std::uint64_t max_connections = 1;    // m
    std::optional<double> not_actual_rate;  // R_T; worst case v when unset
    double masked_message_rate = 1e-3;      // R_M per device per hour
    double rp_marker = 1.0;    // RP_U, residual probability of marker fields
    double rp_fscp_timeliness = 1.0;  // RP_FSCP_T
    double rp_fscp_integrity = 1.0;   // RP_FSCP_I
    double bep = 1e-2;         // assumed bit error probability

    /// Effective R_T: configured value, or the worst-case assumption v.
    double effective_not_actual_rate() const {
        return not_actual_rate.value_or(message_rate);
    }

    /// Throws std::invalid_argument naming every violated constraint.
    void validate() const;
};

/// Where an integrity residual-error probability came from. Results are
/// auditable only when the provenance is recorded.
enum class RpProvenance { analytic, asserted };

struct IntegrityRep {
    double value = 0.0;
    std::optional<RpProvenance> provenance;
    std::string source;  // free-form note, e.g. the polynomial and length range

    static IntegrityRep analytic(double value, std::string source) {
        return {value, RpProvenance::analytic, std::move(source)};
    }
    static IntegrityRep asserted(double value, std::string source) {
        return {value, RpProvenance::asserted, std::move(source)};
    }
};

struct RateResult {
    double rate = 0.0;               // events per hour
    std::string justification;
    std::vector<std::string> warnings;
};

/// Authenticity residual error rate: zero, because the A-code is carried
/// explicitly and covered by the integrity signature while misrouted
/// messages arrive at most at the system message rate. Warns when LA = 0
/// since the explicit-code rationale then no longer holds.
RateResult rr_authenticity(const SafetyParameters& params);

/// Timeliness residual error rate: 2^-LT * w * R_T * RP_FSCP_T.
RateResult rr_timeliness(const SafetyParameters& params);

/// Masquerade residual error rate:
/// 2^-LA * 2^-LT * w * 2^-r * RP_U * 2^-LR * R_M.
RateResult rr_masquerade(const SafetyParameters& params);

/// Integrity residual error rate: RP_I * v * RP_FSCP_I. Refuses an RP_I
/// without provenance (throws std::invalid_argument).
RateResult rr_integrity(const IntegrityRep& rp_integrity, const SafetyParameters& params);

struct RerBreakdown {
    double rr_authenticity = 0.0;
    double rr_timeliness = 0.0;
    double rr_masquerade = 0.0;
    double rr_integrity = 0.0;
    double lambda_scl = 0.0;  // (RR_T + RR_A + RR_M + RR_I) * m

    SafetyParameters params;      // full input echo
    IntegrityRep rp_integrity;    // RP_I with provenance
    std::vector<std::string> warnings;

    /// Recomputes lambda from the stored components; must reproduce
    /// lambda_scl bit for bit.
    double recompute_lambda() const {
        return (rr_timeliness + rr_authenticity + rr_masquerade + rr_integrity) *
               static_cast<double>(params.max_connections);
    }
};

/// Total residual error rate of the safety communication layer,
/// lambda_SCL = (RR_T + RR_A + RR_M + RR_I) * m.
RerBreakdown lambda_scl(const SafetyParameters& params, const IntegrityRep& rp_integrity);

struct SilBudget {
    double target_pfh = 0.0;          // accepted dangerous failures per hour
    double communication_share = 0.01;
    double limit = 0.0;               // target_pfh * share
    double lambda_scl = 0.0;
    bool pass = false;                // lambda_scl <= limit
    double margin = 0.0;              // limit / lambda_scl; +inf when lambda = 0
};

/// Budget rule: the communication layer may consume at most `share`
/// (default 1%) of the accepted PFH. Throws std::domain_error for
/// non-positive PFH or share outside (0, 1].
SilBudget sil_budget_check(const RerBreakdown& breakdown, double target_pfh,
                           double share = 0.01);

} // namespace sclsim

#endif
