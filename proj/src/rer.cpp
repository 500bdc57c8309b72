#include "sclsim/rer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sclsim {

namespace {

double pow2_neg(unsigned bits) { return std::ldexp(1.0, -static_cast<int>(bits)); }

void require_probability(double v, const char* symbol, std::string& errors) {
    if (!(v >= 0.0 && v <= 1.0))
        errors += std::string(errors.empty() ? "" : "; ") + symbol + " must lie in [0, 1]";
}

void require_rate(double v, const char* symbol, std::string& errors) {
    if (!(v >= 0.0) || std::isinf(v))
        errors += std::string(errors.empty() ? "" : "; ") + symbol + " must be a finite rate >= 0";
}

} // namespace

void SafetyParameters::validate() const {
    std::string errors;
    require_rate(message_rate, "v", errors);
    if (not_actual_rate) require_rate(*not_actual_rate, "R_T", errors);
    require_rate(masked_message_rate, "R_M", errors);
    require_probability(rp_marker, "RP_U", errors);
    require_probability(rp_fscp_timeliness, "RP_FSCP_T", errors);
    require_probability(rp_fscp_integrity, "RP_FSCP_I", errors);
    if (!(bep >= 0.0 && bep <= 0.5))
        errors += std::string(errors.empty() ? "" : "; ") + "BEP must lie in [0, 0.5]";
    if (accepted_t_codes < 1)
        errors += std::string(errors.empty() ? "" : "; ") + "w must be >= 1";
    if (max_connections < 1)
        errors += std::string(errors.empty() ? "" : "; ") + "m must be >= 1";
    if (!errors.empty()) throw std::invalid_argument("invalid safety parameters: " + errors);
}

RateResult rr_authenticity(const SafetyParameters& params) {
    params.validate();
    RateResult res;
    res.rate = 0.0;
    res.justification =
        "RR_A = 0: the A-code is transmitted explicitly and secured by the "
        "integrity measures, and the misrouted-message rate is bounded by the "
        "system message rate";
    if (params.la_bits == 0)
        res.warnings.push_back(
            "LA = 0: no explicit A-code is carried, so the RR_A = 0 rationale may not hold");
    return res;
}

RateResult rr_timeliness(const SafetyParameters& params) {
    params.validate();
    RateResult res;
    res.rate = pow2_neg(params.lt_bits) * static_cast<double>(params.accepted_t_codes) *
               params.effective_not_actual_rate() * params.rp_fscp_timeliness;
    res.justification = "RR_T = 2^-LT * w * R_T * RP_FSCP_T";
    if (!params.not_actual_rate)
        res.warnings.push_back("R_T not supplied; worst case R_T = v assumed");
    return res;
}

RateResult rr_masquerade(const SafetyParameters& params) {
    params.validate();
    RateResult res;
    res.rate = pow2_neg(params.la_bits) * pow2_neg(params.lt_bits) *
               static_cast<double>(params.accepted_t_codes) * pow2_neg(params.crc_bits) *
               params.rp_marker * pow2_neg(params.lr_bits) * params.masked_message_rate;
    res.justification = "RR_M = 2^-LA * 2^-LT * w * 2^-r * RP_U * 2^-LR * R_M";
    return res;
}

RateResult rr_integrity(const IntegrityRep& rp_integrity, const SafetyParameters& params) {
    params.validate();
    if (!rp_integrity.provenance)
        throw std::invalid_argument(
            "RP_I has no provenance tag (analytic or asserted); unauditable input refused");
    if (!(rp_integrity.value >= 0.0 && rp_integrity.value <= 1.0))
        throw std::invalid_argument("RP_I must lie in [0, 1]");
    RateResult res;
    res.rate = rp_integrity.value * params.message_rate * params.rp_fscp_integrity;
    res.justification = "RR_I = RP_I * v * RP_FSCP_I";
    return res;
}

RerBreakdown lambda_scl(const SafetyParameters& params, const IntegrityRep& rp_integrity) {
    RerBreakdown b;
    b.params = params;
    b.rp_integrity = rp_integrity;

    const RateResult a = rr_authenticity(params);
    const RateResult t = rr_timeliness(params);
    const RateResult m = rr_masquerade(params);
    const RateResult i = rr_integrity(rp_integrity, params);

    b.rr_authenticity = a.rate;
    b.rr_timeliness = t.rate;
    b.rr_masquerade = m.rate;
    b.rr_integrity = i.rate;
    for (const auto* r : {&a, &t, &m, &i})
        b.warnings.insert(b.warnings.end(), r->warnings.begin(), r->warnings.end());

    b.lambda_scl = b.recompute_lambda();
    return b;
}

SilBudget sil_budget_check(const RerBreakdown& breakdown, double target_pfh, double share) {
    if (!(target_pfh > 0.0)) throw std::domain_error("target PFH must be positive");
    if (!(share > 0.0 && share <= 1.0))
        throw std::domain_error("communication share must lie in (0, 1]");
    SilBudget budget;
    budget.target_pfh = target_pfh;
    budget.communication_share = share;
    budget.limit = target_pfh * share;
    budget.lambda_scl = breakdown.lambda_scl;
    budget.pass = breakdown.lambda_scl <= budget.limit;
    budget.margin = breakdown.lambda_scl == 0.0
                        ? std::numeric_limits<double>::infinity()
                        : budget.limit / breakdown.lambda_scl;
    return budget;
}

} // namespace sclsim
