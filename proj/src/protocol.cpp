#include "sclsim/protocol.hpp"

namespace sclsim {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::accepted: return "accepted";
        case Verdict::bad_authenticity: return "bad_authenticity";
        case Verdict::stale_or_replayed: return "stale_or_replayed";
        case Verdict::crc_mismatch: return "crc_mismatch";
        case Verdict::cross_check_mismatch: return "cross_check_mismatch";
        case Verdict::watchdog_expired: return "watchdog_expired";
        case Verdict::malformed: return "malformed";
    }
    return "?";
}

const char* error_class_name(ErrorClass c) {
    switch (c) {
        case ErrorClass::repetition: return "repetition";
        case ErrorClass::deletion: return "deletion";
        case ErrorClass::insertion: return "insertion";
        case ErrorClass::incorrect_sequence: return "incorrect_sequence";
        case ErrorClass::corruption: return "corruption";
        case ErrorClass::delay: return "delay";
        case ErrorClass::masquerade: return "masquerade";
        case ErrorClass::wrong_addressing: return "wrong_addressing";
    }
    return "?";
}

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::detected: return "detected";
        case Outcome::undetected_dangerous: return "undetected_dangerous";
        case Outcome::harmless: return "harmless";
    }
    return "?";
}

Producer::Producer(const ProtocolConfig& config, std::uint64_t a_code, std::uint64_t start_us)
    : config_(config), a_code_(a_code), deadline_us_(start_us + config.watchdog_timeout_us) {
    config_.validate();
    if (config_.la_bits < 64 && (a_code >> config_.la_bits) != 0)
        throw std::invalid_argument("a_code does not fit in LA bits");
}

BitString Producer::build(const std::vector<std::uint8_t>& payload, std::uint64_t,
                          SafetyPdu* out_pdu) {
    if (mode_ != Mode::operational)
        throw std::logic_error("producer in safe state cannot build frames");
    if (payload.size() > config_.max_payload_bytes)
        throw std::length_error("payload exceeds configured maximum");
    if (payload.size() != config_.payload_bytes)
        throw std::length_error("payload does not match configured process-data size");

    const std::uint64_t mod = config_.t_code_modulus();
    t_code_ = mod ? (t_code_ + 1) % mod : t_code_ + 1;

    SafetyPdu pdu;
    pdu.a_code = a_code_;
    pdu.t_code = t_code_;
    if (config_.inverted_counter)
        pdu.inverted_t_code = ~t_code_ & (mod ? mod - 1 : ~std::uint64_t{0});
    if (config_.marker_bits > 0) pdu.marker = config_.marker_value;
    pdu.payload = payload;
    if (config_.lr_bits > 0) pdu.cross_check = derive_cross_check(config_, payload);

    BitString frame = serialize_pdu(config_, pdu);
    if (out_pdu) *out_pdu = pdu;
    return frame;
}

void Producer::on_receipt(std::uint64_t now_us) {
    if (mode_ == Mode::operational) deadline_us_ = now_us + config_.watchdog_timeout_us;
}

std::optional<SafeStateEvent> Producer::watchdog_tick(std::uint64_t now_us) {
    if (!config_.with_receipt) return std::nullopt;
    if (mode_ != Mode::operational || now_us < deadline_us_) return std::nullopt;
    mode_ = Mode::safe_state;
    return SafeStateEvent{deadline_us_, "producer", "receipt watchdog expired"};
}

void Producer::reset(std::uint64_t now_us) {
    mode_ = Mode::operational;
    deadline_us_ = now_us + config_.watchdog_timeout_us;
}

Consumer::Consumer(const ProtocolConfig& config, std::uint64_t expected_a_code,
                   std::uint64_t start_us)
    : config_(config),
      expected_a_code_(expected_a_code),
      deadline_us_(start_us + config.watchdog_timeout_us) {
    config_.validate();
}

bool Consumer::t_code_in_window(std::uint64_t t) const {
    // Accept t in (last, last + w] modulo 2^LT.
    const std::uint64_t mod = config_.t_code_modulus();
    const std::uint64_t delta = mod ? (t - last_t_code_ - 1) % mod
                                    : t - last_t_code_ - 1;
    return delta < config_.accept_window;
}

Verdict Consumer::accept(const BitString& frame, std::uint64_t now_us, SafetyPdu* out_pdu) {
    const auto score = [this](Verdict v) {
        ++verdict_counts_[v];
        return v;
    };

    if (mode_ != Mode::operational) return score(Verdict::watchdog_expired);

    const std::optional<SafetyPdu> parsed = parse_pdu(config_, frame);
    if (!parsed) return score(Verdict::malformed);
    if (out_pdu) *out_pdu = *parsed;

    if (!crc_verify(config_.crc, frame)) return score(Verdict::crc_mismatch);
    if (parsed->a_code != expected_a_code_) return score(Verdict::bad_authenticity);
    if (config_.lr_bits > 0 &&
        *parsed->cross_check != derive_cross_check(config_, parsed->payload))
        return score(Verdict::cross_check_mismatch);
    if (config_.marker_bits > 0 && *parsed->marker != config_.marker_value)
        return score(Verdict::malformed);
    if (config_.inverted_counter) {
        const std::uint64_t mod = config_.t_code_modulus();
        const std::uint64_t expect = ~parsed->t_code & (mod ? mod - 1 : ~std::uint64_t{0});
        if (*parsed->inverted_t_code != expect) return score(Verdict::malformed);
    }
    if (!t_code_in_window(parsed->t_code)) return score(Verdict::stale_or_replayed);

    last_t_code_ = parsed->t_code;
    deadline_us_ = now_us + config_.watchdog_timeout_us;
    return score(Verdict::accepted);
}

std::optional<SafeStateEvent> Consumer::watchdog_tick(std::uint64_t now_us) {
    if (mode_ != Mode::operational || now_us < deadline_us_) return std::nullopt;
    mode_ = Mode::safe_state;
    // The transition is pinned to the expiry instant even when observed later.
    return SafeStateEvent{deadline_us_, "consumer", "watchdog expired"};
}

std::optional<SafeStateEvent> Consumer::force_safe_state(std::uint64_t now_us,
                                                         const std::string& reason) {
    if (mode_ != Mode::operational) return std::nullopt;
    mode_ = Mode::safe_state;
    return SafeStateEvent{now_us, "consumer", reason};
}

void Consumer::reset(std::uint64_t now_us) {
    mode_ = Mode::operational;
    last_t_code_ = 0;
    deadline_us_ = now_us + config_.watchdog_timeout_us;
}

Outcome classify_undetected(const std::optional<FrameLabels>& labels, Verdict verdict) {
    if (!labels)
        throw std::logic_error("frame reached scoring without a ground-truth label record");

    if (!labels->any_fault()) return Outcome::harmless;

    const bool content_fault = labels->has(ErrorClass::corruption) ||
                               labels->has(ErrorClass::masquerade) ||
                               labels->has(ErrorClass::insertion) ||
                               labels->has(ErrorClass::wrong_addressing);
    if (verdict == Verdict::accepted) {
        if (content_fault) return Outcome::undetected_dangerous;
        if (labels->has(ErrorClass::repetition) && labels->already_delivered)
            return Outcome::undetected_dangerous;
        if (labels->has(ErrorClass::incorrect_sequence) && labels->already_delivered)
            return Outcome::undetected_dangerous;
        if (labels->has(ErrorClass::delay)) return Outcome::undetected_dangerous;
        return Outcome::harmless;
    }

    // Rejected or safe-stated.
    if (labels->classes ==
        (1u << static_cast<unsigned>(ErrorClass::repetition)))
        return Outcome::harmless;  // a rejected duplicate was simply absorbed
    return Outcome::detected;
}

} // namespace sclsim
