#ifndef SCLSIM_PROTOCOL_HPP
#define SCLSIM_PROTOCOL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sclsim/pdu.hpp"

namespace sclsim {

/// Outcome of presenting one frame to the consumer. Checks run in a fixed
/// order: structural parse, CRC, A-code, cross-check, marker, T-code window.
/// `watchdog_expired` doubles as the verdict for frames arriving while the
/// consumer sits in the safe state.
enum class Verdict {
    accepted,
    bad_authenticity,
    stale_or_replayed,
    crc_mismatch,
    cross_check_mismatch,
    watchdog_expired,
    malformed,
};

const char* verdict_name(Verdict v);

enum class Mode { operational, safe_state };

struct SafeStateEvent {
    std::uint64_t time_us = 0;  // semantic expiry instant, not observation time
    std::string entity;
    std::string reason;
};

/// Producer side: builds numbered PDUs; optionally supervised by a receipt
/// watchdog that trips it into the safe state when acknowledgements stop.
class Producer {
public:
    Producer(const ProtocolConfig& config, std::uint64_t a_code, std::uint64_t start_us);

    /// Builds the next PDU (counter incremented modulo 2^LT, CRC computed
    /// last) and returns the serialized frame. Throws std::length_error when
    /// the payload exceeds the configured maximum.
    BitString build(const std::vector<std::uint8_t>& payload, std::uint64_t now_us,
                    SafetyPdu* out_pdu = nullptr);

    /// Valid receipt observed; refreshes the receipt watchdog.
    void on_receipt(std::uint64_t now_us);

    /// Fires the receipt watchdog if expired; returns the transition event
    /// the first time it trips.
    std::optional<SafeStateEvent> watchdog_tick(std::uint64_t now_us);

    Mode mode() const noexcept { return mode_; }
    std::uint64_t t_code() const noexcept { return t_code_; }
    std::uint64_t deadline_us() const noexcept { return deadline_us_; }
    std::uint64_t a_code() const noexcept { return a_code_; }

    /// Commissioned reset back to operational.
    void reset(std::uint64_t now_us);

private:
    ProtocolConfig config_;
    std::uint64_t a_code_;
    std::uint64_t t_code_ = 0;
    Mode mode_ = Mode::operational;
    std::uint64_t deadline_us_;
};

/// Consumer side: validates frames, tracks the acceptance window and the
/// watchdog, and keeps per-verdict rejection counts. The safe state is
/// absorbing until reset().
class Consumer {
public:
    Consumer(const ProtocolConfig& config, std::uint64_t expected_a_code,
             std::uint64_t start_us);

    Verdict accept(const BitString& frame, std::uint64_t now_us,
                   SafetyPdu* out_pdu = nullptr);

    std::optional<SafeStateEvent> watchdog_tick(std::uint64_t now_us);

    /// External safe-state demand (e.g. the roaming discipline).
    std::optional<SafeStateEvent> force_safe_state(std::uint64_t now_us,
                                                   const std::string& reason);

    void reset(std::uint64_t now_us);

    Mode mode() const noexcept { return mode_; }
    std::uint64_t deadline_us() const noexcept { return deadline_us_; }
    std::uint64_t last_t_code() const noexcept { return last_t_code_; }
    const std::map<Verdict, std::uint64_t>& verdict_counts() const noexcept {
        return verdict_counts_;
    }

private:
    bool t_code_in_window(std::uint64_t t) const;

    ProtocolConfig config_;
    std::uint64_t expected_a_code_;
    std::uint64_t last_t_code_ = 0;
    Mode mode_ = Mode::operational;
    std::uint64_t deadline_us_;
    std::map<Verdict, std::uint64_t> verdict_counts_;
};

// ---------------------------------------------------------------------------
// Scoring bridge between injected ground truth and consumer verdicts.

/// IEC 61784-3 communication error classes.
enum class ErrorClass : unsigned {
    repetition = 0,
    deletion,
    insertion,
    incorrect_sequence,
    corruption,
    delay,
    masquerade,
    wrong_addressing,
};
inline constexpr unsigned kErrorClassCount = 8;
const char* error_class_name(ErrorClass c);

/// Ground-truth channel record attached to every frame by the injectors.
struct FrameLabels {
    std::uint32_t classes = 0;           // bitmask over ErrorClass
    std::uint64_t emission_index = 0;    // 0 for forged frames
    bool forged = false;                 // masquerade/insertion/misroute origin
    bool already_delivered = false;      // consumer accepted this frame or a newer one

    void add(ErrorClass c) { classes |= 1u << static_cast<unsigned>(c); }
    bool has(ErrorClass c) const { return classes & (1u << static_cast<unsigned>(c)); }
    bool any_fault() const { return classes != 0; }
};

enum class Outcome { detected, undetected_dangerous, harmless };
const char* outcome_name(Outcome o);

/// Scores one (ground truth, verdict) pair:
///   - fault-free frames are harmless whatever the verdict;
///   - an accepted frame with a corruption/masquerade/insertion/misrouting
///     label, an accepted replay, or an accepted over-late frame is
///     undetected_dangerous;
///   - a rejected pure repetition is harmless (the duplicate was absorbed);
///   - any other rejected faulty frame counts as detected.
/// A missing label record is a simulator bug (throws std::logic_error).
Outcome classify_undetected(const std::optional<FrameLabels>& labels, Verdict verdict);

} // namespace sclsim

#endif
