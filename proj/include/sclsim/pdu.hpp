#ifndef SCLSIM_PDU_HPP
#define SCLSIM_PDU_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "sclsim/bits.hpp"
#include "sclsim/crc.hpp"

namespace sclsim {

// Safety PDU wire layout, in transmission order (every field MSB-first):
//
//   a_code   : LA bits   connection identifier
//   t_code   : LT bits   sequence counter
//   ~t_code  : LT bits   ones'-complement counter copy (only if enabled)
//   marker   : LU bits   fixed marker value (only if LU > 0)
//   payload  : 8 * payload_bytes bits
//   cross    : LR bits   complement of the first LR payload bits,
//                        zero-padded payload if shorter (only if LR > 0)
//   crc      : r bits    checksum over everything above
//
// Zero-width fields are absent from the wire. The CRC is computed last,
// over the exact serialized prefix.

struct ProtocolConfig {
    unsigned la_bits = 8;
    unsigned lt_bits = 16;
    unsigned lr_bits = 0;
    unsigned marker_bits = 0;
    std::uint64_t marker_value = 0;
    bool inverted_counter = false;
    CrcConfig crc{GeneratorPolynomial(16, 0x1021), 0, false, false, 0};
    std::size_t payload_bytes = 4;      // fixed process-data size
    std::size_t max_payload_bytes = 8;
    std::uint64_t accept_window = 1;    // w
    std::uint64_t watchdog_timeout_us = 5'000'000;
    bool with_receipt = false;

    /// Throws std::invalid_argument on inconsistent settings.
    void validate() const;

    std::size_t frame_bits() const {
        return la_bits + lt_bits + (inverted_counter ? lt_bits : 0) + marker_bits +
               payload_bytes * 8 + lr_bits + crc.poly.degree();
    }
    std::uint64_t t_code_modulus() const {
        return lt_bits >= 64 ? 0 : (std::uint64_t{1} << lt_bits);
    }
};

struct SafetyPdu {
    std::uint64_t a_code = 0;
    std::uint64_t t_code = 0;
    std::optional<std::uint64_t> inverted_t_code;
    std::optional<std::uint64_t> marker;
    std::vector<std::uint8_t> payload;
    std::optional<std::uint64_t> cross_check;
    std::uint64_t crc = 0;
};

/// Expected cross-check value for a payload under the configured derivation.
std::uint64_t derive_cross_check(const ProtocolConfig& config,
                                 const std::vector<std::uint8_t>& payload);

/// Serializes all fields and computes the CRC over the prefix; the returned
/// PDU has its crc member filled in.
BitString serialize_pdu(const ProtocolConfig& config, SafetyPdu& pdu);

/// Parses a frame. Returns std::nullopt when the frame length does not match
/// the configured layout (structural failure). Field consistency (CRC,
/// marker, cross-check) is NOT checked here; the consumer does that.
std::optional<SafetyPdu> parse_pdu(const ProtocolConfig& config, const BitString& frame);

} // namespace sclsim

#endif
