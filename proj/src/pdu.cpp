#include "sclsim/pdu.hpp"

#include <stdexcept>

namespace sclsim {

void ProtocolConfig::validate() const {
    crc.validate();
    if (la_bits > 64 || lt_bits > 63 || lr_bits > 64 || marker_bits > 64)
        throw std::invalid_argument("protocol field widths must fit in 64 bits (LT < 64)");
    if (marker_bits < 64 && (marker_value >> marker_bits) != 0)
        throw std::invalid_argument("marker value does not fit in marker_bits");
    if (payload_bytes > max_payload_bytes)
        throw std::invalid_argument("payload_bytes exceeds max_payload_bytes");
    if (accept_window < 1) throw std::invalid_argument("accept window w must be >= 1");
    if (watchdog_timeout_us == 0) throw std::invalid_argument("watchdog timeout must be > 0");
}

std::uint64_t derive_cross_check(const ProtocolConfig& config,
                                 const std::vector<std::uint8_t>& payload) {
    // Complement of the first LR payload bits, payload zero-padded if short.
    std::uint64_t bits = 0;
    for (unsigned i = 0; i < config.lr_bits; ++i) {
        const std::size_t byte = i / 8;
        const bool b = byte < payload.size() && ((payload[byte] >> (7 - (i % 8))) & 1u);
        bits = (bits << 1) | (b ? 0u : 1u);
    }
    return bits;
}

BitString serialize_pdu(const ProtocolConfig& config, SafetyPdu& pdu) {
    BitString frame;
    frame.append_uint(pdu.a_code, config.la_bits);
    frame.append_uint(pdu.t_code, config.lt_bits);
    if (config.inverted_counter)
        frame.append_uint(pdu.inverted_t_code.value_or(0), config.lt_bits);
    if (config.marker_bits > 0)
        frame.append_uint(pdu.marker.value_or(0), config.marker_bits);
    for (std::uint8_t b : pdu.payload) frame.append_uint(b, 8);
    if (config.lr_bits > 0)
        frame.append_uint(pdu.cross_check.value_or(0), config.lr_bits);
    pdu.crc = crc_compute(config.crc, frame);
    frame.append_uint(pdu.crc, config.crc.poly.degree());
    return frame;
}

std::optional<SafetyPdu> parse_pdu(const ProtocolConfig& config, const BitString& frame) {
    if (frame.size() != config.frame_bits()) return std::nullopt;
    SafetyPdu pdu;
    std::size_t pos = 0;
    pdu.a_code = frame.read_uint(pos, config.la_bits);
    pos += config.la_bits;
    pdu.t_code = frame.read_uint(pos, config.lt_bits);
    pos += config.lt_bits;
    if (config.inverted_counter) {
        pdu.inverted_t_code = frame.read_uint(pos, config.lt_bits);
        pos += config.lt_bits;
    }
    if (config.marker_bits > 0) {
        pdu.marker = frame.read_uint(pos, config.marker_bits);
        pos += config.marker_bits;
    }
    pdu.payload.resize(config.payload_bytes);
    for (auto& b : pdu.payload) {
        b = static_cast<std::uint8_t>(frame.read_uint(pos, 8));
        pos += 8;
    }
    if (config.lr_bits > 0) {
        pdu.cross_check = frame.read_uint(pos, config.lr_bits);
        pos += config.lr_bits;
    }
    pdu.crc = frame.read_uint(pos, config.crc.poly.degree());
    return pdu;
}

} // namespace sclsim
