#include "sclsim/crc.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace sclsim {

GeneratorPolynomial::GeneratorPolynomial(unsigned degree, std::uint64_t coefficients)
    : degree_(degree), coefficients_(coefficients) {
    if (degree < 1 || degree > 64)
        throw std::invalid_argument("generator polynomial degree must be in [1, 64]");
    if (degree < 64 && (coefficients >> degree) != 0)
        throw std::invalid_argument("coefficient mask has bits at or above the degree");
}

std::string GeneratorPolynomial::text() const {
    char buf[40];
    std::snprintf(buf, sizeof buf, "r=%u,0x%llx", degree_,
                  static_cast<unsigned long long>(coefficients_));
    return buf;
}

namespace {

std::uint64_t reflect_bits(std::uint64_t x, unsigned width) {
    std::uint64_t r = 0;
    for (unsigned i = 0; i < width; ++i) {
        r = (r << 1) | (x & 1u);
        x >>= 1;
    }
    return r;
}

std::uint64_t parse_u64(std::string_view s, std::size_t offset_for_errors, int base) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value, base);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw PolynomialParseError("invalid number", offset_for_errors);
    return value;
}

} // namespace

GeneratorPolynomial GeneratorPolynomial::parse(std::string_view text) {
    // Catalog names contain letters other than the leading "r=" form.
    if (const CrcCatalogEntry* e = crc_catalog_find(text)) return e->config.poly;

    std::string compact;
    compact.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);

    if (compact.rfind("r=", 0) != 0)
        throw PolynomialParseError("expected \"r=<degree>,0x<mask>\" or a catalog name", 0);
    const std::size_t comma = compact.find(',');
    if (comma == std::string::npos)
        throw PolynomialParseError("missing ',' between degree and mask", compact.size());
    const std::string_view deg_s(compact.data() + 2, comma - 2);
    if (deg_s.empty()) throw PolynomialParseError("missing degree", 2);
    const std::uint64_t degree = parse_u64(deg_s, 2, 10);
    std::string_view mask_s(compact.data() + comma + 1, compact.size() - comma - 1);
    if (mask_s.rfind("0x", 0) == 0 || mask_s.rfind("0X", 0) == 0)
        mask_s.remove_prefix(2);
    if (mask_s.empty()) throw PolynomialParseError("missing coefficient mask", comma + 1);
    const std::uint64_t mask = parse_u64(mask_s, comma + 1, 16);
    if (degree < 1 || degree > 64)
        throw PolynomialParseError("degree must be in [1, 64]", 2);
    if (degree < 64 && (mask >> degree) != 0)
        throw PolynomialParseError("mask has bits at or above the degree", comma + 1);
    return GeneratorPolynomial(static_cast<unsigned>(degree), mask);
}

void CrcConfig::validate() const {
    const std::uint64_t m = poly.register_mask();
    if ((init & ~m) != 0) throw std::invalid_argument("crc init does not fit in r bits");
    if ((final_xor & ~m) != 0) throw std::invalid_argument("crc final xor does not fit in r bits");
}

namespace {

// One register step of the non-augmented division: feed = msb(reg) ^ bit.
inline std::uint64_t step(std::uint64_t reg, bool bit, unsigned r,
                          std::uint64_t poly, std::uint64_t mask) {
    const bool top = (reg >> (r - 1)) & 1u;
    reg = (reg << 1) & mask;
    if (top != bit) reg ^= poly;
    return reg;
}

std::uint64_t finish(const CrcConfig& c, std::uint64_t reg) {
    if (c.reflect_out) reg = reflect_bits(reg, c.poly.degree());
    return (reg ^ c.final_xor) & c.poly.register_mask();
}

} // namespace

std::uint64_t crc_raw_remainder(const CrcConfig& config, const BitString& message) {
    config.validate();
    const unsigned r = config.poly.degree();
    const std::uint64_t poly = config.poly.coefficients();
    const std::uint64_t mask = config.poly.register_mask();
    std::uint64_t reg = config.init & mask;

    const std::size_t n = message.size();
    if (!config.reflect_in) {
        for (std::size_t i = 0; i < n; ++i) reg = step(reg, message.bit(i), r, poly, mask);
    } else {
        for (std::size_t group = 0; group < n; group += 8) {
            const std::size_t len = std::min<std::size_t>(8, n - group);
            for (std::size_t i = len; i-- > 0;)
                reg = step(reg, message.bit(group + i), r, poly, mask);
        }
    }
    return reg;
}

std::uint64_t crc_compute(const CrcConfig& config, const BitString& message) {
    return finish(config, crc_raw_remainder(config, message));
}

std::uint64_t crc_compute(const CrcConfig& config, std::span<const std::uint8_t> bytes) {
    return crc_compute(config, BitString::from_bytes(bytes));
}

BitString crc_append(const CrcConfig& config, const BitString& message) {
    BitString frame = message;
    frame.append_uint(crc_compute(config, message), config.poly.degree());
    return frame;
}

bool crc_verify(const CrcConfig& config, const BitString& frame) {
    const unsigned r = config.poly.degree();
    if (frame.size() < r) return false;
    BitString data;
    for (std::size_t i = 0; i + r < frame.size(); ++i) data.append_bit(frame.bit(i));
    const std::uint64_t stored = frame.read_uint(frame.size() - r, r);
    return crc_compute(config, data) == stored;
}

namespace {

CrcConfig make_cfg(unsigned r, std::uint64_t poly, std::uint64_t init,
                   bool refin, bool refout, std::uint64_t xorout) {
    return CrcConfig{GeneratorPolynomial(r, poly), init, refin, refout, xorout};
}

const std::array<CrcCatalogEntry, 10> kCatalog = {{
    {"crc-4/itu", make_cfg(4, 0x3, 0, true, true, 0), 0x7},
    {"crc-8/smbus", make_cfg(8, 0x07, 0, false, false, 0), 0xf4},
    {"crc-8/autosar", make_cfg(8, 0x2f, 0xff, false, false, 0xff), 0xdf},
    {"crc-11/flexray", make_cfg(11, 0x385, 0x01a, false, false, 0), 0x5a3},
    {"crc-16/ccitt-false", make_cfg(16, 0x1021, 0xffff, false, false, 0), 0x29b1},
    {"crc-16/kermit", make_cfg(16, 0x1021, 0, true, true, 0), 0x2189},
    {"crc-16/arc", make_cfg(16, 0x8005, 0, true, true, 0), 0xbb3d},
    {"crc-16/profibus", make_cfg(16, 0x1dcf, 0xffff, false, false, 0xffff), 0xa819},
    {"crc-32/iso-hdlc", make_cfg(32, 0x04c11db7, 0xffffffff, true, true, 0xffffffff), 0xcbf43926},
    {"crc-32/castagnoli", make_cfg(32, 0x1edc6f41, 0xffffffff, true, true, 0xffffffff), 0xe3069283},
}};

} // namespace

std::span<const CrcCatalogEntry> crc_catalog() { return kCatalog; }

const CrcCatalogEntry* crc_catalog_find(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    for (const auto& e : kCatalog)
        if (e.name == lower) return &e;
    return nullptr;
}

} // namespace sclsim
