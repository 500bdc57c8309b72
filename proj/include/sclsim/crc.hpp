#ifndef SCLSIM_CRC_HPP
#define SCLSIM_CRC_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sclsim/bits.hpp"

namespace sclsim {

/// Binary CRC generator polynomial of degree r. The coefficient mask holds
/// the r low-order coefficients; the leading x^r term is implicit. Bit 0 of
/// the mask is the constant (x^0) term. Immutable after construction.
class GeneratorPolynomial {
public:
    GeneratorPolynomial(unsigned degree, std::uint64_t coefficients);

    unsigned degree() const noexcept { return degree_; }
    std::uint64_t coefficients() const noexcept { return coefficients_; }
    bool has_constant_term() const noexcept { return coefficients_ & 1u; }

    /// Mask with the low r bits set (all-ones register of width r).
    std::uint64_t register_mask() const noexcept {
        return degree_ == 64 ? ~0ull : (1ull << degree_) - 1ull;
    }

    std::string text() const;  // "r=16,0x1021" form

    /// Parses "r=<degree>,0x<hexmask>" or a catalog name like "crc-16/ccitt".
    /// Throws PolynomialParseError with a character position on bad input.
    static GeneratorPolynomial parse(std::string_view text);

    bool operator==(const GeneratorPolynomial&) const = default;

private:
    unsigned degree_;
    std::uint64_t coefficients_;
};

class PolynomialParseError : public std::invalid_argument {
public:
    PolynomialParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Full CRC variant: polynomial plus register conventions.
struct CrcConfig {
    GeneratorPolynomial poly;
    std::uint64_t init = 0;
    bool reflect_in = false;
    bool reflect_out = false;
    std::uint64_t final_xor = 0;

    /// Throws std::invalid_argument if init or final_xor exceed r bits.
    void validate() const;
};

/// Computes the checksum of a bit sequence under the given conventions.
/// With reflect_in, each 8-bit group of the message is fed low bit first
/// (a trailing partial group is reversed within itself).
std::uint64_t crc_compute(const CrcConfig& config, const BitString& message);
std::uint64_t crc_compute(const CrcConfig& config, std::span<const std::uint8_t> bytes);

/// Raw register remainder after feeding `message` (init applied, no output
/// reflection or xor). Appending this value to the message drives the
/// register to zero, which is the residue law the round-trip tests use.
std::uint64_t crc_raw_remainder(const CrcConfig& config, const BitString& message);

/// Frame helpers: checksum is carried as an r-bit field appended MSB-first.
BitString crc_append(const CrcConfig& config, const BitString& message);
bool crc_verify(const CrcConfig& config, const BitString& frame_with_checksum);

struct CrcCatalogEntry {
    std::string_view name;
    CrcConfig config;
    std::uint64_t check;  // checksum of ASCII "123456789"
};

/// Common CRC variants shipped as data; analysis accepts arbitrary polynomials.
std::span<const CrcCatalogEntry> crc_catalog();

/// Catalog lookup by name (case-insensitive); nullptr if unknown.
const CrcCatalogEntry* crc_catalog_find(std::string_view name);

} // namespace sclsim

#endif
