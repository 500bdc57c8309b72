#ifndef SCLSIM_BITS_HPP
#define SCLSIM_BITS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sclsim {

/// Sequence of bits in transmission order. Bit 0 is transmitted first and
/// maps to the most significant bit of the first backing byte.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t nbits) : bytes_((nbits + 7) / 8, 0), size_(nbits) {}

    static BitString from_bytes(std::span<const std::uint8_t> data);

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool bit(std::size_t i) const {
        return (bytes_[i >> 3] >> (7 - (i & 7))) & 1u;
    }
    void set_bit(std::size_t i, bool v) {
        const std::uint8_t mask = static_cast<std::uint8_t>(1u << (7 - (i & 7)));
        if (v) bytes_[i >> 3] |= mask; else bytes_[i >> 3] &= static_cast<std::uint8_t>(~mask);
    }
    void flip_bit(std::size_t i) {
        bytes_[i >> 3] ^= static_cast<std::uint8_t>(1u << (7 - (i & 7)));
    }

    void append_bit(bool v);
    /// Appends the low `width` bits of `value`, most significant first.
    void append_uint(std::uint64_t value, unsigned width);
    void append(const BitString& other);

    /// Reads `width` bits starting at `pos`, first bit becomes the MSB.
    std::uint64_t read_uint(std::size_t pos, unsigned width) const;

    std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }

    std::string to_hex() const;

    bool operator==(const BitString& other) const noexcept {
        return size_ == other.size_ && bytes_ == other.bytes_;
    }

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t size_ = 0;
};

} // namespace sclsim

#endif
