#include "sclsim/bits.hpp"

#include <stdexcept>

namespace sclsim {

BitString BitString::from_bytes(std::span<const std::uint8_t> data) {
    BitString out;
    out.bytes_.assign(data.begin(), data.end());
    out.size_ = data.size() * 8;
    return out;
}

void BitString::append_bit(bool v) {
    if ((size_ & 7) == 0) bytes_.push_back(0);
    ++size_;
    set_bit(size_ - 1, v);
}

void BitString::append_uint(std::uint64_t value, unsigned width) {
    if (width > 64) throw std::invalid_argument("BitString::append_uint: width > 64");
    for (unsigned i = width; i-- > 0;) append_bit((value >> i) & 1u);
}

void BitString::append(const BitString& other) {
    if ((size_ & 7) == 0) {
        // fast path: byte-aligned splice
        bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
        size_ += other.size_;
        return;
    }
    for (std::size_t i = 0; i < other.size_; ++i) append_bit(other.bit(i));
}

std::uint64_t BitString::read_uint(std::size_t pos, unsigned width) const {
    if (width > 64) throw std::invalid_argument("BitString::read_uint: width > 64");
    if (pos + width > size_) throw std::out_of_range("BitString::read_uint: range past end");
    std::uint64_t v = 0;
    for (unsigned i = 0; i < width; ++i) v = (v << 1) | (bit(pos + i) ? 1u : 0u);
    return v;
}

std::string BitString::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes_.size() * 2);
    for (std::uint8_t b : bytes_) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

} // namespace sclsim
