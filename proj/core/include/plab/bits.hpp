#pragma once
#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "plab/errors.hpp"

namespace plab {

// bits needed to store identifiers 1..n, i.e. ceil(log2(n+1))
inline uint32_t idbits_for(uint64_t n) { return static_cast<uint32_t>(std::bit_width(n)); }

// MSB-first bit packing: bit 0 of a stream is the high bit of byte 0.
class BitWriter {
  public:
    void push_bit(bool b) {
        if (nbits_ % 8 == 0) bytes_.push_back(0);
        if (b) bytes_.back() |= static_cast<uint8_t>(0x80u >> (nbits_ % 8));
        ++nbits_;
    }
    // append the low `width` bits of v, most significant first
    void push_bits(uint64_t v, uint32_t width) {
        for (uint32_t i = width; i-- > 0;) push_bit((v >> i) & 1u);
    }
    uint32_t size_bits() const { return nbits_; }
    std::vector<uint8_t> take() { return std::move(bytes_); }
    const std::vector<uint8_t>& bytes() const { return bytes_; }

  private:
    std::vector<uint8_t> bytes_;
    uint32_t nbits_ = 0;
};

inline bool get_bit(const std::vector<uint8_t>& bytes, uint32_t pos) {
    return (bytes[pos / 8] >> (7 - pos % 8)) & 1u;
}

// read `width` <= 64 bits starting at bit `pos`, MSB-first
inline uint64_t get_bits(const std::vector<uint8_t>& bytes, uint32_t pos, uint32_t width) {
    if (width == 0) return 0;
    uint32_t first = pos >> 3, last = (pos + width - 1) >> 3;
    if (last - first >= 8) // spans 9 bytes; split
        return (get_bits(bytes, pos, width - 32) << 32) | get_bits(bytes, pos + width - 32, 32);
    uint64_t v = 0;
    for (uint32_t i = first; i <= last; ++i) v = (v << 8) | bytes[i];
    v >>= 7 - ((pos + width - 1) & 7);
    return width == 64 ? v : v & ((uint64_t{1} << width) - 1);
}

// copy `width` bits starting at `pos` into a fresh MSB-first byte buffer
// (trailing pad bits zero)
inline std::vector<uint8_t> slice_bits(const std::vector<uint8_t>& bytes, uint32_t pos, uint32_t width) {
    std::vector<uint8_t> out((width + 7) / 8, 0);
    for (uint32_t i = 0; i < width; i += 8) {
        uint32_t w = std::min(8u, width - i);
        out[i / 8] = static_cast<uint8_t>(get_bits(bytes, pos + i, w) << (8 - w));
    }
    return out;
}

} // namespace plab
