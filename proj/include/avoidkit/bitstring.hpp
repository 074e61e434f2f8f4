#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace avoidkit {

// Fixed-length sequence of bits, 0-indexed; bit 0 is the leftmost character
// of the textual form. Lexicographic comparison of equal-length strings
// coincides with big-endian integer order.
class BitString {
public:
    BitString() = default;
    explicit BitString(size_t len) : bits_(len, 0) {}

    // Parses a 0/1 character string. Throws ParseError on anything else.
    static BitString from_string(std::string_view s);

    // Big-endian encoding of `value` in exactly `width` bits.
    // Bit 0 of the result is the most significant bit of value.
    static BitString from_index(uint64_t value, size_t width);

    // "tt <len> <hex>" with most-significant-first nibbles, pad bits zero.
    static BitString parse_tt_line(std::string_view line);
    std::string to_tt_line() const;

    size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    uint8_t operator[](size_t i) const { return bits_[i]; }
    void set(size_t i, uint8_t v) { bits_[i] = v ? 1 : 0; }
    void flip(size_t i) { bits_[i] ^= 1; }
    void push_back(uint8_t v) { bits_.push_back(v ? 1 : 0); }

    // Substring [begin, end).
    BitString slice(size_t begin, size_t end) const;

    BitString& append(const BitString& other);
    friend BitString operator+(BitString a, const BitString& b) {
        a.append(b);
        return a;
    }

    // Zero-extends to `len`; throws if already longer.
    BitString padded_to(size_t len) const;

    // Big-endian value; size() must be <= 64.
    uint64_t to_index() const;

    std::string to_string() const;

    bool operator==(const BitString&) const = default;
    std::strong_ordering operator<=>(const BitString& o) const {
        size_t n = std::min(bits_.size(), o.bits_.size());
        for (size_t i = 0; i < n; ++i)
            if (bits_[i] != o.bits_[i])
                return bits_[i] <=> o.bits_[i];
        return bits_.size() <=> o.bits_.size();
    }

private:
    std::vector<uint8_t> bits_;
};

} // namespace avoidkit
