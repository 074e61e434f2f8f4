#include "avoidkit/bitstring.hpp"

#include <sstream>

#include "avoidkit/errors.hpp"

namespace avoidkit {

BitString BitString::from_string(std::string_view s) {
    BitString r;
    r.bits_.reserve(s.size());
    for (char c : s) {
        if (c == '0')
            r.bits_.push_back(0);
        else if (c == '1')
            r.bits_.push_back(1);
        else
            throw ParseError("bit string may contain only '0' and '1', got '" +
                             std::string(1, c) + "'");
    }
    return r;
}

BitString BitString::from_index(uint64_t value, size_t width) {
    if (width < 64 && (value >> width) != 0)
        throw InputShapeError("value does not fit in requested bit width");
    BitString r(width);
    for (size_t i = 0; i < width; ++i)
        r.bits_[i] = static_cast<uint8_t>((value >> (width - 1 - i)) & 1);
    return r;
}

BitString BitString::slice(size_t begin, size_t end) const {
    if (begin > end || end > bits_.size())
        throw InputShapeError("slice range out of bounds");
    BitString r;
    r.bits_.assign(bits_.begin() + static_cast<ptrdiff_t>(begin),
                   bits_.begin() + static_cast<ptrdiff_t>(end));
    return r;
}

BitString& BitString::append(const BitString& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
    return *this;
}

BitString BitString::padded_to(size_t len) const {
    if (len < bits_.size())
        throw InputShapeError("cannot pad to a shorter length");
    BitString r = *this;
    r.bits_.resize(len, 0);
    return r;
}

uint64_t BitString::to_index() const {
    if (bits_.size() > 64)
        throw CapacityError("bit string too long for a 64-bit index");
    uint64_t v = 0;
    for (uint8_t b : bits_)
        v = (v << 1) | b;
    return v;
}

std::string BitString::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (uint8_t b : bits_)
        s.push_back(b ? '1' : '0');
    return s;
}

std::string BitString::to_tt_line() const {
    static const char* hexdig = "0123456789abcdef";
    std::string s = "tt " + std::to_string(bits_.size()) + " ";
    for (size_t i = 0; i < bits_.size(); i += 4) {
        unsigned nib = 0;
        for (size_t j = 0; j < 4; ++j) {
            nib <<= 1;
            if (i + j < bits_.size())
                nib |= bits_[i + j];
        }
        s.push_back(hexdig[nib]);
    }
    return s;
}

BitString BitString::parse_tt_line(std::string_view line) {
    std::istringstream in{std::string(line)};
    std::string tag, hex;
    size_t len = 0;
    if (!(in >> tag >> len >> hex) || tag != "tt")
        throw ParseError("expected 'tt <len> <hex>'");
    std::string rest;
    if (in >> rest)
        throw ParseError("trailing tokens after tt line");
    if (hex.size() != (len + 3) / 4)
        throw ParseError("tt hex length does not match declared bit count");
    BitString r(len);
    for (size_t i = 0; i < hex.size(); ++i) {
        char c = hex[i];
        unsigned nib;
        if (c >= '0' && c <= '9')
            nib = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f')
            nib = static_cast<unsigned>(c - 'a') + 10;
        else if (c >= 'A' && c <= 'F')
            nib = static_cast<unsigned>(c - 'A') + 10;
        else
            throw ParseError("bad hex digit in tt line");
        for (size_t j = 0; j < 4; ++j) {
            uint8_t bit = static_cast<uint8_t>((nib >> (3 - j)) & 1);
            size_t pos = 4 * i + j;
            if (pos < len)
                r.bits_[pos] = bit;
            else if (bit)
                throw ParseError("nonzero pad bit in tt line");
        }
    }
    return r;
}

} // namespace avoidkit
