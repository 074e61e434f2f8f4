#pragma once

#include <bit>
#include <cstdint>

#include "avoidkit/errors.hpp"

namespace avoidkit {

// Smallest k with 2^k >= x. x must be >= 1.
inline unsigned ceil_log2(uint64_t x) {
    if (x == 0)
        throw ParameterError("ceil_log2(0)");
    return x == 1 ? 0 : static_cast<unsigned>(std::bit_width(x - 1));
}

inline unsigned floor_log2(uint64_t x) {
    if (x == 0)
        throw ParameterError("floor_log2(0)");
    return static_cast<unsigned>(std::bit_width(x)) - 1;
}

inline bool is_pow2(uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

inline uint64_t checked_pow(uint64_t base, unsigned exp, const char* what) {
    uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base)
            throw CapacityError(std::string(what) + ": 64-bit overflow");
        r *= base;
    }
    return r;
}

} // namespace avoidkit
