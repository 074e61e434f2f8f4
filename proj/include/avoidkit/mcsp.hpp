#pragma once

#include "avoidkit/bitstring.hpp"

namespace avoidkit {

struct McspCaps {
    unsigned max_arity = 3;
    unsigned max_size = 4;
};

// True iff some circuit with at most s gates over {AND, OR, NOT, XOR, CONST}
// (fan-in <= 2, output = last gate) computes the 2^n-bit truth table, where
// size 0 covers exactly the constants and input projections. Row i of the
// table is the function value on from_index(i, n). Exhaustive enumeration;
// monotone in s by construction.
bool mcsp_brute(const BitString& tt, unsigned s, const McspCaps& caps = {});

} // namespace avoidkit
