#pragma once

#include "avoidkit/circuit.hpp"

namespace avoidkit {

class NpOracle;

// Converts a one-bit-stretch circuit C: n -> n+1 into a doubling circuit
// D: n -> 2n by chaining stages S_i: {0,1}^{n+i} -> {0,1}^{n+i+1} with
// S_i(z) = C(z[0,n)) o z[n,n+i).
Circuit stretch_double(const Circuit& c);

// Given y outside Range(D), walks the stage chain downward and returns a
// string outside Range(C), using lex-first-preimage oracle queries. Never
// returns a string inside Range(C); throws ContractViolation when the walk
// bottoms out on a range member (which implies y was in Range(D)).
BitString stretch_backmap(const NpOracle& oracle, const Circuit& c, const BitString& y);

} // namespace avoidkit
