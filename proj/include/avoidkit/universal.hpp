#pragma once

#include <cstdint>
#include <optional>

#include "avoidkit/circuit.hpp"

namespace avoidkit {

// Parameters of the truth-table generator circuit: a universal evaluator
// mapping gate-list descriptions of arity-n circuits with exactly `size_bound`
// gate slots to their 2^n-bit truth tables.
//
// Description layout, per gate slot t in 0..s-1 (all fields big-endian):
//   [kind: 3 bits][operand a: W bits][operand b: W bits],  W = ceil(log2(n+s))
// Kind values follow GateKind (AND=0, OR=1, NOT=2, XOR=3, CONST0=4, CONST1=5).
// Operand values reference inputs 0..n-1 and earlier slots n..n+t-1; fields a
// gate does not use (b for NOT, both for CONST) are ignored. The described
// circuit's output is the value of the last slot. A description is invalid if
// any kind field is 6 or 7, or any used operand field is out of range; invalid
// descriptions evaluate to the all-zeros table.
struct TtGenSpec {
    unsigned arity = 1;      // n
    unsigned size_bound = 1; // s

    unsigned operand_bits() const;
    uint64_t description_length() const; // L = s * (3 + 2W)

    // Resource caps for materializing the generator as a circuit.
    unsigned max_arity_cap = 10;
    uint64_t max_description_cap = 4096;
};

// Builds the generator circuit TT with n_in = L and n_out = 2^n. Truth table
// row i holds the described circuit's value on the input from_index(i, n).
Circuit build_tt_generator(const TtGenSpec& spec);

// Reference decoder for the description format above. Returns the described
// single-output circuit, or nullopt when the description is invalid.
std::optional<Circuit> decode_description(const TtGenSpec& spec, const BitString& d);

// Encodes a circuit into a description; the circuit must have arity
// spec.arity, at most spec.size_bound gates, and a single output equal to its
// last gate (or, with zero gates, be padded via duplicate-AND slots from an
// output that references a wire). Throws InputShapeError when impossible.
BitString encode_description(const TtGenSpec& spec, const Circuit& c);

} // namespace avoidkit
