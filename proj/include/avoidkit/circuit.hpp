#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "avoidkit/bitstring.hpp"

namespace avoidkit {

class Rng;

enum class GateKind : uint8_t { And, Or, Not, Xor, Const0, Const1 };

const char* gate_kind_name(GateKind k);
unsigned gate_arity(GateKind k);

// Operands and outputs are wire references:
//   0 .. n_in-1          the circuit inputs
//   n_in + g             the output of gate g
struct Gate {
    GateKind kind;
    uint32_t a = 0;
    uint32_t b = 0;

    bool operator==(const Gate&) const = default;
};

// Multi-output Boolean gate DAG in topological order. Gates may only
// reference inputs and strictly earlier gates, which add_gate enforces.
class Circuit {
public:
    explicit Circuit(unsigned n_in) : n_in_(n_in) {}

    unsigned n_in() const { return n_in_; }
    unsigned n_out() const { return static_cast<unsigned>(outputs_.size()); }
    size_t size() const { return gates_.size(); }

    const std::vector<Gate>& gates() const { return gates_; }
    const std::vector<uint32_t>& outputs() const { return outputs_; }

    uint32_t input_ref(unsigned i) const;
    uint32_t gate_ref(size_t g) const { return n_in_ + static_cast<uint32_t>(g); }

    // Returns the wire reference of the new gate.
    uint32_t add_gate(GateKind kind, uint32_t a = 0, uint32_t b = 0);
    void add_output(uint32_t ref);

    BitString eval(const BitString& x) const;

    // Evaluates with wire values already laid out; shared by eval and the
    // oracle backends. `wires` must have n_in leading input values.
    void eval_wires(std::vector<uint8_t>& wires) const;

private:
    void check_ref(uint32_t ref, size_t gate_count) const;

    unsigned n_in_;
    std::vector<Gate> gates_;
    std::vector<uint32_t> outputs_;
};

// Canonical text form:
//   circuit <n_in> <n_out>
//   g<k> = <KIND> <ref> [<ref>]
//   outputs <ref> ... <ref>
// where <ref> is x<i> or g<j> with j < k. Blank lines and '#' comments
// are accepted on input and never emitted.
std::string serialize_circuit(const Circuit& c);
Circuit parse_circuit(std::string_view text);
Circuit load_circuit_file(const std::string& path);

// Instantiates `sub` inside `dst`, feeding its inputs from `input_refs`.
// Returns the wire references of sub's outputs within dst.
std::vector<uint32_t> inline_subcircuit(Circuit& dst, const Circuit& sub,
                                        std::span<const uint32_t> input_refs);

// C(x) = x o x; the running example circuit of the whole library.
Circuit make_dup(unsigned n);

// Random gate DAG with the given shape; outputs sampled over all wires.
Circuit make_random_circuit(unsigned n_in, unsigned n_out, unsigned n_gates, Rng& rng);

} // namespace avoidkit
