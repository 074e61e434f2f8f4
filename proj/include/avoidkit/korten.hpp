#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "avoidkit/bit_oracle.hpp"
#include "avoidkit/bitstring.hpp"
#include "avoidkit/circuit.hpp"
#include "avoidkit/ggm.hpp"
#include "avoidkit/oracle.hpp"

namespace avoidkit {

// Stop point plus the node labels produced by the reduction. Labels are in
// level order; nullopt encodes an unfilled node.
struct HistoryRecord {
    TreeShape shape;
    std::optional<std::pair<unsigned, uint64_t>> stop; // nullopt = completed run
    std::vector<std::optional<BitString>> labels;
};

struct KortenResult {
    std::optional<BitString> avoid; // 2n bits when f is outside the GGM range
    HistoryRecord record;
};

// Korten's reduction: reconstruct the tree bottom-up (levels k-1..0, within a
// level from the rightmost node) by lex-first preimage queries; the first
// fill that fails yields a non-output of C.
KortenResult korten_run(const NpOracle& oracle, const Circuit& c, const BitString& f);

// --- serialized history ------------------------------------------------
//
// Layout of the 5T-bit string:
//   [i*: F bits][j*: F bits][enc(v) for all nodes in lex order][zero pad]
// with F = ceil(log2 T) and enc(v) = 0 o v for a filled node, 1^{n+1} for an
// unfilled one.

unsigned history_stop_field_bits(uint64_t T);
uint64_t history_length(uint64_t T); // exactly 5T
uint64_t history_pad_start(unsigned n, uint64_t T);

BitString serialize_history(const HistoryRecord& rec); // throws on completed runs
HistoryRecord decode_history(unsigned n, uint64_t T, const BitString& h);

// Runs the reduction and serializes; ContractViolation when f is in range.
BitString history_build(const NpOracle& oracle, const Circuit& c, const BitString& f);

// --- accessors over an untrusted history oracle ------------------------

// Bit i of the embedded input f; reads exactly one oracle bit.
uint8_t history_input_bit(const BitOracle& h, unsigned n, uint64_t T, uint64_t i);

// The reduction's output: the concatenated children of the stop node.
// Reads the stop fields plus two label blocks.
BitString history_output(const BitOracle& h, unsigned n, uint64_t T);

// View of the embedded input: (f)_i = history_input_bit(h, i).
class HistoryInputView final : public BitOracle {
public:
    HistoryInputView(const BitOracle& h, unsigned n, uint64_t T)
        : h_(h), n_(n), T_(T) {}

    uint64_t size() const override { return T_; }

protected:
    uint8_t get(uint64_t i) const override {
        return i < T_ ? history_input_bit(h_, n_, T_, i) : 0;
    }

private:
    const BitOracle& h_;
    unsigned n_;
    uint64_t T_;
};

// --- Pi1 verification ---------------------------------------------------
//
// Acceptance means "every witness w in {0,1}^{5(ceil(log2 T)+n)} passes".
// A witness names one local check:
//   kind 0  leaf        node (k, b): enc label equals 0 o f-block b
//   kind 1  child       node (a, b) past the stop point: C(label) = children
//   kind 2  lexmin      node (a, b), x below the label: C(x) != children
//   kind 3  stop        stop fields valid and C(x) != children of stop node
//   kind 4  bot         node (a, b) at or before the stop point is unfilled
//   kind 5  pad         bit (a o b) of the zero-pad region is 0
// Witnesses that fail to decode pass vacuously, keeping the quantifier over
// a fixed-width hypercube.

struct Pi1Witness {
    unsigned kind = 0;
    uint64_t a = 0;
    uint64_t b = 0;
    BitString x; // n bits; used by kinds 2 and 3

    BitString encode(unsigned n, uint64_t T) const;
};

uint64_t pi1_witness_bits(unsigned n, uint64_t T); // 5 * (ceil(log2 T) + n)

// Single-witness check; the verifier reads poly(n) oracle bits.
bool pi1_check(const BitOracle& f, const BitOracle& h, const Circuit& c,
               uint64_t T, const BitString& witness);

// All canonical witnesses for the given shape (every non-canonical witness
// passes vacuously, so their conjunction decides full acceptance).
std::vector<Pi1Witness> pi1_canonical_witnesses(unsigned n, uint64_t T);

struct Pi1Outcome {
    bool accepted = true;
    std::optional<BitString> failing_witness;
};

// Conjunction over every witness; desk scale only.
Pi1Outcome pi1_verify_all(const BitOracle& f, const BitOracle& h, const Circuit& c,
                          uint64_t T);

} // namespace avoidkit
