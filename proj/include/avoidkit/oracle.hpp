#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "avoidkit/bitstring.hpp"
#include "avoidkit/circuit.hpp"

namespace avoidkit {

enum class BackendKind { Exhaustive, Sat };

struct OracleCaps {
    unsigned max_enum_width = 26;           // exhaustive backend
    uint64_t sat_decision_budget = 20'000'000;
    uint64_t ggm_gate_cap = 1ull << 22;     // sat-route tree unrolling
    uint64_t ggm_materialize_cap = 1ull << 24;
};

// Preimage-existence and lex-first-preimage queries about circuits, plus
// GGM-range membership. The two backends answer identically on every
// instance within caps; running out of budget raises ResourceError or
// CapacityError, never a wrong answer.
class NpOracle {
public:
    explicit NpOracle(BackendKind kind, OracleCaps caps = {})
        : kind_(kind), caps_(caps) {}

    // True iff some x extending `prefix` (which fixes the first bits of the
    // input) satisfies C(x) = y.
    bool has_preimage(const Circuit& c, const BitString& y,
                      const BitString& prefix = {}) const;

    // Lexicographically smallest x with C(x) = y, found by bit-by-bit prefix
    // search (at most n_in + 1 existence queries).
    std::optional<BitString> lex_first_preimage(const Circuit& c,
                                                const BitString& y) const;

    // True iff f (of length T) is an output of GGM_T[C].
    bool in_range_ggm(const Circuit& c, uint64_t T, const BitString& f) const;

    BackendKind kind() const { return kind_; }
    const OracleCaps& caps() const { return caps_; }
    uint64_t query_count() const { return queries_; }

private:
    bool has_preimage_exhaustive(const Circuit& c, const BitString& y,
                                 const BitString& prefix) const;
    bool has_preimage_sat(const Circuit& c, const BitString& y,
                          const BitString& prefix) const;

    BackendKind kind_;
    OracleCaps caps_;
    mutable uint64_t queries_ = 0;
};

// CNF of a preimage query in DIMACS form, for external-solver debugging.
void emit_preimage_dimacs(const Circuit& c, const BitString& y,
                          const BitString& prefix, std::ostream& out);

} // namespace avoidkit
