#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "avoidkit/bit_oracle.hpp"
#include "avoidkit/bitstring.hpp"
#include "avoidkit/circuit.hpp"

namespace avoidkit {

// Shape of the expansion tree for stretching n bits to T bits: the root is on
// level 0, leaves on level k, and labels are n-bit blocks.
struct TreeShape {
    unsigned n = 0;
    uint64_t T = 0;
    unsigned k = 0;    // smallest k with 2^k * n >= T
    uint64_t pad = 0;  // 2^k * n - T trailing zero bits

    static TreeShape make(unsigned n, uint64_t T);

    uint64_t leaves() const { return 1ull << k; }
    uint64_t padded_len() const { return leaves() * n; }
    uint64_t node_count() const { return (2ull << k) - 1; }

    bool node_valid(unsigned level, uint64_t j) const {
        return level <= k && j < (1ull << level);
    }
    // Level-order position; coincides with the lexicographic order on (i, j).
    uint64_t lex_index(unsigned level, uint64_t j) const {
        return (1ull << level) - 1 + j;
    }
    std::pair<unsigned, uint64_t> node_at(uint64_t lex_index) const;
    // Position in the reverse lexicographic enumeration (largest pair first).
    uint64_t rev_rank(unsigned level, uint64_t j) const {
        return node_count() - 1 - lex_index(level, j);
    }
};

// Full expansion: label the tree top-down from seed x and return the first T
// bits of the leaf row. materialize_cap bounds 2^k * n.
BitString ggm_full(const Circuit& c, uint64_t T, const BitString& x,
                   uint64_t materialize_cap = 1ull << 24);

// All node labels in level order (root first); used by tests that inspect the
// tree relations directly.
std::vector<BitString> ggm_node_labels(const Circuit& c, uint64_t T, const BitString& x,
                                       uint64_t materialize_cap = 1ull << 24);

// Bit i of ggm_full(c, T, x), computed with exactly k applications of C along
// the root-to-leaf path. eval_count, when given, receives that number.
uint8_t ggm_eval(const Circuit& c, uint64_t T, const BitString& x, uint64_t i,
                 uint64_t* eval_count = nullptr);

// Point-query view of a GGM output; never materializes the tree.
class GgmBits final : public BitOracle {
public:
    GgmBits(Circuit c, uint64_t T, BitString seed)
        : c_(std::move(c)), T_(T), seed_(std::move(seed)) {}

    uint64_t size() const override { return T_; }

protected:
    uint8_t get(uint64_t i) const override { return ggm_eval(c_, T_, seed_, i); }

private:
    Circuit c_;
    uint64_t T_;
    BitString seed_;
};

// The unrolled tree as an explicit circuit with n inputs and T outputs;
// backs the sat route of in_range_ggm.
Circuit ggm_unrolled_circuit(const Circuit& c, uint64_t T, uint64_t gate_cap = 1ull << 22);

} // namespace avoidkit
