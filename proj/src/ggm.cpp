#include "avoidkit/ggm.hpp"

#include "avoidkit/errors.hpp"
#include "avoidkit/intmath.hpp"

namespace avoidkit {

TreeShape TreeShape::make(unsigned n, uint64_t T) {
    if (n == 0)
        throw ParameterError("tree block width must be positive");
    if (T < 4ull * n)
        throw ParameterError("tree target length must satisfy T >= 4n");
    TreeShape s;
    s.n = n;
    s.T = T;
    s.k = 0;
    while ((static_cast<uint64_t>(n) << s.k) < T) {
        ++s.k;
        if (s.k >= 62)
            throw CapacityError("tree depth overflow");
    }
    s.pad = (static_cast<uint64_t>(n) << s.k) - T;
    return s;
}

std::pair<unsigned, uint64_t> TreeShape::node_at(uint64_t lex_index) const {
    if (lex_index >= node_count())
        throw InputShapeError("node index out of range");
    unsigned level = floor_log2(lex_index + 1);
    return {level, lex_index + 1 - (1ull << level)};
}

namespace {

void check_doubling(const Circuit& c) {
    if (c.n_out() != 2 * c.n_in() || c.n_in() == 0)
        throw InputShapeError("GGM expects a circuit mapping n -> 2n");
}

} // namespace

std::vector<BitString> ggm_node_labels(const Circuit& c, uint64_t T, const BitString& x,
                                       uint64_t materialize_cap) {
    check_doubling(c);
    if (x.size() != c.n_in())
        throw InputShapeError("GGM seed width mismatch");
    TreeShape s = TreeShape::make(c.n_in(), T);
    if (s.padded_len() > materialize_cap)
        throw CapacityError("GGM tree exceeds materialization cap");

    std::vector<BitString> labels(s.node_count());
    labels[0] = x;
    for (unsigned i = 0; i < s.k; ++i) {
        for (uint64_t j = 0; j < (1ull << i); ++j) {
            BitString both = c.eval(labels[s.lex_index(i, j)]);
            labels[s.lex_index(i + 1, 2 * j)] = both.slice(0, s.n);
            labels[s.lex_index(i + 1, 2 * j + 1)] = both.slice(s.n, 2ull * s.n);
        }
    }
    return labels;
}

BitString ggm_full(const Circuit& c, uint64_t T, const BitString& x,
                   uint64_t materialize_cap) {
    TreeShape s = TreeShape::make(c.n_in(), T);
    std::vector<BitString> labels = ggm_node_labels(c, T, x, materialize_cap);
    BitString out;
    for (uint64_t j = 0; j < s.leaves(); ++j)
        out.append(labels[s.lex_index(s.k, j)]);
    return out.slice(0, T);
}

uint8_t ggm_eval(const Circuit& c, uint64_t T, const BitString& x, uint64_t i,
                 uint64_t* eval_count) {
    check_doubling(c);
    if (x.size() != c.n_in())
        throw InputShapeError("GGM seed width mismatch");
    TreeShape s = TreeShape::make(c.n_in(), T);
    if (i >= T)
        throw InputShapeError("GGM bit index out of range");

    uint64_t leaf = i / s.n;
    unsigned off = static_cast<unsigned>(i % s.n);
    uint64_t count = 0;
    BitString v = x;
    // Walk from the root following the bits of `leaf`, top branch first.
    for (unsigned level = 0; level < s.k; ++level) {
        BitString both = c.eval(v);
        ++count;
        bool right = (leaf >> (s.k - 1 - level)) & 1;
        v = right ? both.slice(s.n, 2ull * s.n) : both.slice(0, s.n);
    }
    if (eval_count)
        *eval_count = count;
    return v[off];
}

Circuit ggm_unrolled_circuit(const Circuit& c, uint64_t T, uint64_t gate_cap) {
    check_doubling(c);
    TreeShape s = TreeShape::make(c.n_in(), T);
    uint64_t copies = s.leaves() - 1;
    if (copies * (c.size() + 1) > gate_cap)
        throw CapacityError("unrolled GGM circuit exceeds gate cap");

    Circuit d(c.n_in());
    std::vector<std::vector<uint32_t>> level(s.node_count());
    level[0].resize(s.n);
    for (unsigned i = 0; i < s.n; ++i)
        level[0][i] = i;
    for (unsigned i = 0; i < s.k; ++i) {
        for (uint64_t j = 0; j < (1ull << i); ++j) {
            auto outs = inline_subcircuit(d, c, level[s.lex_index(i, j)]);
            level[s.lex_index(i + 1, 2 * j)].assign(outs.begin(), outs.begin() + s.n);
            level[s.lex_index(i + 1, 2 * j + 1)].assign(outs.begin() + s.n, outs.end());
        }
    }
    uint64_t emitted = 0;
    for (uint64_t j = 0; j < s.leaves() && emitted < T; ++j)
        for (unsigned b = 0; b < s.n && emitted < T; ++b, ++emitted)
            d.add_output(level[s.lex_index(s.k, j)][b]);
    return d;
}

} // namespace avoidkit
