#include "avoidkit/stretch.hpp"

#include "avoidkit/errors.hpp"
#include "avoidkit/oracle.hpp"

namespace avoidkit {

Circuit stretch_double(const Circuit& c) {
    unsigned n = c.n_in();
    if (c.n_out() != n + 1)
        throw InputShapeError("stretch_double expects C: n -> n+1");
    if (n < 2)
        throw InputShapeError("stretch_double needs n >= 2");

    Circuit d(n);
    std::vector<uint32_t> cur(n);
    for (unsigned i = 0; i < n; ++i)
        cur[i] = i;
    cur = inline_subcircuit(d, c, cur); // n+1 wires
    for (unsigned stage = 1; stage < n; ++stage) {
        std::vector<uint32_t> head(cur.begin(), cur.begin() + n);
        std::vector<uint32_t> next = inline_subcircuit(d, c, head);
        next.insert(next.end(), cur.begin() + n, cur.end());
        cur = std::move(next); // n+stage+1 wires
    }
    for (uint32_t ref : cur)
        d.add_output(ref);
    return d;
}

BitString stretch_backmap(const NpOracle& oracle, const Circuit& c, const BitString& y) {
    unsigned n = c.n_in();
    if (c.n_out() != n + 1)
        throw InputShapeError("stretch_backmap expects C: n -> n+1");
    if (y.size() != 2ull * n)
        throw InputShapeError("stretch_backmap expects |y| = 2n");

    BitString w = y;
    for (unsigned stage = n - 1; stage >= 1; --stage) {
        // w is the candidate non-output of stage `stage`; split into the
        // C-image head and the carried suffix.
        BitString head = w.slice(0, n + 1);
        BitString tail = w.slice(n + 1, w.size());
        auto u = oracle.lex_first_preimage(c, head);
        if (!u)
            return head;
        w = *u + tail;
    }
    if (oracle.has_preimage(c, w))
        throw ContractViolation("stretch_backmap: input was inside Range(D)");
    return w;
}

} // namespace avoidkit
