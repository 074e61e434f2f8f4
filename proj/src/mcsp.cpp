#include "avoidkit/mcsp.hpp"

#include <vector>

#include "avoidkit/errors.hpp"
#include "avoidkit/intmath.hpp"

namespace avoidkit {

namespace {

// Truth tables are packed as row masks: bit i = value on assignment
// from_index(i, n). All enumeration below works on whole masks at once.
struct Enumerator {
    unsigned n;
    uint64_t rows_mask;
    uint64_t target;
    std::vector<uint64_t> wires; // input masks then chosen gate masks

    bool search(unsigned remaining) {
        if (remaining == 0)
            return wires.back() == target;
        size_t span = wires.size();
        for (unsigned kind = 0; kind < 6; ++kind) {
            switch (static_cast<GateShape>(kind)) {
            case GateShape::And:
            case GateShape::Or:
            case GateShape::Xor:
                for (size_t a = 0; a < span; ++a)
                    for (size_t b = a; b < span; ++b) {
                        uint64_t v = combine(kind, wires[a], wires[b]);
                        if (try_push(v, remaining))
                            return true;
                    }
                break;
            case GateShape::Not:
                for (size_t a = 0; a < span; ++a)
                    if (try_push((~wires[a]) & rows_mask, remaining))
                        return true;
                break;
            case GateShape::Const0:
                if (try_push(0, remaining))
                    return true;
                break;
            case GateShape::Const1:
                if (try_push(rows_mask, remaining))
                    return true;
                break;
            }
        }
        return false;
    }

private:
    enum class GateShape { And, Or, Not, Xor, Const0, Const1 };

    uint64_t combine(unsigned kind, uint64_t a, uint64_t b) const {
        switch (static_cast<GateShape>(kind)) {
        case GateShape::And: return a & b;
        case GateShape::Or: return a | b;
        case GateShape::Xor: return a ^ b;
        default: throw InternalError("combine on non-binary kind");
        }
    }

    bool try_push(uint64_t v, unsigned remaining) {
        wires.push_back(v);
        bool found = search(remaining - 1);
        wires.pop_back();
        return found;
    }
};

} // namespace

bool mcsp_brute(const BitString& tt, unsigned s, const McspCaps& caps) {
    if (tt.size() == 0 || !is_pow2(tt.size()))
        throw InputShapeError("truth table length must be a power of two");
    unsigned n = floor_log2(tt.size());
    if (n > caps.max_arity)
        throw CapacityError("mcsp_brute: table arity exceeds cap");
    if (s > caps.max_size)
        throw CapacityError("mcsp_brute: size bound exceeds cap");

    uint64_t rows = tt.size();
    uint64_t rows_mask = rows == 64 ? ~0ull : (1ull << rows) - 1;
    uint64_t target = 0;
    for (uint64_t i = 0; i < rows; ++i)
        if (tt[i])
            target |= 1ull << i;

    std::vector<uint64_t> input_masks(n);
    for (unsigned j = 0; j < n; ++j)
        for (uint64_t i = 0; i < rows; ++i)
            if ((i >> (n - 1 - j)) & 1)
                input_masks[j] |= 1ull << i;

    // Size 0: constants and projections.
    if (target == 0 || target == rows_mask)
        return true;
    for (uint64_t m : input_masks)
        if (target == m)
            return true;

    for (unsigned size = 1; size <= s; ++size) {
        Enumerator e{n, rows_mask, target, input_masks};
        if (e.search(size))
            return true;
    }
    return false;
}

} // namespace avoidkit
