#include "avoidkit/universal.hpp"

#include <vector>

#include "avoidkit/errors.hpp"
#include "avoidkit/intmath.hpp"

namespace avoidkit {

unsigned TtGenSpec::operand_bits() const {
    return ceil_log2(static_cast<uint64_t>(arity) + size_bound);
}

uint64_t TtGenSpec::description_length() const {
    return static_cast<uint64_t>(size_bound) * (3 + 2ull * operand_bits());
}

namespace {

struct SlotFields {
    unsigned kind;
    uint64_t a;
    uint64_t b;
};

SlotFields read_slot(const TtGenSpec& spec, const BitString& d, unsigned t) {
    unsigned w = spec.operand_bits();
    uint64_t base = static_cast<uint64_t>(t) * (3 + 2ull * w);
    SlotFields f{};
    for (unsigned i = 0; i < 3; ++i)
        f.kind = (f.kind << 1) | d[base + i];
    for (unsigned i = 0; i < w; ++i)
        f.a = (f.a << 1) | d[base + 3 + i];
    for (unsigned i = 0; i < w; ++i)
        f.b = (f.b << 1) | d[base + 3 + w + i];
    return f;
}

} // namespace

std::optional<Circuit> decode_description(const TtGenSpec& spec, const BitString& d) {
    if (d.size() != spec.description_length())
        throw InputShapeError("description length mismatch");
    Circuit c(spec.arity);
    for (unsigned t = 0; t < spec.size_bound; ++t) {
        SlotFields f = read_slot(spec, d, t);
        if (f.kind > 5)
            return std::nullopt;
        auto kind = static_cast<GateKind>(f.kind);
        unsigned ar = gate_arity(kind);
        uint64_t limit = spec.arity + t;
        if (ar >= 1 && f.a >= limit)
            return std::nullopt;
        if (ar >= 2 && f.b >= limit)
            return std::nullopt;
        c.add_gate(kind, static_cast<uint32_t>(f.a), static_cast<uint32_t>(f.b));
    }
    c.add_output(c.gate_ref(spec.size_bound - 1));
    return c;
}

BitString encode_description(const TtGenSpec& spec, const Circuit& c) {
    if (c.n_in() != spec.arity)
        throw InputShapeError("encode_description: arity mismatch");
    if (c.n_out() != 1)
        throw InputShapeError("encode_description: need a single-output circuit");
    if (c.size() > spec.size_bound)
        throw InputShapeError("encode_description: too many gates");

    std::vector<SlotFields> slots;
    slots.reserve(spec.size_bound);
    for (const Gate& g : c.gates())
        slots.push_back({static_cast<unsigned>(g.kind), g.a, g.b});

    uint32_t out_ref = c.outputs()[0];
    bool out_is_last_gate = !c.gates().empty() && out_ref == c.gate_ref(c.size() - 1);
    if (slots.size() == spec.size_bound) {
        if (!out_is_last_gate)
            throw InputShapeError(
                "encode_description: output must be the last gate when all slots are used");
    } else {
        // Pad with value-preserving duplicate-AND slots from the output wire.
        uint64_t carry = out_ref;
        while (slots.size() < spec.size_bound) {
            slots.push_back({static_cast<unsigned>(GateKind::And), carry, carry});
            carry = spec.arity + slots.size() - 1;
        }
    }

    unsigned w = spec.operand_bits();
    BitString d(spec.description_length());
    for (unsigned t = 0; t < spec.size_bound; ++t) {
        uint64_t base = static_cast<uint64_t>(t) * (3 + 2ull * w);
        for (unsigned i = 0; i < 3; ++i)
            d.set(base + i, (slots[t].kind >> (2 - i)) & 1);
        for (unsigned i = 0; i < w; ++i)
            d.set(base + 3 + i, (slots[t].a >> (w - 1 - i)) & 1);
        for (unsigned i = 0; i < w; ++i)
            d.set(base + 3 + w + i, (slots[t].b >> (w - 1 - i)) & 1);
    }
    return d;
}

namespace {

// Gate-building helpers used by the generator construction.
struct Builder {
    Circuit& c;
    uint32_t c0;
    uint32_t c1;

    uint32_t mux2(uint32_t s, uint32_t a0, uint32_t a1) {
        uint32_t ns = c.add_gate(GateKind::Not, s);
        uint32_t t0 = c.add_gate(GateKind::And, ns, a0);
        uint32_t t1 = c.add_gate(GateKind::And, s, a1);
        return c.add_gate(GateKind::Or, t0, t1);
    }

    // Select bits are big-endian; candidate list is padded to a power of two.
    uint32_t mux_tree(const std::vector<uint32_t>& sel,
                      std::vector<uint32_t> cands) {
        size_t full = 1ull << sel.size();
        while (cands.size() < full)
            cands.push_back(c0);
        for (size_t level = sel.size(); level-- > 0;) {
            std::vector<uint32_t> next(cands.size() / 2);
            for (size_t i = 0; i < next.size(); ++i)
                next[i] = mux2(sel[level], cands[2 * i], cands[2 * i + 1]);
            cands = std::move(next);
        }
        return cands[0];
    }

    // 1 iff the value of the big-endian bits is < K.
    uint32_t lt_const(const std::vector<uint32_t>& bits, uint64_t K) {
        if (K >= (1ull << bits.size()))
            return c1;
        uint32_t lt = c0;
        uint32_t prefix_eq = c1;
        for (size_t i = 0; i < bits.size(); ++i) {
            unsigned kbit = (K >> (bits.size() - 1 - i)) & 1;
            if (kbit == 1) {
                uint32_t nb = c.add_gate(GateKind::Not, bits[i]);
                uint32_t hit = c.add_gate(GateKind::And, prefix_eq, nb);
                lt = c.add_gate(GateKind::Or, lt, hit);
                prefix_eq = c.add_gate(GateKind::And, prefix_eq, bits[i]);
            } else {
                uint32_t nb = c.add_gate(GateKind::Not, bits[i]);
                prefix_eq = c.add_gate(GateKind::And, prefix_eq, nb);
            }
        }
        return lt;
    }

    // 1 iff the big-endian bits equal the constant K.
    uint32_t eq_const(const std::vector<uint32_t>& bits, uint64_t K) {
        uint32_t acc = c1;
        for (size_t i = 0; i < bits.size(); ++i) {
            unsigned kbit = (K >> (bits.size() - 1 - i)) & 1;
            uint32_t lit = kbit ? bits[i] : c.add_gate(GateKind::Not, bits[i]);
            acc = c.add_gate(GateKind::And, acc, lit);
        }
        return acc;
    }
};

} // namespace

Circuit build_tt_generator(const TtGenSpec& spec) {
    if (spec.arity < 1 || spec.size_bound < 1)
        throw ParameterError("truth-table generator needs arity >= 1 and size >= 1");
    if (spec.arity > spec.max_arity_cap)
        throw CapacityError("truth-table generator arity exceeds cap");
    uint64_t L = spec.description_length();
    if (L > spec.max_description_cap)
        throw CapacityError("truth-table generator description length exceeds cap");

    unsigned n = spec.arity;
    unsigned s = spec.size_bound;
    unsigned w = spec.operand_bits();
    uint64_t rows = 1ull << n;

    Circuit tt(static_cast<unsigned>(L));
    uint32_t c0 = tt.add_gate(GateKind::Const0);
    uint32_t c1 = tt.add_gate(GateKind::Const1);
    Builder bld{tt, c0, c1};

    // Field bit references per slot.
    std::vector<std::vector<uint32_t>> kind_bits(s), a_bits(s), b_bits(s);
    for (unsigned t = 0; t < s; ++t) {
        uint64_t base = static_cast<uint64_t>(t) * (3 + 2ull * w);
        for (unsigned i = 0; i < 3; ++i)
            kind_bits[t].push_back(static_cast<uint32_t>(base + i));
        for (unsigned i = 0; i < w; ++i)
            a_bits[t].push_back(static_cast<uint32_t>(base + 3 + i));
        for (unsigned i = 0; i < w; ++i)
            b_bits[t].push_back(static_cast<uint32_t>(base + 3 + w + i));
    }

    // Validity of the whole description.
    uint32_t valid = c1;
    std::vector<std::vector<uint32_t>> is_kind(s);
    for (unsigned t = 0; t < s; ++t) {
        for (unsigned kv = 0; kv < 6; ++kv)
            is_kind[t].push_back(bld.eq_const(kind_bits[t], kv));
        uint32_t a_ok = bld.lt_const(a_bits[t], n + t);
        uint32_t b_ok = bld.lt_const(b_bits[t], n + t);
        uint32_t two_op = tt.add_gate(GateKind::Or, is_kind[t][0], is_kind[t][1]);
        two_op = tt.add_gate(GateKind::Or, two_op, is_kind[t][3]);
        uint32_t both_ok = tt.add_gate(GateKind::And, a_ok, b_ok);
        uint32_t v2 = tt.add_gate(GateKind::And, two_op, both_ok);
        uint32_t v1 = tt.add_gate(GateKind::And, is_kind[t][2], a_ok);
        uint32_t vc = tt.add_gate(GateKind::Or, is_kind[t][4], is_kind[t][5]);
        uint32_t vt = tt.add_gate(GateKind::Or, v2, v1);
        vt = tt.add_gate(GateKind::Or, vt, vc);
        valid = tt.add_gate(GateKind::And, valid, vt);
    }

    // One simulated evaluation per truth-table row.
    std::vector<uint32_t> row_out(rows);
    for (uint64_t r = 0; r < rows; ++r) {
        std::vector<uint32_t> values; // inputs of the described circuit, then slots
        for (unsigned i = 0; i < n; ++i)
            values.push_back(((r >> (n - 1 - i)) & 1) ? c1 : c0);
        for (unsigned t = 0; t < s; ++t) {
            uint32_t sel_a = bld.mux_tree(a_bits[t], values);
            uint32_t sel_b = bld.mux_tree(b_bits[t], values);
            uint32_t and_v = tt.add_gate(GateKind::And, sel_a, sel_b);
            uint32_t or_v = tt.add_gate(GateKind::Or, sel_a, sel_b);
            uint32_t not_v = tt.add_gate(GateKind::Not, sel_a);
            uint32_t xor_v = tt.add_gate(GateKind::Xor, sel_a, sel_b);
            uint32_t v = bld.mux_tree(
                kind_bits[t], {and_v, or_v, not_v, xor_v, c0, c1, c0, c0});
            values.push_back(v);
        }
        row_out[r] = tt.add_gate(GateKind::And, values.back(), valid);
    }
    for (uint64_t r = 0; r < rows; ++r)
        tt.add_output(row_out[r]);
    return tt;
}

} // namespace avoidkit
