#include "avoidkit/korten.hpp"

#include "avoidkit/errors.hpp"
#include "avoidkit/intmath.hpp"

namespace avoidkit {

namespace {

void check_instance(const Circuit& c, const BitString& f) {
    if (c.n_out() != 2 * c.n_in() || c.n_in() == 0)
        throw InputShapeError("Korten expects a circuit mapping n -> 2n");
    if (f.size() < 4ull * c.n_in())
        throw InputShapeError("Korten expects |f| = T >= 4n");
}

} // namespace

KortenResult korten_run(const NpOracle& oracle, const Circuit& c, const BitString& f) {
    check_instance(c, f);
    unsigned n = c.n_in();
    TreeShape shape = TreeShape::make(n, f.size());

    HistoryRecord rec;
    rec.shape = shape;
    rec.labels.assign(shape.node_count(), std::nullopt);

    BitString padded = f.padded_to(shape.padded_len());
    for (uint64_t j = 0; j < shape.leaves(); ++j)
        rec.labels[shape.lex_index(shape.k, j)] =
            padded.slice(j * n, (j + 1) * n);

    for (unsigned level = shape.k; level-- > 0;) {
        for (uint64_t j = 1ull << level; j-- > 0;) {
            BitString children = *rec.labels[shape.lex_index(level + 1, 2 * j)] +
                                 *rec.labels[shape.lex_index(level + 1, 2 * j + 1)];
            auto u = oracle.lex_first_preimage(c, children);
            if (!u) {
                rec.stop = {level, j};
                return {children, std::move(rec)};
            }
            rec.labels[shape.lex_index(level, j)] = std::move(*u);
        }
    }
    return {std::nullopt, std::move(rec)};
}

unsigned history_stop_field_bits(uint64_t T) { return ceil_log2(T); }

uint64_t history_length(uint64_t T) { return 5 * T; }

uint64_t history_pad_start(unsigned n, uint64_t T) {
    TreeShape shape = TreeShape::make(n, T);
    return 2ull * history_stop_field_bits(T) + shape.node_count() * (n + 1ull);
}

BitString serialize_history(const HistoryRecord& rec) {
    if (!rec.stop)
        throw ContractViolation("completed runs have no serialized history");
    unsigned n = rec.shape.n;
    uint64_t T = rec.shape.T;
    unsigned F = history_stop_field_bits(T);
    if (history_pad_start(n, T) > history_length(T))
        throw CapacityError("history does not fit in 5T bits for this shape");

    BitString h(history_length(T));
    uint64_t pos = 0;
    auto put_field = [&](uint64_t v) {
        for (unsigned i = 0; i < F; ++i)
            h.set(pos++, (v >> (F - 1 - i)) & 1);
    };
    put_field(rec.stop->first);
    put_field(rec.stop->second);
    for (uint64_t idx = 0; idx < rec.shape.node_count(); ++idx) {
        const auto& label = rec.labels[idx];
        if (label) {
            h.set(pos++, 0);
            for (unsigned b = 0; b < n; ++b)
                h.set(pos++, (*label)[b]);
        } else {
            for (unsigned b = 0; b < n + 1u; ++b)
                h.set(pos++, 1);
        }
    }
    return h;
}

HistoryRecord decode_history(unsigned n, uint64_t T, const BitString& h) {
    if (h.size() != history_length(T))
        throw DecodeError("serialized history must have exactly 5T bits");
    TreeShape shape = TreeShape::make(n, T);
    unsigned F = history_stop_field_bits(T);

    uint64_t pos = 0;
    auto get_field = [&]() {
        uint64_t v = 0;
        for (unsigned i = 0; i < F; ++i)
            v = (v << 1) | h[pos++];
        return v;
    };
    uint64_t si = get_field();
    uint64_t sj = get_field();
    if (si >= shape.k || sj >= (1ull << si))
        throw DecodeError("stop fields out of range");

    HistoryRecord rec;
    rec.shape = shape;
    rec.stop = {static_cast<unsigned>(si), sj};
    rec.labels.assign(shape.node_count(), std::nullopt);
    for (uint64_t idx = 0; idx < shape.node_count(); ++idx) {
        uint8_t flag = h[pos];
        if (flag == 0) {
            BitString v(n);
            for (unsigned b = 0; b < n; ++b)
                v.set(b, h[pos + 1 + b]);
            rec.labels[idx] = std::move(v);
        } else {
            for (unsigned b = 1; b <= n; ++b)
                if (!h[pos + b])
                    throw DecodeError("label block is neither filled nor unfilled");
        }
        pos += n + 1u;
    }
    for (; pos < h.size(); ++pos)
        if (h[pos])
            throw DecodeError("nonzero pad bit in serialized history");
    return rec;
}

BitString history_build(const NpOracle& oracle, const Circuit& c, const BitString& f) {
    KortenResult r = korten_run(oracle, c, f);
    if (!r.avoid)
        throw ContractViolation("history_build: f is in the GGM range");
    return serialize_history(r.record);
}

// --- accessors ----------------------------------------------------------

namespace {

uint64_t label_offset(unsigned n, uint64_t T, uint64_t lex_index) {
    return 2ull * history_stop_field_bits(T) + lex_index * (n + 1ull);
}

enum class LabelTag { Bot, Valid, Malformed };

struct LabelRead {
    LabelTag tag;
    BitString value; // n bits when Valid
};

LabelRead read_label(const BitOracle& h, unsigned n, uint64_t T,
                     const TreeShape& shape, unsigned level, uint64_t j) {
    uint64_t off = label_offset(n, T, shape.lex_index(level, j));
    uint8_t flag = h.bit(off);
    BitString v(n);
    bool all_one = true;
    for (unsigned b = 0; b < n; ++b) {
        uint8_t bit = h.bit(off + 1 + b);
        v.set(b, bit);
        all_one = all_one && bit;
    }
    if (flag == 0)
        return {LabelTag::Valid, std::move(v)};
    if (all_one)
        return {LabelTag::Bot, {}};
    return {LabelTag::Malformed, {}};
}

std::optional<std::pair<unsigned, uint64_t>>
read_stop_fields(const BitOracle& h, uint64_t T, const TreeShape& shape) {
    unsigned F = history_stop_field_bits(T);
    uint64_t si = 0, sj = 0;
    for (unsigned i = 0; i < F; ++i)
        si = (si << 1) | h.bit(i);
    for (unsigned i = 0; i < F; ++i)
        sj = (sj << 1) | h.bit(F + i);
    if (si >= shape.k || sj >= (1ull << si))
        return std::nullopt;
    return std::make_pair(static_cast<unsigned>(si), sj);
}

} // namespace

uint8_t history_input_bit(const BitOracle& h, unsigned n, uint64_t T, uint64_t i) {
    if (i >= T)
        throw InputShapeError("history input index out of range");
    TreeShape shape = TreeShape::make(n, T);
    uint64_t leaf = i / n;
    uint64_t off = label_offset(n, T, shape.lex_index(shape.k, leaf));
    return h.bit(off + 1 + i % n);
}

BitString history_output(const BitOracle& h, unsigned n, uint64_t T) {
    TreeShape shape = TreeShape::make(n, T);
    auto stop = read_stop_fields(h, T, shape);
    if (!stop)
        throw DecodeError("history output: stop fields out of range");
    BitString out;
    for (unsigned side = 0; side < 2; ++side) {
        uint64_t off = label_offset(
            n, T, shape.lex_index(stop->first + 1, 2 * stop->second + side));
        for (unsigned b = 0; b < n; ++b)
            out.push_back(h.bit(off + 1 + b));
    }
    return out;
}

// --- Pi1 verification ----------------------------------------------------

uint64_t pi1_witness_bits(unsigned n, uint64_t T) {
    return 5ull * (history_stop_field_bits(T) + n);
}

BitString Pi1Witness::encode(unsigned n, uint64_t T) const {
    unsigned F = history_stop_field_bits(T);
    BitString w(pi1_witness_bits(n, T));
    uint64_t pos = 0;
    for (unsigned i = 0; i < 3; ++i)
        w.set(pos++, (kind >> (2 - i)) & 1);
    for (unsigned i = 0; i < F; ++i)
        w.set(pos++, (a >> (F - 1 - i)) & 1);
    for (unsigned i = 0; i < F; ++i)
        w.set(pos++, (b >> (F - 1 - i)) & 1);
    for (unsigned i = 0; i < n; ++i)
        w.set(pos++, i < x.size() ? x[i] : 0);
    return w;
}

namespace {

// Decodes a witness; nullopt means malformed (vacuous pass).
std::optional<Pi1Witness> decode_witness(unsigned n, uint64_t T,
                                         const TreeShape& shape,
                                         const BitString& w) {
    if (w.size() != pi1_witness_bits(n, T))
        throw InputShapeError("witness has the wrong width");
    unsigned F = history_stop_field_bits(T);
    uint64_t pos = 0;
    Pi1Witness out;
    for (unsigned i = 0; i < 3; ++i)
        out.kind = (out.kind << 1) | w[pos++];
    for (unsigned i = 0; i < F; ++i)
        out.a = (out.a << 1) | w[pos++];
    for (unsigned i = 0; i < F; ++i)
        out.b = (out.b << 1) | w[pos++];
    out.x = w.slice(pos, pos + n);
    pos += n;
    for (; pos < w.size(); ++pos)
        if (w[pos])
            return std::nullopt;

    bool x_zero = true;
    for (unsigned i = 0; i < n; ++i)
        x_zero = x_zero && !out.x[i];

    switch (out.kind) {
    case 0:
        if (out.a != shape.k || out.b >= shape.leaves() || !x_zero)
            return std::nullopt;
        return out;
    case 1:
        if (out.a >= shape.k || out.b >= (1ull << out.a) || !x_zero)
            return std::nullopt;
        return out;
    case 2:
        if (out.a >= shape.k || out.b >= (1ull << out.a))
            return std::nullopt;
        return out;
    case 3:
        if (out.a != 0 || out.b != 0)
            return std::nullopt;
        return out;
    case 4:
        if (!shape.node_valid(static_cast<unsigned>(out.a), out.b) || !x_zero)
            return std::nullopt;
        return out;
    case 5: {
        uint64_t idx = (out.a << F) | out.b;
        if (idx < history_pad_start(n, T) || idx >= history_length(T) || !x_zero)
            return std::nullopt;
        return out;
    }
    default:
        return std::nullopt;
    }
}

struct Pi1Context {
    const BitOracle& f;
    const BitOracle& h;
    const Circuit& c;
    unsigned n;
    uint64_t T;
    TreeShape shape;

    bool past_stop(unsigned level, uint64_t j,
                   const std::pair<unsigned, uint64_t>& stop) const {
        return std::make_pair(level, j) > stop;
    }

    // Children labels of (level, j); nullopt when either child is unusable.
    std::optional<BitString> children_value(unsigned level, uint64_t j) const {
        LabelRead l = read_label(h, n, T, shape, level + 1, 2 * j);
        LabelRead r = read_label(h, n, T, shape, level + 1, 2 * j + 1);
        if (l.tag != LabelTag::Valid || r.tag != LabelTag::Valid)
            return std::nullopt;
        return l.value + r.value;
    }
};

bool run_check(const Pi1Context& ctx, const Pi1Witness& w) {
    const TreeShape& shape = ctx.shape;
    switch (w.kind) {
    case 0: { // leaf consistency
        LabelRead lab = read_label(ctx.h, ctx.n, ctx.T, shape, shape.k, w.b);
        if (lab.tag != LabelTag::Valid)
            return false;
        for (unsigned bit = 0; bit < ctx.n; ++bit)
            if (lab.value[bit] != ctx.f.bit(w.b * ctx.n + bit))
                return false;
        return true;
    }
    case 1: { // child consistency past the stop point
        auto stop = read_stop_fields(ctx.h, ctx.T, shape);
        if (!stop)
            return true; // stop validity is kind 3's job
        auto level = static_cast<unsigned>(w.a);
        if (!ctx.past_stop(level, w.b, *stop))
            return true;
        LabelRead lab = read_label(ctx.h, ctx.n, ctx.T, shape, level, w.b);
        if (lab.tag != LabelTag::Valid)
            return false;
        auto children = ctx.children_value(level, w.b);
        return children && ctx.c.eval(lab.value) == *children;
    }
    case 2: { // lex minimality past the stop point
        auto stop = read_stop_fields(ctx.h, ctx.T, shape);
        if (!stop)
            return true;
        auto level = static_cast<unsigned>(w.a);
        if (!ctx.past_stop(level, w.b, *stop))
            return true;
        LabelRead lab = read_label(ctx.h, ctx.n, ctx.T, shape, level, w.b);
        if (lab.tag != LabelTag::Valid)
            return false;
        if (!(w.x < lab.value))
            return true;
        auto children = ctx.children_value(level, w.b);
        return children && ctx.c.eval(w.x) != *children;
    }
    case 3: { // stop node children avoid Range(C)
        auto stop = read_stop_fields(ctx.h, ctx.T, shape);
        if (!stop)
            return false;
        auto children = ctx.children_value(stop->first, stop->second);
        return children && ctx.c.eval(w.x) != *children;
    }
    case 4: { // unfilled prefix
        auto stop = read_stop_fields(ctx.h, ctx.T, shape);
        if (!stop)
            return true;
        auto level = static_cast<unsigned>(w.a);
        if (ctx.past_stop(level, w.b, *stop))
            return true;
        LabelRead lab = read_label(ctx.h, ctx.n, ctx.T, shape, level, w.b);
        return lab.tag == LabelTag::Bot;
    }
    case 5: { // zero padding
        unsigned F = history_stop_field_bits(ctx.T);
        uint64_t idx = (w.a << F) | w.b;
        return ctx.h.bit(idx) == 0;
    }
    default:
        throw InternalError("run_check: bad witness kind");
    }
}

} // namespace

bool pi1_check(const BitOracle& f, const BitOracle& h, const Circuit& c,
               uint64_t T, const BitString& witness) {
    unsigned n = c.n_in();
    TreeShape shape = TreeShape::make(n, T);
    auto w = decode_witness(n, T, shape, witness);
    if (!w)
        return true;
    return run_check({f, h, c, n, T, shape}, *w);
}

std::vector<Pi1Witness> pi1_canonical_witnesses(unsigned n, uint64_t T) {
    TreeShape shape = TreeShape::make(n, T);
    unsigned F = history_stop_field_bits(T);
    std::vector<Pi1Witness> out;

    for (uint64_t j = 0; j < shape.leaves(); ++j)
        out.push_back({0, shape.k, j, BitString(n)});
    for (unsigned level = 0; level < shape.k; ++level)
        for (uint64_t j = 0; j < (1ull << level); ++j)
            out.push_back({1, level, j, BitString(n)});
    for (unsigned level = 0; level < shape.k; ++level)
        for (uint64_t j = 0; j < (1ull << level); ++j)
            for (uint64_t xv = 0; xv < (1ull << n); ++xv)
                out.push_back({2, level, j, BitString::from_index(xv, n)});
    for (uint64_t xv = 0; xv < (1ull << n); ++xv)
        out.push_back({3, 0, 0, BitString::from_index(xv, n)});
    for (unsigned level = 0; level <= shape.k; ++level)
        for (uint64_t j = 0; j < (1ull << level); ++j)
            out.push_back({4, level, j, BitString(n)});
    for (uint64_t idx = history_pad_start(n, T); idx < history_length(T); ++idx)
        out.push_back({5, idx >> F, idx & ((1ull << F) - 1), BitString(n)});
    return out;
}

Pi1Outcome pi1_verify_all(const BitOracle& f, const BitOracle& h, const Circuit& c,
                          uint64_t T) {
    unsigned n = c.n_in();
    TreeShape shape = TreeShape::make(n, T);
    Pi1Context ctx{f, h, c, n, T, shape};
    for (const Pi1Witness& w : pi1_canonical_witnesses(n, T)) {
        if (!run_check(ctx, w))
            return {false, w.encode(n, T)};
    }
    return {true, std::nullopt};
}

} // namespace avoidkit
