#include <doctest.h>

#include "avoidkit/circuit.hpp"
#include "avoidkit/errors.hpp"
#include "avoidkit/mcsp.hpp"
#include "avoidkit/oracle.hpp"
#include "avoidkit/rng.hpp"
#include "avoidkit/stretch.hpp"
#include "avoidkit/universal.hpp"

using namespace avoidkit;

namespace {

BitString bits(const char* s) { return BitString::from_string(s); }

// Test-side interpreter: top-down recursive evaluation with memoization,
// deliberately a different code path from Circuit::eval.
uint8_t interp_ref(const Circuit& c, const BitString& x, uint32_t ref,
                   std::vector<int8_t>& memo) {
    if (ref < c.n_in())
        return x[ref];
    if (memo[ref] >= 0)
        return static_cast<uint8_t>(memo[ref]);
    const Gate& g = c.gates()[ref - c.n_in()];
    uint8_t v = 0;
    switch (g.kind) {
    case GateKind::And: v = interp_ref(c, x, g.a, memo) & interp_ref(c, x, g.b, memo); break;
    case GateKind::Or: v = interp_ref(c, x, g.a, memo) | interp_ref(c, x, g.b, memo); break;
    case GateKind::Not: v = interp_ref(c, x, g.a, memo) ^ 1; break;
    case GateKind::Xor: v = interp_ref(c, x, g.a, memo) ^ interp_ref(c, x, g.b, memo); break;
    case GateKind::Const0: v = 0; break;
    case GateKind::Const1: v = 1; break;
    }
    memo[ref] = static_cast<int8_t>(v);
    return v;
}

BitString interp(const Circuit& c, const BitString& x) {
    std::vector<int8_t> memo(c.n_in() + c.gates().size(), -1);
    BitString out(c.n_out());
    for (unsigned o = 0; o < c.n_out(); ++o)
        out.set(o, interp_ref(c, x, c.outputs()[o], memo));
    return out;
}

// Test-side decoder of the description format, written from its field layout.
struct SimpleSlot {
    unsigned kind;
    unsigned a, b;
};

bool simple_decode(unsigned n, unsigned s, const BitString& d,
                   std::vector<SimpleSlot>& slots) {
    unsigned w = 0;
    while ((1u << w) < n + s)
        ++w;
    slots.clear();
    size_t pos = 0;
    for (unsigned t = 0; t < s; ++t) {
        SimpleSlot sl{0, 0, 0};
        for (unsigned i = 0; i < 3; ++i)
            sl.kind = (sl.kind << 1) | d[pos++];
        for (unsigned i = 0; i < w; ++i)
            sl.a = (sl.a << 1) | d[pos++];
        for (unsigned i = 0; i < w; ++i)
            sl.b = (sl.b << 1) | d[pos++];
        if (sl.kind > 5)
            return false;
        bool needs_a = sl.kind <= 3;
        bool needs_b = sl.kind == 0 || sl.kind == 1 || sl.kind == 3;
        if ((needs_a && sl.a >= n + t) || (needs_b && sl.b >= n + t))
            return false;
        slots.push_back(sl);
    }
    return true;
}

BitString simple_table(unsigned n, const std::vector<SimpleSlot>& slots) {
    BitString tt(1ull << n);
    for (uint64_t row = 0; row < (1ull << n); ++row) {
        std::vector<uint8_t> vals;
        for (unsigned i = 0; i < n; ++i)
            vals.push_back((row >> (n - 1 - i)) & 1);
        for (const SimpleSlot& sl : slots) {
            uint8_t a = sl.a < vals.size() ? vals[sl.a] : 0;
            uint8_t b = sl.b < vals.size() ? vals[sl.b] : 0;
            uint8_t v = 0;
            switch (sl.kind) {
            case 0: v = a & b; break;
            case 1: v = a | b; break;
            case 2: v = a ^ 1; break;
            case 3: v = a ^ b; break;
            case 4: v = 0; break;
            case 5: v = 1; break;
            }
            vals.push_back(v);
        }
        tt.set(row, vals.back());
    }
    return tt;
}

std::vector<BitString> circuit_range(const Circuit& c) {
    std::vector<BitString> out;
    for (uint64_t v = 0; v < (1ull << c.n_in()); ++v)
        out.push_back(c.eval(BitString::from_index(v, c.n_in())));
    return out;
}

bool in_list(const std::vector<BitString>& range, const BitString& y) {
    for (const auto& r : range)
        if (r == y)
            return true;
    return false;
}

} // namespace

TEST_CASE("bitstring basics and tt format") {
    BitString b = bits("0101");
    CHECK(b.to_index() == 5);
    CHECK(b.slice(1, 3) == bits("10"));
    CHECK((bits("01") + bits("10")) == bits("0110"));
    CHECK(BitString::from_index(5, 4) == b);
    CHECK(bits("00") < bits("01"));
    CHECK(bits("01") < bits("10"));

    BitString t = bits("110100101");
    std::string line = t.to_tt_line();
    CHECK(line == "tt 9 d28");
    CHECK(BitString::parse_tt_line(line) == t);
    CHECK_THROWS_AS(BitString::parse_tt_line("tt 9 d29"), ParseError);
    CHECK_THROWS_AS(BitString::parse_tt_line("tt 9 d2"), ParseError);
}

TEST_CASE("eval on wiring and gate circuits") {
    Circuit dup2 = make_dup(2);
    CHECK(dup2.eval(bits("01")) == bits("0101"));

    Circuit notc(1);
    notc.add_output(notc.add_gate(GateKind::Not, 0));
    CHECK(notc.eval(bits("0")) == bits("1"));
    CHECK(notc.eval(bits("1")) == bits("0"));

    CHECK_THROWS_AS(dup2.eval(bits("011")), InputShapeError);
}

TEST_CASE("eval agrees with an independent interpreter") {
    Rng rng(20240811);
    for (int trial = 0; trial < 30; ++trial) {
        Circuit c = make_random_circuit(4, 6, 10, rng);
        for (uint64_t v = 0; v < 16; ++v) {
            BitString x = BitString::from_index(v, 4);
            CHECK(c.eval(x) == interp(c, x));
        }
    }
}

TEST_CASE("codec round-trips and rejects malformed text") {
    Circuit dup2 = make_dup(2);
    std::string text = serialize_circuit(dup2);
    Circuit back = parse_circuit(text);
    CHECK(serialize_circuit(back) == text);
    CHECK(back.n_in() == 2);
    CHECK(back.eval(bits("10")) == bits("1010"));

    CHECK_THROWS_AS(parse_circuit("circuit 2 1\ng0 = AND g1 x0\noutputs g0\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_circuit("circuit 2 1\ng0 = AND x0 x5\noutputs g0\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_circuit("circuit 2 2\noutputs x0\n"), ParseError);
    CHECK_THROWS_AS(parse_circuit("circuit 2 1\ng0 = FROB x0 x1\noutputs g0\n"),
                    ParseError);
}

TEST_CASE("codec round-trips 100 random circuits bit-exactly") {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        unsigned n_in = 1 + static_cast<unsigned>(rng.below(5));
        unsigned n_out = 1 + static_cast<unsigned>(rng.below(6));
        unsigned gates = static_cast<unsigned>(rng.below(12));
        Circuit c = make_random_circuit(n_in, n_out, gates, rng);
        Circuit back = parse_circuit(serialize_circuit(c));
        REQUIRE(back.gates() == c.gates());
        REQUIRE(back.outputs() == c.outputs());
        REQUIRE(back.n_in() == c.n_in());
    }
}

TEST_CASE("truth-table generator evaluates described circuits") {
    TtGenSpec spec{2, 1};
    CHECK(spec.description_length() == 7);
    Circuit tt = build_tt_generator(spec);
    CHECK(tt.n_in() == 7);
    CHECK(tt.n_out() == 4);

    // output = x0 AND x1
    Circuit andc(2);
    andc.add_output(andc.add_gate(GateKind::And, 0, 1));
    BitString d = encode_description(spec, andc);
    CHECK(tt.eval(d) == bits("0001"));

    // Invalid description: operand field out of range (a = 3 >= n + t = 2).
    BitString bad(7);
    bad.set(3, 1);
    bad.set(4, 1);
    CHECK(tt.eval(bad) == bits("0000"));
}

TEST_CASE("truth-table generator matches direct interpretation exhaustively") {
    TtGenSpec spec{3, 2};
    Circuit tt = build_tt_generator(spec);
    uint64_t L = spec.description_length();
    REQUIRE(L == 18);
    std::vector<SimpleSlot> slots;
    for (uint64_t v = 0; v < (1ull << L); ++v) {
        BitString d = BitString::from_index(v, L);
        BitString got = tt.eval(d);
        BitString want(8);
        if (simple_decode(3, 2, d, slots))
            want = simple_table(3, slots);
        if (got != want) {
            CAPTURE(v);
            REQUIRE(got == want);
        }
    }
}

TEST_CASE("truth-table generator capacity errors") {
    CHECK_THROWS_AS(build_tt_generator(TtGenSpec{64, 1}), CapacityError);
    CHECK_THROWS_AS(build_tt_generator(TtGenSpec{3, 1000}), CapacityError);
    CHECK_THROWS_AS(build_tt_generator(TtGenSpec{0, 1}), ParameterError);
}

TEST_CASE("mcsp_brute on the named tables") {
    CHECK(mcsp_brute(bits("0000"), 0));
    CHECK(mcsp_brute(bits("1111"), 0));
    CHECK(mcsp_brute(bits("0011"), 0));  // projection x0
    CHECK_FALSE(mcsp_brute(bits("0110"), 0));
    CHECK(mcsp_brute(bits("0001"), 1));
    CHECK(mcsp_brute(bits("0110"), 1));  // one XOR gate
    CHECK_FALSE(mcsp_brute(bits("1000"), 1)); // NOR needs two gates
    CHECK(mcsp_brute(bits("1000"), 2));
}

TEST_CASE("mcsp_brute is monotone in s") {
    Rng rng(99);
    for (int trial = 0; trial < 16; ++trial) {
        BitString tt(4);
        for (int i = 0; i < 4; ++i)
            tt.set(i, rng.coin());
        bool prev = mcsp_brute(tt, 0);
        for (unsigned s = 1; s <= 3; ++s) {
            bool cur = mcsp_brute(tt, s);
            CHECK((!prev || cur));
            prev = cur;
        }
    }
    CHECK_THROWS_AS(mcsp_brute(BitString(32), 1), CapacityError);
}

TEST_CASE("stretch chain and backmap on the append-AND circuit") {
    Circuit c(2);
    c.add_output(0);
    c.add_output(1);
    c.add_output(c.add_gate(GateKind::And, 0, 1));

    Circuit d = stretch_double(c);
    CHECK(d.n_in() == 2);
    CHECK(d.n_out() == 4);

    NpOracle oracle(BackendKind::Exhaustive);
    auto range_c = circuit_range(c);
    auto range_d = circuit_range(d);
    int missing = 0;
    for (uint64_t v = 0; v < 16; ++v) {
        BitString y = BitString::from_index(v, 4);
        if (in_list(range_d, y))
            continue;
        ++missing;
        BitString z = stretch_backmap(oracle, c, y);
        CHECK(z.size() == 3);
        CHECK_FALSE(in_list(range_c, z));
    }
    CHECK(missing >= 12);
}

TEST_CASE("stretch keeps injective ranges small and rejects range members") {
    Circuit c(2); // injective: x0, x1, x0 xor x1
    c.add_output(0);
    c.add_output(1);
    c.add_output(c.add_gate(GateKind::Xor, 0, 1));

    Circuit d = stretch_double(c);
    auto range_d = circuit_range(d);
    std::vector<BitString> distinct;
    for (const auto& y : range_d)
        if (!in_list(distinct, y))
            distinct.push_back(y);
    CHECK(distinct.size() <= 4);

    NpOracle oracle(BackendKind::Exhaustive);
    auto range_c = circuit_range(c);
    for (uint64_t v = 0; v < 16; ++v) {
        BitString y = BitString::from_index(v, 4);
        if (in_list(range_d, y)) {
            CHECK_THROWS_AS(stretch_backmap(oracle, c, y), ContractViolation);
        } else {
            CHECK_FALSE(in_list(range_c, stretch_backmap(oracle, c, y)));
        }
    }
}

TEST_CASE("stretch backmap over random circuits") {
    Rng rng(424242);
    NpOracle oracle(BackendKind::Exhaustive);
    for (unsigned n = 2; n <= 3; ++n) {
        for (int trial = 0; trial < 25; ++trial) {
            Circuit c = make_random_circuit(n, n + 1, 4, rng);
            Circuit d = stretch_double(c);
            auto range_c = circuit_range(c);
            auto range_d = circuit_range(d);
            for (uint64_t v = 0; v < (1ull << (2 * n)); ++v) {
                BitString y = BitString::from_index(v, 2 * n);
                if (in_list(range_d, y))
                    continue;
                CHECK_FALSE(in_list(range_c, stretch_backmap(oracle, c, y)));
            }
        }
    }
}
