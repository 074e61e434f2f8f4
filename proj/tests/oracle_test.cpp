#include <doctest.h>

#include <sstream>

#include "avoidkit/circuit.hpp"
#include "avoidkit/errors.hpp"
#include "avoidkit/ggm.hpp"
#include "avoidkit/oracle.hpp"
#include "avoidkit/rng.hpp"

using namespace avoidkit;

namespace {

BitString bits(const char* s) { return BitString::from_string(s); }

std::optional<BitString> scan_lex_first(const Circuit& c, const BitString& y) {
    for (uint64_t v = 0; v < (1ull << c.n_in()); ++v) {
        BitString x = BitString::from_index(v, c.n_in());
        if (c.eval(x) == y)
            return x;
    }
    return std::nullopt;
}

} // namespace

TEST_CASE("has_preimage on dup2") {
    NpOracle ex(BackendKind::Exhaustive);
    NpOracle sat(BackendKind::Sat);
    Circuit dup2 = make_dup(2);
    for (const NpOracle* o : {&ex, &sat}) {
        CHECK(o->has_preimage(dup2, bits("0101")));
        CHECK_FALSE(o->has_preimage(dup2, bits("0110")));
        CHECK(o->has_preimage(dup2, bits("0101"), bits("0")));
        CHECK_FALSE(o->has_preimage(dup2, bits("0101"), bits("1")));
    }
    CHECK(ex.query_count() == 4);
}

TEST_CASE("lex_first_preimage on the named instances") {
    NpOracle ex(BackendKind::Exhaustive);
    Circuit dup2 = make_dup(2);
    auto r = ex.lex_first_preimage(dup2, bits("1111"));
    REQUIRE(r.has_value());
    CHECK(*r == bits("11"));

    Circuit zero(2);
    uint32_t z = zero.add_gate(GateKind::Const0);
    for (int i = 0; i < 4; ++i)
        zero.add_output(z);
    auto r0 = ex.lex_first_preimage(zero, bits("0000"));
    REQUIRE(r0.has_value());
    CHECK(*r0 == bits("00"));

    CHECK_FALSE(ex.lex_first_preimage(dup2, bits("0110")).has_value());
}

TEST_CASE("lex_first_preimage equals the exhaustive scan at n=4") {
    Rng rng(501);
    NpOracle ex(BackendKind::Exhaustive);
    NpOracle sat(BackendKind::Sat);
    for (int trial = 0; trial < 40; ++trial) {
        Circuit c = make_random_circuit(4, 5, 8, rng);
        BitString y(5);
        for (int i = 0; i < 5; ++i)
            y.set(i, rng.coin());
        auto want = scan_lex_first(c, y);
        CHECK(ex.lex_first_preimage(c, y) == want);
        CHECK(sat.lex_first_preimage(c, y) == want);
    }
}

TEST_CASE("backend agreement on 200 random instances") {
    Rng rng(90210);
    NpOracle ex(BackendKind::Exhaustive);
    NpOracle sat(BackendKind::Sat);
    for (int trial = 0; trial < 200; ++trial) {
        unsigned n = 2 + static_cast<unsigned>(rng.below(3));
        Circuit c = make_random_circuit(n, n + 1 + static_cast<unsigned>(rng.below(3)),
                                        6, rng);
        BitString y(c.n_out());
        for (unsigned i = 0; i < c.n_out(); ++i)
            y.set(i, rng.coin());
        bool has = ex.has_preimage(c, y);
        CHECK(sat.has_preimage(c, y) == has);
        CHECK(scan_lex_first(c, y).has_value() == has);
        CHECK(ex.lex_first_preimage(c, y) == sat.lex_first_preimage(c, y));
    }
}

TEST_CASE("in_range_ggm on dup2") {
    NpOracle ex(BackendKind::Exhaustive);
    NpOracle sat(BackendKind::Sat);
    Circuit dup2 = make_dup(2);
    for (const NpOracle* o : {&ex, &sat}) {
        CHECK(o->in_range_ggm(dup2, 8, bits("01010101")));
        CHECK_FALSE(o->in_range_ggm(dup2, 8, bits("00011011")));
    }
}

TEST_CASE("in_range_ggm accepts constructed members, both backends") {
    Rng rng(77);
    NpOracle ex(BackendKind::Exhaustive);
    NpOracle sat(BackendKind::Sat);
    for (int trial = 0; trial < 10; ++trial) {
        unsigned n = 2 + static_cast<unsigned>(rng.below(2));
        Circuit c = make_random_circuit(n, 2 * n, 5, rng);
        uint64_t T = 4ull * n * (1 + rng.below(2));
        BitString x(n);
        for (unsigned i = 0; i < n; ++i)
            x.set(i, rng.coin());
        BitString f = ggm_full(c, T, x);
        CHECK(ex.in_range_ggm(c, T, f));
        CHECK(sat.in_range_ggm(c, T, f));

        f.flip(rng.below(T));
        CHECK(ex.in_range_ggm(c, T, f) == sat.in_range_ggm(c, T, f));
    }
}

TEST_CASE("resource and capacity outcomes are distinct errors") {
    Circuit dup2 = make_dup(2);

    OracleCaps tiny_enum;
    tiny_enum.max_enum_width = 1;
    NpOracle ex(BackendKind::Exhaustive, tiny_enum);
    CHECK_THROWS_AS(ex.has_preimage(dup2, bits("0101")), CapacityError);

    OracleCaps tiny_budget;
    tiny_budget.sat_decision_budget = 0;
    NpOracle sat(BackendKind::Sat, tiny_budget);
    CHECK_THROWS_AS(sat.has_preimage(dup2, bits("0101")), ResourceError);

    CHECK_THROWS_AS(ex.has_preimage(dup2, bits("01")), InputShapeError);
}

TEST_CASE("dimacs emission has the declared shape") {
    Circuit c(2);
    c.add_output(c.add_gate(GateKind::And, 0, 1));
    std::ostringstream out;
    emit_preimage_dimacs(c, bits("1"), bits("1"), out);
    std::istringstream in(out.str());
    std::string p, cnf;
    int nv = 0, nc = 0;
    in >> p >> cnf >> nv >> nc;
    CHECK(p == "p");
    CHECK(cnf == "cnf");
    CHECK(nv == 3);
    int zeros = 0, lit;
    while (in >> lit)
        if (lit == 0)
            ++zeros;
    CHECK(zeros == nc);
}
