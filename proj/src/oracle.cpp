#include "avoidkit/oracle.hpp"

#include "avoidkit/cnf.hpp"
#include "avoidkit/errors.hpp"
#include "avoidkit/ggm.hpp"
#include "avoidkit/sat_solver.hpp"

namespace avoidkit {

namespace {

void check_query(const Circuit& c, const BitString& y, const BitString& prefix) {
    if (y.size() != c.n_out())
        throw InputShapeError("oracle query: output width mismatch");
    if (prefix.size() > c.n_in())
        throw InputShapeError("oracle query: prefix wider than input");
}

} // namespace

bool NpOracle::has_preimage_exhaustive(const Circuit& c, const BitString& y,
                                       const BitString& prefix) const {
    unsigned free_bits = c.n_in() - static_cast<unsigned>(prefix.size());
    if (free_bits > caps_.max_enum_width)
        throw CapacityError("exhaustive backend: enumeration width exceeds cap");
    uint64_t total = 1ull << free_bits;
    for (uint64_t v = 0; v < total; ++v) {
        BitString x = prefix + BitString::from_index(v, free_bits);
        if (c.eval(x) == y)
            return true;
    }
    return false;
}

bool NpOracle::has_preimage_sat(const Circuit& c, const BitString& y,
                                const BitString& prefix) const {
    PreimageCnf enc = tseitin_preimage(c, y, prefix);
    SatSolver::Result r = SatSolver::solve(enc.cnf, caps_.sat_decision_budget);
    switch (r.status) {
    case SatSolver::Status::Sat: return true;
    case SatSolver::Status::Unsat: return false;
    case SatSolver::Status::Budget:
        throw ResourceError("sat backend: decision budget exhausted");
    }
    throw InternalError("unreachable");
}

bool NpOracle::has_preimage(const Circuit& c, const BitString& y,
                            const BitString& prefix) const {
    check_query(c, y, prefix);
    ++queries_;
    if (kind_ == BackendKind::Exhaustive)
        return has_preimage_exhaustive(c, y, prefix);
    return has_preimage_sat(c, y, prefix);
}

std::optional<BitString> NpOracle::lex_first_preimage(const Circuit& c,
                                                      const BitString& y) const {
    check_query(c, y, {});
    if (!has_preimage(c, y))
        return std::nullopt;
    BitString prefix;
    for (unsigned i = 0; i < c.n_in(); ++i) {
        prefix.push_back(0);
        if (!has_preimage(c, y, prefix))
            prefix.set(i, 1); // some extension exists, so it starts with 1
    }
    return prefix;
}

bool NpOracle::in_range_ggm(const Circuit& c, uint64_t T, const BitString& f) const {
    if (f.size() != T)
        throw InputShapeError("in_range_ggm: |f| must equal T");
    TreeShape::make(c.n_in(), T); // validates shape preconditions
    ++queries_;
    if (kind_ == BackendKind::Exhaustive) {
        if (c.n_in() > caps_.max_enum_width)
            throw CapacityError("exhaustive backend: enumeration width exceeds cap");
        if (TreeShape::make(c.n_in(), T).padded_len() > caps_.ggm_materialize_cap)
            throw CapacityError("exhaustive backend: GGM expansion exceeds cap");
        uint64_t total = 1ull << c.n_in();
        for (uint64_t v = 0; v < total; ++v) {
            BitString x = BitString::from_index(v, c.n_in());
            if (ggm_full(c, T, x, caps_.ggm_materialize_cap) == f)
                return true;
        }
        return false;
    }
    Circuit unrolled = ggm_unrolled_circuit(c, T, caps_.ggm_gate_cap);
    return has_preimage_sat(unrolled, f, {});
}

void emit_preimage_dimacs(const Circuit& c, const BitString& y,
                          const BitString& prefix, std::ostream& out) {
    check_query(c, y, prefix);
    write_dimacs(tseitin_preimage(c, y, prefix).cnf, out);
}

} // namespace avoidkit
