#pragma once

#include <cstdint>
#include <vector>

#include "avoidkit/cnf.hpp"

namespace avoidkit {

// Watched-literal DPLL. Small by design: the instances produced by the
// oracle layer are Tseitin encodings of desk-scale circuits.
class SatSolver {
public:
    enum class Status { Sat, Unsat, Budget };

    struct Result {
        Status status;
        std::vector<uint8_t> model; // indexed 1..nvars, valid when Sat
    };

    // decision_budget bounds the number of branching decisions; exhausting it
    // yields Status::Budget, never a wrong Sat/Unsat answer.
    static Result solve(const Cnf& cnf, uint64_t decision_budget);
};

} // namespace avoidkit
