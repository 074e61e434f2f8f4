#pragma once

#include <iosfwd>
#include <vector>

#include "avoidkit/bitstring.hpp"
#include "avoidkit/circuit.hpp"

namespace avoidkit {

// Clause literals use the DIMACS convention: +v / -v with v >= 1.
struct Cnf {
    int nvars = 0;
    std::vector<std::vector<int>> clauses;

    int new_var() { return ++nvars; }
    void add(std::vector<int> lits) { clauses.push_back(std::move(lits)); }
};

// Gate-consistency encoding of the constraint "C(x) = y, x extends prefix".
// input_vars[i] is the variable of input wire i.
struct PreimageCnf {
    Cnf cnf;
    std::vector<int> input_vars;
};

PreimageCnf tseitin_preimage(const Circuit& c, const BitString& y,
                             const BitString& prefix);

void write_dimacs(const Cnf& cnf, std::ostream& out);

} // namespace avoidkit
