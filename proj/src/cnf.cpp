#include "avoidkit/cnf.hpp"

#include <ostream>

#include "avoidkit/errors.hpp"

namespace avoidkit {

PreimageCnf tseitin_preimage(const Circuit& c, const BitString& y,
                             const BitString& prefix) {
    if (y.size() != c.n_out())
        throw InputShapeError("tseitin_preimage: output width mismatch");
    if (prefix.size() > c.n_in())
        throw InputShapeError("tseitin_preimage: prefix longer than input");

    PreimageCnf out;
    Cnf& f = out.cnf;
    std::vector<int> wire(c.n_in() + c.gates().size());
    for (unsigned i = 0; i < c.n_in(); ++i) {
        wire[i] = f.new_var();
        out.input_vars.push_back(wire[i]);
    }
    for (size_t g = 0; g < c.gates().size(); ++g) {
        const Gate& gt = c.gates()[g];
        int z = f.new_var();
        wire[c.n_in() + g] = z;
        int a = gt.a < wire.size() ? wire[gt.a] : 0;
        int b = gt.b < wire.size() ? wire[gt.b] : 0;
        switch (gt.kind) {
        case GateKind::And:
            f.add({-z, a});
            f.add({-z, b});
            f.add({z, -a, -b});
            break;
        case GateKind::Or:
            f.add({z, -a});
            f.add({z, -b});
            f.add({-z, a, b});
            break;
        case GateKind::Not:
            f.add({z, a});
            f.add({-z, -a});
            break;
        case GateKind::Xor:
            f.add({-z, a, b});
            f.add({-z, -a, -b});
            f.add({z, -a, b});
            f.add({z, a, -b});
            break;
        case GateKind::Const0:
            f.add({-z});
            break;
        case GateKind::Const1:
            f.add({z});
            break;
        }
    }
    for (unsigned o = 0; o < c.n_out(); ++o) {
        int v = wire[c.outputs()[o]];
        f.add({y[o] ? v : -v});
    }
    for (size_t i = 0; i < prefix.size(); ++i)
        f.add({prefix[i] ? out.input_vars[i] : -out.input_vars[i]});
    return out;
}

void write_dimacs(const Cnf& cnf, std::ostream& out) {
    out << "p cnf " << cnf.nvars << " " << cnf.clauses.size() << "\n";
    for (const auto& cl : cnf.clauses) {
        for (int lit : cl)
            out << lit << " ";
        out << "0\n";
    }
}

} // namespace avoidkit
