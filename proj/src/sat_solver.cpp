#include "avoidkit/sat_solver.hpp"

#include <algorithm>

#include "avoidkit/errors.hpp"

namespace avoidkit {

namespace {

// Literal encoding: var v (1-based), positive -> 2(v-1), negative -> 2(v-1)+1.
inline size_t lit_index(int lit) {
    int v = lit > 0 ? lit : -lit;
    return 2 * static_cast<size_t>(v - 1) + (lit < 0 ? 1 : 0);
}
inline int neg(int lit) { return -lit; }

struct Dpll {
    int nvars;
    std::vector<std::vector<int>> clauses;
    std::vector<std::vector<size_t>> watches; // per literal index
    std::vector<int8_t> value;                // per var: -1 unset, 0 false, 1 true
    std::vector<int> trail;
    std::vector<size_t> level_mark; // trail size at each decision level
    size_t prop_head = 0;

    explicit Dpll(const Cnf& cnf)
        : nvars(cnf.nvars), clauses(cnf.clauses),
          watches(2 * static_cast<size_t>(cnf.nvars)),
          value(static_cast<size_t>(cnf.nvars), -1) {}

    bool lit_true(int lit) const {
        int8_t v = value[static_cast<size_t>(std::abs(lit)) - 1];
        return v >= 0 && (v == 1) == (lit > 0);
    }
    bool lit_false(int lit) const {
        int8_t v = value[static_cast<size_t>(std::abs(lit)) - 1];
        return v >= 0 && (v == 1) != (lit > 0);
    }
    bool lit_unset(int lit) const {
        return value[static_cast<size_t>(std::abs(lit)) - 1] < 0;
    }

    void enqueue(int lit) {
        value[static_cast<size_t>(std::abs(lit)) - 1] = lit > 0 ? 1 : 0;
        trail.push_back(lit);
    }

    // Returns false on conflict.
    bool propagate() {
        while (prop_head < trail.size()) {
            int lit = trail[prop_head++];
            int flit = neg(lit); // literals watching flit may become false
            auto& wl = watches[lit_index(flit)];
            size_t keep = 0;
            for (size_t wi = 0; wi < wl.size(); ++wi) {
                size_t ci = wl[wi];
                auto& cl = clauses[ci];
                // Normalize: watched literals are cl[0], cl[1].
                if (cl[0] == flit)
                    std::swap(cl[0], cl[1]);
                if (lit_true(cl[0])) {
                    wl[keep++] = ci;
                    continue;
                }
                bool moved = false;
                for (size_t j = 2; j < cl.size(); ++j) {
                    if (!lit_false(cl[j])) {
                        std::swap(cl[1], cl[j]);
                        watches[lit_index(cl[1])].push_back(ci);
                        moved = true;
                        break;
                    }
                }
                if (moved)
                    continue;
                wl[keep++] = ci;
                if (lit_unset(cl[0])) {
                    enqueue(cl[0]);
                } else {
                    // cl[0] is false: conflict.
                    for (size_t wj = wi + 1; wj < wl.size(); ++wj)
                        wl[keep++] = wl[wj];
                    wl.resize(keep);
                    return false;
                }
            }
            wl.resize(keep);
        }
        return true;
    }

    void backtrack() {
        size_t mark = level_mark.back();
        level_mark.pop_back();
        while (trail.size() > mark) {
            int lit = trail.back();
            trail.pop_back();
            value[static_cast<size_t>(std::abs(lit)) - 1] = -1;
        }
        prop_head = trail.size();
    }

    SatSolver::Result run(uint64_t budget) {
        // Unit clauses and empty clauses first; watch the rest.
        for (size_t ci = 0; ci < clauses.size(); ++ci) {
            auto& cl = clauses[ci];
            if (cl.empty())
                return {SatSolver::Status::Unsat, {}};
            if (cl.size() == 1) {
                if (lit_false(cl[0]))
                    return {SatSolver::Status::Unsat, {}};
                if (lit_unset(cl[0]))
                    enqueue(cl[0]);
                continue;
            }
            watches[lit_index(cl[0])].push_back(ci);
            watches[lit_index(cl[1])].push_back(ci);
        }
        if (!propagate())
            return {SatSolver::Status::Unsat, {}};

        uint64_t decisions = 0;
        std::vector<int> decision_lit; // literal tried at each open level
        int next_var = 0;
        for (;;) {
            // Pick the first unset variable.
            while (next_var < nvars && value[static_cast<size_t>(next_var)] >= 0)
                ++next_var;
            if (next_var == nvars) {
                std::vector<uint8_t> model(static_cast<size_t>(nvars) + 1, 0);
                for (int v = 1; v <= nvars; ++v)
                    model[static_cast<size_t>(v)] =
                        static_cast<uint8_t>(value[static_cast<size_t>(v - 1)] == 1);
                return {SatSolver::Status::Sat, std::move(model)};
            }
            if (++decisions > budget)
                return {SatSolver::Status::Budget, {}};
            level_mark.push_back(trail.size());
            decision_lit.push_back(-(next_var + 1)); // try false first
            enqueue(decision_lit.back());
            while (!propagate()) {
                // Flip the deepest un-flipped decision.
                for (;;) {
                    if (decision_lit.empty())
                        return {SatSolver::Status::Unsat, {}};
                    int lit = decision_lit.back();
                    backtrack();
                    decision_lit.pop_back();
                    if (lit < 0) {
                        level_mark.push_back(trail.size());
                        decision_lit.push_back(neg(lit));
                        enqueue(neg(lit));
                        break;
                    }
                }
                next_var = 0;
            }
            next_var = 0;
        }
    }
};

} // namespace

SatSolver::Result SatSolver::solve(const Cnf& cnf, uint64_t decision_budget) {
    for (const auto& cl : cnf.clauses)
        for (int lit : cl)
            if (lit == 0 || std::abs(lit) > cnf.nvars)
                throw InternalError("sat solver: literal out of range");
    Dpll d(cnf);
    return d.run(decision_budget);
}

} // namespace avoidkit
