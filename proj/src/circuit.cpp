#include "avoidkit/circuit.hpp"

#include <fstream>
#include <sstream>

#include "avoidkit/errors.hpp"
#include "avoidkit/rng.hpp"

namespace avoidkit {

const char* gate_kind_name(GateKind k) {
    switch (k) {
    case GateKind::And: return "AND";
    case GateKind::Or: return "OR";
    case GateKind::Not: return "NOT";
    case GateKind::Xor: return "XOR";
    case GateKind::Const0: return "CONST0";
    case GateKind::Const1: return "CONST1";
    }
    throw InternalError("unknown gate kind");
}

unsigned gate_arity(GateKind k) {
    switch (k) {
    case GateKind::And:
    case GateKind::Or:
    case GateKind::Xor:
        return 2;
    case GateKind::Not:
        return 1;
    case GateKind::Const0:
    case GateKind::Const1:
        return 0;
    }
    throw InternalError("unknown gate kind");
}

uint32_t Circuit::input_ref(unsigned i) const {
    if (i >= n_in_)
        throw InputShapeError("input index out of range");
    return i;
}

void Circuit::check_ref(uint32_t ref, size_t gate_count) const {
    if (ref >= n_in_ + gate_count)
        throw InputShapeError("wire reference does not precede its use");
}

uint32_t Circuit::add_gate(GateKind kind, uint32_t a, uint32_t b) {
    unsigned ar = gate_arity(kind);
    if (ar >= 1)
        check_ref(a, gates_.size());
    if (ar >= 2)
        check_ref(b, gates_.size());
    gates_.push_back(Gate{kind, ar >= 1 ? a : 0, ar >= 2 ? b : 0});
    return n_in_ + static_cast<uint32_t>(gates_.size() - 1);
}

void Circuit::add_output(uint32_t ref) {
    check_ref(ref, gates_.size());
    outputs_.push_back(ref);
}

void Circuit::eval_wires(std::vector<uint8_t>& wires) const {
    wires.resize(n_in_ + gates_.size());
    for (size_t g = 0; g < gates_.size(); ++g) {
        const Gate& gt = gates_[g];
        uint8_t v = 0;
        switch (gt.kind) {
        case GateKind::And: v = wires[gt.a] & wires[gt.b]; break;
        case GateKind::Or: v = wires[gt.a] | wires[gt.b]; break;
        case GateKind::Not: v = wires[gt.a] ^ 1; break;
        case GateKind::Xor: v = wires[gt.a] ^ wires[gt.b]; break;
        case GateKind::Const0: v = 0; break;
        case GateKind::Const1: v = 1; break;
        }
        wires[n_in_ + g] = v;
    }
}

BitString Circuit::eval(const BitString& x) const {
    if (x.size() != n_in_)
        throw InputShapeError("circuit input width mismatch: expected " +
                              std::to_string(n_in_) + ", got " +
                              std::to_string(x.size()));
    std::vector<uint8_t> wires(n_in_ + gates_.size());
    for (unsigned i = 0; i < n_in_; ++i)
        wires[i] = x[i];
    eval_wires(wires);
    BitString out(outputs_.size());
    for (size_t i = 0; i < outputs_.size(); ++i)
        out.set(i, wires[outputs_[i]]);
    return out;
}

namespace {

std::string ref_name(uint32_t ref, unsigned n_in) {
    if (ref < n_in)
        return "x" + std::to_string(ref);
    return "g" + std::to_string(ref - n_in);
}

[[noreturn]] void parse_fail(size_t line_no, const std::string& msg) {
    throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

uint32_t parse_ref(const std::string& tok, unsigned n_in, size_t gates_so_far,
                   size_t line_no) {
    if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'g'))
        parse_fail(line_no, "bad wire reference '" + tok + "'");
    uint64_t idx = 0;
    for (size_t i = 1; i < tok.size(); ++i) {
        if (tok[i] < '0' || tok[i] > '9')
            parse_fail(line_no, "bad wire reference '" + tok + "'");
        idx = idx * 10 + static_cast<uint64_t>(tok[i] - '0');
        if (idx > 0xffffffffULL)
            parse_fail(line_no, "wire index overflow");
    }
    if (tok[0] == 'x') {
        if (idx >= n_in)
            parse_fail(line_no, "input reference x" + std::to_string(idx) +
                                    " out of range");
        return static_cast<uint32_t>(idx);
    }
    if (idx >= gates_so_far)
        parse_fail(line_no, "gate reference g" + std::to_string(idx) +
                                " does not precede its use");
    return n_in + static_cast<uint32_t>(idx);
}

bool kind_from_name(const std::string& s, GateKind& out) {
    static const std::pair<const char*, GateKind> table[] = {
        {"AND", GateKind::And},       {"OR", GateKind::Or},
        {"NOT", GateKind::Not},       {"XOR", GateKind::Xor},
        {"CONST0", GateKind::Const0}, {"CONST1", GateKind::Const1},
    };
    for (auto& [name, k] : table)
        if (s == name) {
            out = k;
            return true;
        }
    return false;
}

} // namespace

std::string serialize_circuit(const Circuit& c) {
    std::ostringstream out;
    out << "circuit " << c.n_in() << " " << c.n_out() << "\n";
    for (size_t g = 0; g < c.gates().size(); ++g) {
        const Gate& gt = c.gates()[g];
        out << "g" << g << " = " << gate_kind_name(gt.kind);
        unsigned ar = gate_arity(gt.kind);
        if (ar >= 1)
            out << " " << ref_name(gt.a, c.n_in());
        if (ar >= 2)
            out << " " << ref_name(gt.b, c.n_in());
        out << "\n";
    }
    out << "outputs";
    for (uint32_t ref : c.outputs())
        out << " " << ref_name(ref, c.n_in());
    out << "\n";
    return out.str();
}

Circuit parse_circuit(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_no = 0;

    auto next_tokens = [&](std::vector<std::string>& toks) -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            auto hash = line.find('#');
            if (hash != std::string::npos)
                line.resize(hash);
            std::istringstream ls(line);
            toks.clear();
            std::string t;
            while (ls >> t)
                toks.push_back(t);
            if (!toks.empty())
                return true;
        }
        return false;
    };

    std::vector<std::string> toks;
    if (!next_tokens(toks))
        throw ParseError("empty circuit text");
    if (toks.size() != 3 || toks[0] != "circuit")
        parse_fail(line_no, "expected 'circuit <n_in> <n_out>'");
    unsigned n_in = 0, n_out = 0;
    try {
        n_in = static_cast<unsigned>(std::stoul(toks[1]));
        n_out = static_cast<unsigned>(std::stoul(toks[2]));
    } catch (const std::exception&) {
        parse_fail(line_no, "bad circuit header numbers");
    }

    Circuit c(n_in);
    bool saw_outputs = false;
    while (next_tokens(toks)) {
        if (toks[0] == "outputs") {
            for (size_t i = 1; i < toks.size(); ++i)
                c.add_output(parse_ref(toks[i], n_in, c.size(), line_no));
            saw_outputs = true;
            break;
        }
        // g<k> = KIND ref [ref]
        if (toks.size() < 3 || toks[1] != "=")
            parse_fail(line_no, "expected 'g<k> = <KIND> <ref> [<ref>]'");
        std::string want = "g" + std::to_string(c.size());
        if (toks[0] != want)
            parse_fail(line_no, "gates must be named consecutively; expected " + want);
        GateKind kind;
        if (!kind_from_name(toks[2], kind))
            parse_fail(line_no, "unknown gate kind '" + toks[2] + "'");
        unsigned ar = gate_arity(kind);
        if (toks.size() != 3 + ar)
            parse_fail(line_no, std::string(gate_kind_name(kind)) + " takes " +
                                    std::to_string(ar) + " operand(s)");
        uint32_t a = 0, b = 0;
        if (ar >= 1)
            a = parse_ref(toks[3], n_in, c.size(), line_no);
        if (ar >= 2)
            b = parse_ref(toks[4], n_in, c.size(), line_no);
        c.add_gate(kind, a, b);
    }
    if (!saw_outputs)
        throw ParseError("missing 'outputs' line");
    if (c.n_out() != n_out)
        throw ParseError("declared n_out " + std::to_string(n_out) +
                         " but outputs line has " + std::to_string(c.n_out()));
    if (next_tokens(toks))
        parse_fail(line_no, "unexpected content after outputs line");
    return c;
}

Circuit load_circuit_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open circuit file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_circuit(buf.str());
}

std::vector<uint32_t> inline_subcircuit(Circuit& dst, const Circuit& sub,
                                        std::span<const uint32_t> input_refs) {
    if (input_refs.size() != sub.n_in())
        throw InputShapeError("inline_subcircuit: wrong number of input wires");
    std::vector<uint32_t> map(sub.n_in() + sub.gates().size());
    for (size_t i = 0; i < input_refs.size(); ++i)
        map[i] = input_refs[i];
    for (size_t g = 0; g < sub.gates().size(); ++g) {
        const Gate& gt = sub.gates()[g];
        map[sub.n_in() + g] = dst.add_gate(gt.kind, map[gt.a], map[gt.b]);
    }
    std::vector<uint32_t> outs;
    outs.reserve(sub.outputs().size());
    for (uint32_t ref : sub.outputs())
        outs.push_back(map[ref]);
    return outs;
}

Circuit make_dup(unsigned n) {
    Circuit c(n);
    for (unsigned r = 0; r < 2; ++r)
        for (unsigned i = 0; i < n; ++i)
            c.add_output(i);
    return c;
}

Circuit make_random_circuit(unsigned n_in, unsigned n_out, unsigned n_gates, Rng& rng) {
    Circuit c(n_in);
    for (unsigned g = 0; g < n_gates; ++g) {
        auto kind = static_cast<GateKind>(rng.below(6));
        uint32_t span = n_in + g;
        uint32_t a = span ? static_cast<uint32_t>(rng.below(span)) : 0;
        uint32_t b = span ? static_cast<uint32_t>(rng.below(span)) : 0;
        if (span == 0)
            kind = rng.coin() ? GateKind::Const0 : GateKind::Const1;
        c.add_gate(kind, a, b);
    }
    uint32_t span = n_in + n_gates;
    for (unsigned o = 0; o < n_out; ++o)
        c.add_output(static_cast<uint32_t>(rng.below(span)));
    return c;
}

} // namespace avoidkit
