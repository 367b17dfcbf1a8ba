#include "stabnf/pzx.hpp"

#include <json.hpp>

namespace stabnf {

Circuit reduce_to_pzx_gates(const Circuit& c) {
    Circuit out(c.n);
    for (const auto& g : c.gates) {
        switch (g.kind) {
            case GateKind::P:
            case GateKind::CZ:
            case GateKind::CX:
                out.push(g);
                break;
            case GateKind::Z:
                out.push(Gate::p(g.i));
                out.push(Gate::p(g.i));
                break;
            case GateKind::SWAP:
                out.push(Gate::cx(g.i, g.j));
                out.push(Gate::cx(g.j, g.i));
                out.push(Gate::cx(g.i, g.j));
                break;
            default:
                throw unsupported_gate_error(std::string(mnemonic(g.kind)) +
                                             " cannot be rewritten over P/CZ/CX");
        }
    }
    return out;
}

namespace {

void merge_p_gate(PzxForm& f, std::size_t i) {
    if (f.b.get(i)) f.v.flip(i);
    f.b.flip(i);
}

void merge_cz_gate(PzxForm& f, std::size_t i, std::size_t j) {
    f.B.flip_edge(i, j);
}

void merge_cx_gate(PzxForm& f, std::size_t i, std::size_t j) {
    bool bi = f.b.get(i), bj = f.b.get(j), Bij = f.B.get(i, j);
    // v <- [ji]v + b_i b_j e_j + B_ij e_j
    transvect_vec(f.v, {j, i});
    if ((bi && bj) ^ Bij) f.v.flip(j);
    // B <- [ji]B[ij] + b_i {{i,j}}
    f.B.congruence({j, i});
    if (bi) f.B.flip_edge(i, j);
    // b <- [ji]b
    transvect_vec(f.b, {j, i});
    // A <- [ij]A
    f.A.add_row(i, j);
    f.word.push_back({i, j});
}

}  // namespace

PzxForm c_to_pzx(const Circuit& c, const PzxForm& f_in) {
    if (c.n != f_in.n) throw std::invalid_argument("circuit and form dimensions differ");
    PzxForm f = f_in;
    for (const auto& g : c.gates) {
        switch (g.kind) {
            case GateKind::P: merge_p_gate(f, g.i); break;
            case GateKind::CZ: merge_cz_gate(f, g.i, g.j); break;
            case GateKind::CX: merge_cx_gate(f, g.i, g.j); break;
            default:
                throw unsupported_gate_error(std::string("cannot fold ") + mnemonic(g.kind) +
                                             " into a P/CZ/CX form");
        }
    }
    return f;
}

PzxForm c_to_pzx(const Circuit& c) {
    return c_to_pzx(c, PzxForm::identity(c.n));
}

namespace {

void emit_layers(Circuit& out, const BitVec& v, const BitVec& b, const SymZeroDiag& B,
                 const std::vector<Transvection>& word, bool generators_only) {
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        out.push(Gate::cx(it->i, it->j));
    for (auto [i, j] : B.edges()) out.push(Gate::cz(i, j));
    for (std::size_t i = b.next_set(0); i < b.size(); i = b.next_set(i + 1))
        out.push(Gate::p(i));
    for (std::size_t i = v.next_set(0); i < v.size(); i = v.next_set(i + 1)) {
        if (generators_only) {
            out.push(Gate::p(i));
            out.push(Gate::p(i));
        } else {
            out.push(Gate::z(i));
        }
    }
}

}  // namespace

PzxForm pzx_compose(const PzxForm& f, const PzxForm& g) {
    if (f.n != g.n) throw std::invalid_argument("form dimensions differ");
    Circuit layers(f.n);
    emit_layers(layers, f.v, f.b, f.B, gauss_synth(f.A), true);
    return c_to_pzx(layers, g);
}

Circuit pzx_to_circuit(const PzxForm& f, SynthMethod method, bool generators_only) {
    Circuit out(f.n);
    emit_layers(out, f.v, f.b, f.B, synthesize(f.A, method), generators_only);
    return out;
}

nlohmann::json pzx_json(const PzxForm& f) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [i, j] : f.B.edges()) edges.push_back({i, j});
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < f.n; ++r) rows.push_back(f.A.row(r).str());
    return nlohmann::json{
        {"qubits", f.n}, {"v", f.v.str()}, {"b", f.b.str()}, {"B", edges}, {"A", rows}};
}

std::string pzx_text(const PzxForm& f) {
    std::string s;
    s += "v: " + f.v.str() + "\n";
    s += "b: " + f.b.str() + "\n";
    s += "B:";
    for (auto [i, j] : f.B.edges()) s += " {" + std::to_string(i) + "," + std::to_string(j) + "}";
    s += f.B.any() ? "\n" : " none\n";
    s += "A:\n" + f.A.str();
    return s;
}

}  // namespace stabnf
