#include "stabnf/genpzx.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <vector>

namespace stabnf {

namespace {

std::vector<std::size_t> set_bits(const BitVec& x) {
    std::vector<std::size_t> out;
    for (std::size_t k = x.next_set(0); k < x.size(); k = x.next_set(k + 1)) out.push_back(k);
    return out;
}

void clear_vertex(SymZeroDiag& g, std::size_t i) {
    for (std::size_t k : set_bits(g.row(i))) g.flip_edge(i, k);
}

void swap_bits(BitVec& x, std::size_t i, std::size_t j) {
    bool xi = x.get(i);
    bool xj = x.get(j);
    x.set(i, xj);
    x.set(j, xi);
}

// Folds the gate X_[ij] into P_d Z_D h e^{i phi} X_u Z_v P_b Z_B X_A, leaving
// the H layer alone. The gate is replayed against the left diagonal block,
// its linear part crosses h as X_[ji] and conjugates the Pauli block, then it
// is replayed against the right block.
void fold_cx_past_h(IntermediateForm& f, std::size_t i, std::size_t j) {
    Circuit left(f.n);
    left.push(Gate::cx(i, j));
    PzxForm top(f.n);
    top.b = f.d;
    top.B = f.D;
    PzxForm r1 = c_to_pzx(left, top);
    f.d = r1.b;
    f.D = r1.B;
    transvect_vec(f.u, {j, i});
    transvect_vec(f.v, {i, j});
    f.u ^= r1.v;
    Circuit right(f.n);
    right.push(Gate::cx(j, i));
    PzxForm bot(f.n);
    bot.b = f.b;
    bot.B = f.B;
    bot.A = f.A;
    PzxForm r2 = c_to_pzx(right, bot);
    f.v ^= r2.v;
    f.b = r2.b;
    f.B = r2.B;
    f.A = r2.A;
}

// P_i^h Z_D P_i^{-h}: every edge {i,k} of D conjugates to Z_{ik} X_[ik] P_k.
// The conjugated product is replayed into a P/CZ/CX form whose layers are
// then folded back into the surrounding structure.
void cascade_p_past_h(IntermediateForm& f, std::size_t i) {
    std::vector<std::size_t> lam = set_bits(f.D.row(i));
    if (lam.empty()) return;
    Circuit c1(f.n);
    for (std::size_t k : lam) {
        c1.push(Gate::p(k));
        c1.push(Gate::cx(i, k));
        c1.push(Gate::cz(i, k));
    }
    PzxForm r1 = c_to_pzx(c1, PzxForm::identity(f.n));
    clear_vertex(f.D, i);
    f.D ^= r1.B;
    BitVec dterm = f.d & r1.b;
    for (std::size_t k : lam) {
        transvect_vec(f.u, {k, i});
        transvect_vec(f.v, {i, k});
    }
    Circuit c2(f.n);
    for (std::size_t k : lam) c2.push(Gate::cx(k, i));
    PzxForm bot(f.n);
    bot.b = f.b;
    bot.B = f.B;
    bot.A = f.A;
    PzxForm r2 = c_to_pzx(c2, bot);
    f.u ^= r1.v;
    f.u ^= dterm;
    f.d ^= r1.b;
    f.v ^= r2.v;
    f.b = r2.b;
    f.B = r2.B;
    f.A = r2.A;
}

// Merges P_i^h, the phase gate conjugated by the Hadamard layer. When the P
// layer already holds a 1 at i the P P product turns into an X_i Z_i pair
// plus a leftover Hadamard that flips a_i.
void merge_p_past_h(IntermediateForm& f, std::size_t i) {
    bool ui = f.u.get(i);
    if (ui) f.phi += 2;
    if (ui != f.b.get(i)) f.v.flip(i);
    f.b.flip(i);
    if (f.d.get(i)) {
        f.a.flip(i);
        f.d.flip(i);
        f.phi += 1 + (ui ? 4 : 0);
        f.u ^= f.D.row(i);
        f.v.flip(i);
    }
    cascade_p_past_h(f, i);
}

// Merges Z^h_{ij}, the CZ conjugated by the Hadamard layer. Requires the
// entry (i,j) of D to be 0; the caller removes it first if present.
void merge_cz_past_h(IntermediateForm& f, std::size_t i, std::size_t j) {
    bool ui = f.u.get(i);
    bool uj = f.u.get(j);
    if (ui && uj) f.phi += 4;
    if (uj) f.v.flip(i);
    if (ui) f.v.flip(j);
    f.B.flip_edge(i, j);
    BitVec d_saved = f.d;
    f.d = BitVec(f.n);
    std::vector<std::size_t> lam_i = set_bits(f.D.row(i));
    std::vector<std::size_t> lam_j = set_bits(f.D.row(j));
    if (!lam_i.empty() || !lam_j.empty()) {
        Circuit c1(f.n);
        for (std::size_t k : lam_j) {
            c1.push(Gate::cx(i, k));
            c1.push(Gate::cz(j, k));
        }
        for (std::size_t k : lam_i) {
            c1.push(Gate::cx(j, k));
            c1.push(Gate::cz(i, k));
        }
        PzxForm r1 = c_to_pzx(c1, PzxForm::identity(f.n));
        clear_vertex(f.D, i);
        clear_vertex(f.D, j);
        f.D ^= r1.B;
        for (std::size_t k : lam_i) {
            transvect_vec(f.u, {k, j});
            transvect_vec(f.v, {j, k});
        }
        for (std::size_t k : lam_j) {
            transvect_vec(f.u, {k, i});
            transvect_vec(f.v, {i, k});
        }
        Circuit c2(f.n);
        for (std::size_t k : lam_i) c2.push(Gate::cx(k, j));
        for (std::size_t k : lam_j) c2.push(Gate::cx(k, i));
        PzxForm bot(f.n);
        bot.b = f.b;
        bot.B = f.B;
        bot.A = f.A;
        PzxForm r2 = c_to_pzx(c2, bot);
        f.u ^= r1.v;
        f.v ^= r2.v;
        f.b = r2.b;
        f.B = r2.B;
        f.A = r2.A;
    }
    bool dsi = d_saved.get(i);
    bool dsj = d_saved.get(j);
    if (!dsi && !dsj) {
        f.d = d_saved;
    } else if (!dsi && dsj) {
        // Z^h_{ij} P_d Z^h_{ij} = P_i^h X_[ij] P_d
        f.d = d_saved;
        fold_cx_past_h(f, i, j);
        merge_p_past_h(f, i);
    } else if (dsi && !dsj) {
        f.d = d_saved;
        fold_cx_past_h(f, j, i);
        merge_p_past_h(f, j);
    } else {
        // Z^h_{ij} P_d Z^h_{ij} = P_i^h X_[ij] P_d P_j^h X_[ji], merged
        // right to left
        fold_cx_past_h(f, j, i);
        merge_p_past_h(f, j);
        for (std::size_t k : set_bits(d_saved)) {
            if (f.d.get(k)) f.u.flip(k);
            f.d.flip(k);
        }
        fold_cx_past_h(f, i, j);
        merge_p_past_h(f, i);
    }
}

}  // namespace

IntermediateForm IntermediateForm::base(std::size_t n) {
    IntermediateForm f;
    f.n = n;
    f.a = BitVec::ones(n);
    f.d = BitVec(n);
    f.D = SymZeroDiag(n);
    f.u = BitVec(n);
    f.v = BitVec(n);
    f.b = BitVec(n);
    f.B = SymZeroDiag(n);
    f.A = BitMat::identity(n);
    return f;
}

Circuit IntermediateForm::to_circuit(SynthMethod method) const {
    Circuit c(n);
    std::vector<Transvection> word = synthesize(A, method);
    for (auto it = word.rbegin(); it != word.rend(); ++it) c.push(Gate::cx(it->i, it->j));
    for (auto [p, q] : B.edges()) c.push(Gate::cz(p, q));
    for (std::size_t k : set_bits(b)) c.push(Gate::p(k));
    for (std::size_t k : set_bits(v)) c.push(Gate::z(k));
    for (std::size_t k : set_bits(u)) c.push(Gate::x(k));
    for (std::size_t k = 0; k < n; ++k) c.push(Gate::h(k));
    for (auto [p, q] : D.edges()) c.push(Gate::cz(p, q));
    for (std::size_t k : set_bits(d)) c.push(Gate::p(k));
    for (std::size_t k : set_bits(a)) c.push(Gate::h(k));
    return c;
}

IntermediateForm merge_h(std::size_t i, IntermediateForm f) {
    f.a.flip(i);
    return f;
}

IntermediateForm merge_p(std::size_t i, IntermediateForm f) {
    if (!f.a.get(i)) {
        if (f.d.get(i)) f.u.flip(i);
        f.d.flip(i);
    } else {
        merge_p_past_h(f, i);
    }
    return f;
}

IntermediateForm merge_cx(std::size_t i, std::size_t j, IntermediateForm f) {
    if (i == j || i >= f.n || j >= f.n) throw std::out_of_range("CX indices out of range");
    bool ai = f.a.get(i);
    bool aj = f.a.get(j);
    if (!ai && !aj) {
        fold_cx_past_h(f, i, j);
    } else if (ai && aj) {
        // through the H layer the gate turns into X_[ji]
        fold_cx_past_h(f, j, i);
    } else if (ai && !aj) {
        // through the H layer the gate turns into Z_{ij}
        f.D.flip_edge(i, j);
    } else {
        // through the H layer the gate turns into Z^h_{ij}
        if (f.D.get(i, j)) {
            // Z^h_{ij} Z_{ij} = H_i H_j X_(ij) Z^h_{ij}: absorb the swap by
            // relabeling i and j in every layer to the right
            f.D.flip_edge(i, j);
            f.a.flip(i);
            f.a.flip(j);
            swap_bits(f.d, i, j);
            f.D.swap_qubits(i, j);
            swap_bits(f.u, i, j);
            swap_bits(f.v, i, j);
            swap_bits(f.b, i, j);
            f.B.swap_qubits(i, j);
            f.A.swap_rows(i, j);
        }
        merge_cz_past_h(f, i, j);
    }
    return f;
}

GenPzxForm finish(const IntermediateForm& f) {
    GenPzxForm g;
    g.n = f.n;
    g.phi = f.phi;
    g.r = f.a;
    g.u = f.u;
    g.d = f.d;
    g.D = f.D;
    g.s = BitVec::ones(f.n);
    g.v = f.v;
    g.b = f.b;
    g.B = f.B;
    g.A = f.A;
    for (std::size_t i = 0; i < f.n; ++i) {
        bool involved = f.u.get(i) || f.d.get(i) || f.D.row(i).any();
        if (f.a.get(i) && !involved) {
            g.r.set(i, false);
            g.s.set(i, false);
        }
    }
    return g;
}

GenPzxForm c_to_gpzx(const Circuit& c) {
    Circuit flat = desugar(c);
    IntermediateForm f = IntermediateForm::base(c.n);
    for (const Gate& g : flat.gates) {
        switch (g.kind) {
            case GateKind::H:
                f = merge_h(g.i, std::move(f));
                break;
            case GateKind::P:
                f = merge_p(g.i, std::move(f));
                break;
            case GateKind::CX:
                f = merge_cx(g.i, g.j, std::move(f));
                break;
            default:
                throw std::logic_error("desugared circuit contains a non-generator gate");
        }
    }
    return finish(f);
}

Circuit gpzx_to_circuit(const GenPzxForm& f, SynthMethod method) {
    Circuit c(f.n);
    std::vector<Transvection> word = synthesize(f.A, method);
    for (auto it = word.rbegin(); it != word.rend(); ++it) c.push(Gate::cx(it->i, it->j));
    for (auto [p, q] : f.B.edges()) c.push(Gate::cz(p, q));
    for (std::size_t k : set_bits(f.b)) c.push(Gate::p(k));
    for (std::size_t k : set_bits(f.v)) c.push(Gate::z(k));
    for (std::size_t k : set_bits(f.s)) c.push(Gate::h(k));
    for (auto [p, q] : f.D.edges()) c.push(Gate::cz(p, q));
    for (std::size_t k : set_bits(f.d)) c.push(Gate::p(k));
    for (std::size_t k : set_bits(f.u)) c.push(Gate::z(k));
    for (std::size_t k : set_bits(f.r)) c.push(Gate::h(k));
    return c;
}

namespace {

nlohmann::json edges_json(const SymZeroDiag& g) {
    nlohmann::json out = nlohmann::json::array();
    for (auto [p, q] : g.edges()) out.push_back({p, q});
    return out;
}

nlohmann::json rows_json(const BitMat& m) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t r = 0; r < m.size(); ++r) out.push_back(m.row(r).str());
    return out;
}

}  // namespace

nlohmann::json gpzx_json(const GenPzxForm& f) {
    nlohmann::json j;
    j["qubits"] = f.n;
    j["phi_octants"] = f.phi.k;
    j["r"] = f.r.str();
    j["u"] = f.u.str();
    j["d"] = f.d.str();
    j["D"] = edges_json(f.D);
    j["s"] = f.s.str();
    j["v"] = f.v.str();
    j["b"] = f.b.str();
    j["B"] = edges_json(f.B);
    j["A"] = rows_json(f.A);
    return j;
}

std::string gpzx_text(const GenPzxForm& f) {
    std::ostringstream os;
    os << "qubits " << f.n << "\n";
    os << "phi " << f.phi.k << "*pi/4\n";
    os << "r " << f.r.str() << "\n";
    os << "u " << f.u.str() << "\n";
    os << "d " << f.d.str() << "\n";
    os << "D";
    for (auto [p, q] : f.D.edges()) os << " {" << p << "," << q << "}";
    os << "\n";
    os << "s " << f.s.str() << "\n";
    os << "v " << f.v.str() << "\n";
    os << "b " << f.b.str() << "\n";
    os << "B";
    for (auto [p, q] : f.B.edges()) os << " {" << p << "," << q << "}";
    os << "\n";
    os << "A\n";
    for (std::size_t r = 0; r < f.A.size(); ++r) os << "  " << f.A.row(r).str() << "\n";
    return os.str();
}

std::string intermediate_text(const IntermediateForm& f) {
    std::ostringstream os;
    os << "a " << f.a.str() << "\n";
    os << "d " << f.d.str() << "\n";
    os << "D";
    for (auto [p, q] : f.D.edges()) os << " {" << p << "," << q << "}";
    os << "\n";
    os << "phi " << f.phi.k << "*pi/4\n";
    os << "u " << f.u.str() << "\n";
    os << "v " << f.v.str() << "\n";
    os << "b " << f.b.str() << "\n";
    os << "B";
    for (auto [p, q] : f.B.edges()) os << " {" << p << "," << q << "}";
    os << "\n";
    os << "A\n";
    for (std::size_t r = 0; r < f.A.size(); ++r) os << "  " << f.A.row(r).str() << "\n";
    return os.str();
}

std::size_t slot_bits(std::size_t n) {
    return 3 + 6 * n + 2 * (n * (n - 1) / 2) + n * n;
}

}  // namespace stabnf

