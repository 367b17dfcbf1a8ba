#include "stabnf/conjrules.hpp"

namespace stabnf {

namespace {
inline int mod4(int x) { return ((x % 4) + 4) % 4; }
}

PauliTerm::PauliTerm(int lambda_, BitVec u_, BitVec v_)
    : lambda(mod4(lambda_)), u(std::move(u_)), v(std::move(v_)) {
    if (u.size() != v.size()) throw std::invalid_argument("pauli term size mismatch");
}

PauliTerm pauli_mul(const PauliTerm& p, const PauliTerm& q) {
    if (p.size() != q.size()) throw std::invalid_argument("pauli term size mismatch");
    // X_u Z_v X_u' Z_v' = (-1)^{u'.v} X_{u+u'} Z_{v+v'}
    int sign = (q.u.dot(p.v)) ? 2 : 0;
    return PauliTerm(p.lambda + q.lambda + sign, p.u ^ q.u, p.v ^ q.v);
}

PauliTerm conj_pauli_by_gate(const PauliTerm& p, const Gate& g) {
    PauliTerm r = p;
    switch (g.kind) {
        case GateKind::P:
            // P_i X_u Z_v P_i^{-1} = i^{u_i} X_u Z_{v + u_i e_i}
            if (r.u.get(g.i)) {
                r.lambda = mod4(r.lambda + 1);
                r.v.flip(g.i);
            }
            return r;
        case GateKind::CX:
            // X_[ij] X_u Z_v X_[ij] = X_{[ij]u} Z_{[ji]v}
            transvect_vec(r.u, {g.i, g.j});
            transvect_vec(r.v, {g.j, g.i});
            return r;
        case GateKind::CZ:
            // Z_{ij} X_u Z_v Z_{ij} = (-1)^{u_i u_j} X_u Z_{v + u_j e_i + u_i e_j}
            if (r.u.get(g.i) && r.u.get(g.j)) r.lambda = mod4(r.lambda + 2);
            if (r.u.get(g.j)) r.v.flip(g.i);
            if (r.u.get(g.i)) r.v.flip(g.j);
            return r;
        default:
            throw std::invalid_argument(std::string("cannot conjugate a Pauli term by ") +
                                        mnemonic(g.kind));
    }
}

PauliTerm conj_pauli_by_h_layer(const PauliTerm& p) {
    // h X_u Z_v h = Z_u X_v; reordering into X-then-Z costs (-1)^{u.v}
    int sign = p.u.dot(p.v) ? 2 : 0;
    return PauliTerm(p.lambda + sign, p.v, p.u);
}

PauliTerm conj_pauli_by_layers(const PauliTerm& p, const BitVec& b) {
    if (b.size() != p.size()) throw std::invalid_argument("layer size mismatch");
    BitVec bu = b & p.u;
    return PauliTerm(p.lambda + int(bu.count() % 4), p.u, p.v ^ bu);
}

PauliTerm conj_pauli_by_layers(const PauliTerm& p, const BitMat& a) {
    if (a.size() != p.size()) throw std::invalid_argument("layer size mismatch");
    BitMat ainv_t = invert(a).transposed();
    return PauliTerm(p.lambda, a.mul(p.u), ainv_t.mul(p.v));
}

PauliTerm conj_pauli_by_layers(const PauliTerm& p, const SymZeroDiag& b) {
    if (b.size() != p.size()) throw std::invalid_argument("layer size mismatch");
    int sign = eval_qform(QuadraticForm{b}, p.u) ? 2 : 0;
    return PauliTerm(p.lambda + sign, p.u, p.v ^ b.mul(p.u));
}

}  // namespace stabnf
