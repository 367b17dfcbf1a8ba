#ifndef STABNF_CONJRULES_HPP
#define STABNF_CONJRULES_HPP

#include "stabnf/circuit.hpp"
#include "stabnf/gf2core.hpp"

namespace stabnf {

// i^lambda X_u Z_v with lambda mod 4. Every Pauli product has exactly one
// such representation.
struct PauliTerm {
    int lambda = 0;
    BitVec u, v;

    PauliTerm() = default;
    explicit PauliTerm(std::size_t n) : u(n), v(n) {}
    PauliTerm(int lambda_, BitVec u_, BitVec v_);

    std::size_t size() const { return u.size(); }
    bool operator==(const PauliTerm& o) const {
        return lambda == o.lambda && u == o.u && v == o.v;
    }
    bool operator!=(const PauliTerm& o) const { return !(*this == o); }
};

PauliTerm pauli_mul(const PauliTerm& p, const PauliTerm& q);

// g p g^{-1} for g one of P_i, CX, CZ. Per-qubit H is deliberately not
// supported here; the layer form below covers the only H conjugation the
// normal-form algorithms use.
PauliTerm conj_pauli_by_gate(const PauliTerm& p, const Gate& g);

// h X_u Z_v h = Z_u X_v = (-1)^{u.v} X_v Z_u
PauliTerm conj_pauli_by_h_layer(const PauliTerm& p);
// P_b X_u Z_v P_b^{-1} = i^{b.u} X_u Z_{v + b*u}
PauliTerm conj_pauli_by_layers(const PauliTerm& p, const BitVec& b);
// X_A X_u Z_v X_A^{-1} = X_{Au} Z_{A^{-T} v}
PauliTerm conj_pauli_by_layers(const PauliTerm& p, const BitMat& a);
// Z_B X_u Z_v Z_B = (-1)^{q_B(u)} X_u Z_{v + Bu}
PauliTerm conj_pauli_by_layers(const PauliTerm& p, const SymZeroDiag& b);

}  // namespace stabnf

#endif
