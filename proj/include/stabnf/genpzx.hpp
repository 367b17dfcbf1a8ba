#ifndef STABNF_GENPZX_HPP
#define STABNF_GENPZX_HPP

#include <json.hpp>

#include "stabnf/circuit.hpp"
#include "stabnf/gf2core.hpp"
#include "stabnf/pzx.hpp"
#include "stabnf/synth.hpp"

namespace stabnf {

// Working decomposition H_a P_d Z_D h e^{i phi} X_u Z_v P_b Z_B X_A kept
// live while gates are folded in from the left. The empty circuit is
// a = all-ones with every other slot trivial, since H_ones h = I.
struct IntermediateForm {
    std::size_t n = 0;
    BitVec a, d;
    SymZeroDiag D;
    PhaseOctant phi;
    BitVec u, v, b;
    SymZeroDiag B;
    BitMat A;

    static IntermediateForm base(std::size_t n);

    Circuit to_circuit(SynthMethod method = SynthMethod::Gauss) const;

    bool operator==(const IntermediateForm& o) const {
        return n == o.n && a == o.a && d == o.d && D == o.D && phi == o.phi && u == o.u &&
               v == o.v && b == o.b && B == o.B && A == o.A;
    }
    bool operator!=(const IntermediateForm& o) const { return !(*this == o); }
};

IntermediateForm merge_h(std::size_t i, IntermediateForm f);
IntermediateForm merge_p(std::size_t i, IntermediateForm f);
IntermediateForm merge_cx(std::size_t i, std::size_t j, IntermediateForm f);

// e^{i phi} H_r Z_u P_d Z_D H_s Z_v P_b Z_B X_A. Not unique; this is the
// output shape CX-CZ-P-H-CZ-P-H once emitted as a circuit.
struct GenPzxForm {
    std::size_t n = 0;
    PhaseOctant phi;
    BitVec r, u, d;
    SymZeroDiag D;
    BitVec s, v, b;
    SymZeroDiag B;
    BitMat A;
};

// Steps B and C: X_u slides through h to become Z_u, then H_i h_i pairs with
// nothing in between collapse to identity.
GenPzxForm finish(const IntermediateForm& f);

// Step A folds the (desugared) gates front to back through the merge
// routines, then finish() runs Steps B and C.
GenPzxForm c_to_gpzx(const Circuit& c);

// phi is reported separately, not emitted as gates.
Circuit gpzx_to_circuit(const GenPzxForm& f, SynthMethod method = SynthMethod::PMH);

nlohmann::json gpzx_json(const GenPzxForm& f);
std::string gpzx_text(const GenPzxForm& f);
std::string intermediate_text(const IntermediateForm& f);

// Bit count of the form's slots: 3 for phi, six n-bit vectors, two
// strictly-upper-triangle matrices, one full matrix.
std::size_t slot_bits(std::size_t n);

}  // namespace stabnf

#endif
