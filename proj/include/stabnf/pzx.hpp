#ifndef STABNF_PZX_HPP
#define STABNF_PZX_HPP

#include <stdexcept>

#include <json.hpp>

#include "stabnf/circuit.hpp"
#include "stabnf/gf2core.hpp"
#include "stabnf/synth.hpp"

namespace stabnf {

struct unsupported_gate_error : std::runtime_error {
    explicit unsupported_gate_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Z_v P_b Z_B X_A. The tuple is unique for each circuit over {P, CZ, CX},
// so equal circuits normalize to bit-identical forms.
struct PzxForm {
    std::size_t n = 0;
    BitVec v, b;
    SymZeroDiag B;
    BitMat A;
    // Transvections consumed so far. A is authoritative; the word is kept for
    // diagnostics and is ignored by comparisons.
    std::vector<Transvection> word;

    PzxForm() = default;
    explicit PzxForm(std::size_t n_) : n(n_), v(n_), b(n_), B(n_), A(BitMat::identity(n_)) {}

    static PzxForm identity(std::size_t n) { return PzxForm(n); }

    bool operator==(const PzxForm& o) const {
        return n == o.n && v == o.v && b == o.b && B == o.B && A == o.A;
    }
    bool operator!=(const PzxForm& o) const { return !(*this == o); }
};

// Keeps P/CZ/CX, expands Z into P P and SWAP into three CX. H (and the X/Y
// gates, whose expansions need H) cannot appear in a P/CZ/CX product.
Circuit reduce_to_pzx_gates(const Circuit& c);

// Form of C . F_in, folding the gates of c from its rightmost operator
// factor, i.e. walking the stored sequence front to back.
PzxForm c_to_pzx(const Circuit& c, const PzxForm& f_in);
PzxForm c_to_pzx(const Circuit& c);

// Form of the product F . G, by replaying f's layers onto g.
PzxForm pzx_compose(const PzxForm& f, const PzxForm& g);

// Emission order: CX word for A first, then CZ, P, Z layers. The Z layer
// uses native Z gates unless generators_only asks for P pairs.
Circuit pzx_to_circuit(const PzxForm& f, SynthMethod method = SynthMethod::PMH,
                       bool generators_only = false);

nlohmann::json pzx_json(const PzxForm& f);
std::string pzx_text(const PzxForm& f);

}  // namespace stabnf

#endif
