#ifndef STABNF_GRAPHSTATE_HPP
#define STABNF_GRAPHSTATE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stabnf/circuit.hpp"
#include "stabnf/gf2core.hpp"
#include "stabnf/synth.hpp"

namespace stabnf {

// Reduced preparation form of a graph state: |G> = Z_v X_A Z_Bred |+>^n.
// A is the product of the transvection word (upper triangular with unit
// diagonal) and B_red is a partial matching, so its CZ subcircuit has depth 1.
struct GraphStateForm {
    std::size_t n = 0;
    BitVec v;
    std::vector<Transvection> word;
    SymZeroDiag b_red;

    std::size_t two_qubit_count() const { return word.size() + b_red.edge_count(); }
};

// Normal form of a stabilizer state: |S> = H_a Z_u P_d Z_G h |0>^n, with G the
// graph of the underlying graph state. Global phase is discarded.
struct StabStateForm {
    std::size_t n = 0;
    BitVec a;
    BitVec u;
    BitVec d;
    SymZeroDiag G;
};

// Congruence reduction B_red = A^T B A with A upper triangular, unit diagonal.
// Pivots are chosen by minimum row index; A is accumulated by column
// operations so that the pair satisfies the congruence exactly.
std::pair<SymZeroDiag, BitMat> b_to_b_red(const SymZeroDiag& b);

GraphStateForm reduce_graph_state(const SymZeroDiag& b,
                                  SynthMethod method = SynthMethod::PMH);

struct GainReport {
    std::size_t ell = 0;        // two-qubit gates in the plain CZ form
    std::size_t ell_prime = 0;  // two-qubit gates in the reduced form
    double gain_pct = 0.0;      // max(ell - ell_prime, 0) as a percentage of ell
};

GainReport gain(const SymZeroDiag& b, const GraphStateForm& f);

// Normal form of the state c|0>^n. Merges the circuit into the intermediate
// form, commutes the X layer through h, and drops the right block, which acts
// trivially on |0>^n.
StabStateForm stab_state_form(const Circuit& c);

// Uniformly random graph with exactly ell edges, deterministic per seed and
// portable across platforms.
SymZeroDiag random_graph(std::size_t n, std::size_t ell, std::uint64_t seed);

// Plain preparation circuit of Z_B h |0>^n: H on every qubit, then one CZ per
// edge.
Circuit graph_circuit(const SymZeroDiag& b);

// Preparation circuit of the reduced form: H layer, CZ gates of B_red, the CX
// word of A, then Z gates of v.
Circuit reduced_graph_circuit(const GraphStateForm& f);

// Preparation circuit of H_a Z_u P_d Z_G h |0>^n.
Circuit stab_state_circuit(const StabStateForm& f);

// Mean two-qubit gain over a deterministic sample of random graphs. Each
// sample is keyed by (seed, index), so results do not depend on evaluation
// order.
struct GainStats {
    std::size_t n = 0;
    std::size_t ell = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double mean_pct = 0.0;
    double stddev_pct = 0.0;
    double min_pct = 0.0;
    double max_pct = 0.0;
};

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);
GainStats gain_stats(std::size_t n, std::size_t ell, std::size_t samples,
                     std::uint64_t seed, SynthMethod method = SynthMethod::PMH);

nlohmann::json graph_state_json(const GraphStateForm& f);
std::string graph_state_text(const GraphStateForm& f);
std::string stab_state_text(const StabStateForm& f);

}  // namespace stabnf

#endif
