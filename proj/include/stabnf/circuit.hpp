#ifndef STABNF_CIRCUIT_HPP
#define STABNF_CIRCUIT_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace stabnf {

enum class GateKind { H, P, X, Y, Z, CX, CZ, SWAP };

const char* mnemonic(GateKind k);
bool is_two_qubit(GateKind k);

// CX follows the X_[ij] convention: i is the target, j the control. This is
// the opposite of the usual cx(control, target) order; export_qasm flips it
// back. CZ and SWAP are symmetric and canonicalized to i < j.
struct Gate {
    GateKind kind = GateKind::H;
    std::size_t i = 0;
    std::size_t j = 0;

    static Gate h(std::size_t i) { return {GateKind::H, i, 0}; }
    static Gate p(std::size_t i) { return {GateKind::P, i, 0}; }
    static Gate x(std::size_t i) { return {GateKind::X, i, 0}; }
    static Gate y(std::size_t i) { return {GateKind::Y, i, 0}; }
    static Gate z(std::size_t i) { return {GateKind::Z, i, 0}; }
    static Gate cx(std::size_t target, std::size_t control);
    static Gate cz(std::size_t a, std::size_t b);
    static Gate swap(std::size_t a, std::size_t b);

    bool operator==(const Gate& o) const { return kind == o.kind && i == o.i && j == o.j; }
};

// Gates are stored in application order: gates[0] acts on the ket first, so
// the circuit's operator is gates[len-1] ... gates[1] gates[0]. Algorithms
// that fold a product M_1 ... M_len from its rightmost factor therefore walk
// the stored sequence front to back.
struct Circuit {
    std::size_t n = 0;
    std::vector<Gate> gates;

    Circuit() = default;
    explicit Circuit(std::size_t n_) : n(n_) {}

    void push(const Gate& g);
    std::size_t two_qubit_count() const;
};

struct parse_error : std::runtime_error {
    std::size_t line;
    parse_error(std::size_t line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

Circuit parse_circuit(const std::string& text);
// one mnemonic line, e.g. "CX 0 1"; lineno only flavors the error message
Gate parse_gate_line(const std::string& line, std::size_t n, std::size_t lineno);
std::string serialize(const Circuit& c);

/// Rewrites every gate over the generator set {H, P, CX}:
//   Z = P P, X = H P P H, Y = P H P P H P P P,
//   CZ(i,j) = H_i CX(i,j) H_i, SWAP(i,j) = CX(i,j) CX(j,i) CX(i,j).
// The expansions are exact, global phase included.
Circuit desugar(const Circuit& c);

std::string export_qasm(const Circuit& c);

nlohmann::json circuit_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

// Global phase e^{i k pi/4}, k mod 8.
struct PhaseOctant {
    int k = 0;

    PhaseOctant& operator+=(int d) {
        k = ((k + d) % 8 + 8) % 8;
        return *this;
    }
    std::complex<double> value() const;
    bool operator==(const PhaseOctant& o) const { return k == o.k; }
    bool operator!=(const PhaseOctant& o) const { return k != o.k; }
};

}  // namespace stabnf

#endif
