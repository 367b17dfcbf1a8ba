#include "stabnf/circuit.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace stabnf {

const char* mnemonic(GateKind k) {
    switch (k) {
        case GateKind::H: return "H";
        case GateKind::P: return "P";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::CX: return "CX";
        case GateKind::CZ: return "CZ";
        case GateKind::SWAP: return "SWAP";
    }
    return "?";
}

bool is_two_qubit(GateKind k) {
    return k == GateKind::CX || k == GateKind::CZ || k == GateKind::SWAP;
}

Gate Gate::cx(std::size_t target, std::size_t control) {
    if (target == control) throw std::invalid_argument("CX: duplicate qubit index");
    return {GateKind::CX, target, control};
}

Gate Gate::cz(std::size_t a, std::size_t b) {
    if (a == b) throw std::invalid_argument("CZ: duplicate qubit index");
    if (a > b) std::swap(a, b);
    return {GateKind::CZ, a, b};
}

Gate Gate::swap(std::size_t a, std::size_t b) {
    if (a == b) throw std::invalid_argument("SWAP: duplicate qubit index");
    if (a > b) std::swap(a, b);
    return {GateKind::SWAP, a, b};
}

void Circuit::push(const Gate& g) {
    if (g.i >= n || (is_two_qubit(g.kind) && g.j >= n))
        throw std::out_of_range("gate index out of range");
    gates.push_back(g);
}

std::size_t Circuit::two_qubit_count() const {
    std::size_t c = 0;
    for (const auto& g : gates)
        if (is_two_qubit(g.kind)) ++c;
    return c;
}

namespace {

GateKind kind_of(const std::string& word, std::size_t lineno) {
    if (word == "H") return GateKind::H;
    if (word == "P") return GateKind::P;
    if (word == "X") return GateKind::X;
    if (word == "Y") return GateKind::Y;
    if (word == "Z") return GateKind::Z;
    if (word == "CX") return GateKind::CX;
    if (word == "CZ") return GateKind::CZ;
    if (word == "SWAP") return GateKind::SWAP;
    throw parse_error(lineno, "unknown mnemonic '" + word + "'");
}

std::size_t parse_index(const std::string& tok, std::size_t lineno) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error(lineno, "expected a qubit index, got '" + tok + "'");
    return std::stoul(tok);
}

}  // namespace

Gate parse_gate_line(const std::string& line, std::size_t n, std::size_t lineno) {
    std::istringstream in(line);
    std::string word;
    in >> word;
    GateKind k = kind_of(word, lineno);
    std::string ti, tj, extra;
    in >> ti;
    if (ti.empty()) throw parse_error(lineno, "missing qubit index");
    std::size_t i = parse_index(ti, lineno);
    std::size_t j = 0;
    if (is_two_qubit(k)) {
        in >> tj;
        if (tj.empty()) throw parse_error(lineno, "two-qubit gate needs two indices");
        j = parse_index(tj, lineno);
        if (i == j) throw parse_error(lineno, "duplicate index on a two-qubit gate");
    }
    if (in >> extra) throw parse_error(lineno, "trailing text '" + extra + "'");
    if (i >= n || (is_two_qubit(k) && j >= n)) throw parse_error(lineno, "qubit index out of range");
    switch (k) {
        case GateKind::CX: return Gate::cx(i, j);
        case GateKind::CZ: return Gate::cz(i, j);
        case GateKind::SWAP: return Gate::swap(i, j);
        default: return {k, i, 0};
    }
}

Circuit parse_circuit(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    Circuit c;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);
        if (!have_header) {
            std::istringstream hdr(line);
            std::string word, num, extra;
            hdr >> word >> num;
            if (word != "qubits")
                throw parse_error(lineno, "missing qubits header");
            if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
                throw parse_error(lineno, "qubits header needs a count");
            if (hdr >> extra) throw parse_error(lineno, "trailing text '" + extra + "'");
            c.n = std::stoul(num);
            have_header = true;
            continue;
        }
        c.gates.push_back(parse_gate_line(line, c.n, lineno));
    }
    if (!have_header) throw parse_error(lineno + 1, "missing qubits header");
    return c;
}

std::string serialize(const Circuit& c) {
    std::string out = "qubits " + std::to_string(c.n) + "\n";
    for (const auto& g : c.gates) {
        out += mnemonic(g.kind);
        out += ' ';
        out += std::to_string(g.i);
        if (is_two_qubit(g.kind)) {
            out += ' ';
            out += std::to_string(g.j);
        }
        out += '\n';
    }
    return out;
}

Circuit desugar(const Circuit& c) {
    Circuit out(c.n);
    for (const auto& g : c.gates) {
        switch (g.kind) {
            case GateKind::H:
            case GateKind::P:
            case GateKind::CX:
                out.push(g);
                break;
            case GateKind::Z:
                out.push(Gate::p(g.i));
                out.push(Gate::p(g.i));
                break;
            case GateKind::X:
                out.push(Gate::h(g.i));
                out.push(Gate::p(g.i));
                out.push(Gate::p(g.i));
                out.push(Gate::h(g.i));
                break;
            case GateKind::Y:
                // Y = P H P^2 H P^3 as an operator, emitted right to left
                for (int k = 0; k < 3; ++k) out.push(Gate::p(g.i));
                out.push(Gate::h(g.i));
                out.push(Gate::p(g.i));
                out.push(Gate::p(g.i));
                out.push(Gate::h(g.i));
                out.push(Gate::p(g.i));
                break;
            case GateKind::CZ:
                out.push(Gate::h(g.i));
                out.push(Gate::cx(g.i, g.j));
                out.push(Gate::h(g.i));
                break;
            case GateKind::SWAP:
                out.push(Gate::cx(g.i, g.j));
                out.push(Gate::cx(g.j, g.i));
                out.push(Gate::cx(g.i, g.j));
                break;
        }
    }
    return out;
}

std::string export_qasm(const Circuit& c) {
    std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" + std::to_string(c.n) +
                      "];\n";
    for (const auto& g : c.gates) {
        std::string qi = "q[" + std::to_string(g.i) + "]";
        std::string qj = "q[" + std::to_string(g.j) + "]";
        switch (g.kind) {
            case GateKind::H: out += "h " + qi + ";\n"; break;
            case GateKind::P: out += "s " + qi + ";\n"; break;
            case GateKind::X: out += "x " + qi + ";\n"; break;
            case GateKind::Y: out += "y " + qi + ";\n"; break;
            case GateKind::Z: out += "z " + qi + ";\n"; break;
            // our CX carries (target, control); QASM wants control first
            case GateKind::CX: out += "cx " + qj + "," + qi + ";\n"; break;
            case GateKind::CZ: out += "cz " + qi + "," + qj + ";\n"; break;
            case GateKind::SWAP: out += "swap " + qi + "," + qj + ";\n"; break;
        }
    }
    return out;
}

nlohmann::json circuit_json(const Circuit& c) {
    nlohmann::json gates = nlohmann::json::array();
    for (const auto& g : c.gates) {
        nlohmann::json e = nlohmann::json::array();
        e.push_back(mnemonic(g.kind));
        e.push_back(g.i);
        if (is_two_qubit(g.kind)) e.push_back(g.j);
        gates.push_back(e);
    }
    return nlohmann::json{{"qubits", c.n}, {"gates", gates}};
}

Circuit circuit_from_json(const nlohmann::json& j) {
    Circuit c(j.at("qubits").get<std::size_t>());
    for (const auto& e : j.at("gates")) {
        std::string name = e.at(0).get<std::string>();
        std::string line = name + " " + std::to_string(e.at(1).get<std::size_t>());
        if (e.size() > 2) line += " " + std::to_string(e.at(2).get<std::size_t>());
        c.gates.push_back(parse_gate_line(line, c.n, 0));
    }
    return c;
}

std::complex<double> PhaseOctant::value() const {
    const double pi = 3.14159265358979323846;
    return std::polar(1.0, k * pi / 4.0);
}

}  // namespace stabnf
