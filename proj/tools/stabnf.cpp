#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stabnf/circuit.hpp"
#include "stabnf/genpzx.hpp"
#include "stabnf/gf2core.hpp"
#include "stabnf/graphstate.hpp"
#include "stabnf/oracle.hpp"
#include "stabnf/pzx.hpp"
#include "stabnf/synth.hpp"

namespace {

using namespace stabnf;

// Exit codes: 0 success, 1 usage, 2 parse, 3 verification mismatch.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kParse = 2;
constexpr int kMismatch = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "'");
    out << text;
}

SynthMethod method_of(const std::string& name) {
    if (name == "gauss") return SynthMethod::Gauss;
    if (name == "optimal") return SynthMethod::Optimal;
    return SynthMethod::PMH;
}

const char* gate_name(GateKind k) {
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

std::string gate_str(const Gate& g) {
    std::string s = gate_name(g.kind);
    s += ' ';
    s += std::to_string(g.i);
    if (g.kind == GateKind::CX || g.kind == GateKind::CZ || g.kind == GateKind::SWAP) {
        s += ' ';
        s += std::to_string(g.j);
    }
    return s;
}

void require_cap(std::size_t n) {
    std::size_t cap = oracle_cap();
    if (n > cap) throw oracle_cap_error(n, cap);
}

struct NormalizeOpts {
    std::string in;
    std::string form;
    std::string out;
    std::string emit = "text";
    std::string synth = "pmh";
    bool verify = false;
};

int cmd_normalize(const NormalizeOpts& o) {
    Circuit c = parse_circuit(read_file(o.in));
    SynthMethod method = method_of(o.synth);
    std::string rendered;
    Circuit back(c.n);
    if (o.form == "pzx") {
        PzxForm f = c_to_pzx(reduce_to_pzx_gates(c));
        back = pzx_to_circuit(f, method);
        if (o.emit == "json")
            rendered = pzx_json(f).dump(2) + "\n";
        else if (o.emit == "qasm")
            rendered = export_qasm(back);
        else
            rendered = pzx_text(f);
        if (o.verify) {
            require_cap(c.n);
            DenseUnitary u = build_unitary(c);
            DenseUnitary w = build_unitary(back);
            if (!approx_equal(u, w)) {
                std::cerr << "verification failed: the normal form differs from the input\n";
                return kMismatch;
            }
            std::cerr << "verified: forms agree\n";
        }
    } else {
        GenPzxForm f = c_to_gpzx(c);
        back = gpzx_to_circuit(f, method);
        if (o.emit == "json")
            rendered = gpzx_json(f).dump(2) + "\n";
        else if (o.emit == "qasm")
            rendered = export_qasm(back);
        else
            rendered = gpzx_text(f);
        if (o.verify) {
            require_cap(c.n);
            DenseUnitary u = build_unitary(c);
            DenseUnitary w = build_unitary(back).scaled(f.phi.value());
            if (!approx_equal(u, w)) {
                std::cerr << "verification failed: the normal form differs from the input\n";
                return kMismatch;
            }
            std::cerr << "verified: forms agree\n";
        }
    }
    write_output(o.out, rendered);
    return kOk;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_edge_list(const std::string& text) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t a = item.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        std::size_t b = item.find_last_not_of(" \t");
        item = item.substr(a, b - a + 1);
        std::size_t dash = item.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 == item.size())
            throw parse_error(0, "edge '" + item + "' is not of the form i-j");
        std::string si = item.substr(0, dash), sj = item.substr(dash + 1);
        if (si.find_first_not_of("0123456789") != std::string::npos ||
            sj.find_first_not_of("0123456789") != std::string::npos)
            throw parse_error(0, "edge '" + item + "' is not of the form i-j");
        std::size_t i = std::stoul(si), j = std::stoul(sj);
        if (i == j) throw parse_error(0, "edge '" + item + "' joins a vertex to itself");
        edges.emplace_back(i, j);
    }
    return edges;
}

struct GraphReduceOpts {
    std::string edges;
    std::size_t qubits = 0;
    std::string synth = "pmh";
};

int cmd_graph_reduce(const GraphReduceOpts& o) {
    auto edges = parse_edge_list(o.edges);
    std::size_t n = o.qubits;
    if (n == 0)
        for (auto [i, j] : edges) {
            std::size_t hi = std::max(i, j) + 1;
            if (hi > n) n = hi;
        }
    if (n == 0) throw std::runtime_error("empty graph needs --qubits");
    for (auto [i, j] : edges)
        if (i >= n || j >= n)
            throw parse_error(0, "edge endpoint exceeds --qubits");
    SymZeroDiag b = SymZeroDiag::from_edges(n, edges);
    GraphStateForm f = reduce_graph_state(b, method_of(o.synth));
    GainReport g = gain(b, f);
    std::ostringstream os;
    os << graph_state_text(f);
    os << "edges " << g.ell << "\n";
    os.setf(std::ios::fixed);
    os.precision(2);
    os << "gain " << g.gain_pct << "%\n";
    bool keep_plain = g.ell_prime > g.ell;
    Circuit emitted = keep_plain ? graph_circuit(b) : reduced_graph_circuit(f);
    os << "circuit " << (keep_plain ? "plain" : "reduced") << "\n";
    os << export_qasm(emitted);
    std::cout << os.str();
    return kOk;
}

struct SynthOpts {
    std::string matrix;
    std::string method = "pmh";
};

int cmd_synth(const SynthOpts& o) {
    BitMat m;
    try {
        m = parse_matrix_text(read_file(o.matrix));
    } catch (const std::invalid_argument& e) {
        throw parse_error(0, e.what());
    }
    std::vector<Transvection> word = synthesize(m, method_of(o.method));
    std::ostringstream os;
    os << "word";
    for (const Transvection& t : word) os << " [" << t.i << "," << t.j << "]";
    os << "\n";
    os << "count " << word.size() << "\n";
    std::cout << os.str();
    return kOk;
}

struct VerifyOpts {
    std::string a;
    std::string b;
    bool state = false;
};

// State-level octant comparison mirroring the dense-unitary rule: the phase is
// read off the first reference amplitude above 1e-6 and snapped to k pi/4.
OctantMatch state_octant_match(const StateVector& s, const StateVector& t) {
    OctantMatch miss;
    if (s.n != t.n) return miss;
    std::size_t ref = t.amp.size();
    for (std::size_t i = 0; i < t.amp.size(); ++i) {
        if (std::abs(t.amp[i]) > 1e-6) {
            ref = i;
            break;
        }
    }
    if (ref == t.amp.size()) return miss;
    std::complex<double> r = s.amp[ref] / t.amp[ref];
    if (std::abs(std::abs(r) - 1.0) > 1e-6) return miss;
    const double pi = std::acos(-1.0);
    double ang = std::arg(r);
    int k = int(std::lround(ang / (pi / 4.0)));
    if (std::abs(ang - k * (pi / 4.0)) > 1e-6) return miss;
    PhaseOctant oct;
    oct += k;
    std::complex<double> phase = oct.value();
    for (std::size_t i = 0; i < t.amp.size(); ++i)
        if (std::abs(s.amp[i] - phase * t.amp[i]) > 1e-9) return miss;
    OctantMatch hit;
    hit.equal = true;
    hit.octant = oct;
    return hit;
}

int cmd_verify(const VerifyOpts& o) {
    Circuit ca = parse_circuit(read_file(o.a));
    Circuit cb = parse_circuit(read_file(o.b));
    if (ca.n != cb.n) throw std::runtime_error("circuits act on different qubit counts");
    require_cap(ca.n);
    OctantMatch m;
    if (o.state)
        m = state_octant_match(state_of(ca), state_of(cb));
    else
        m = equal_up_to_octant_phase(build_unitary(ca), build_unitary(cb));
    if (!m.equal) {
        std::cout << "not-equal\n";
        return kMismatch;
    }
    std::cout << "equal phase " << m.octant.k << "*pi/4\n";
    return kOk;
}

struct StatsOpts {
    std::size_t qubits = 0;
    std::size_t edges = 0;
    bool have_qubits = false;
    bool have_edges = false;
    std::size_t samples = 200;
    std::uint64_t seed = 1;
    std::string format = "csv";
    bool big = false;
};

struct StatsCell {
    std::size_t n = 0;
    std::size_t ell = 0;
    GainStats s;
};

// Per-sample mean/stddev/min/max of the two-qubit gain, computed from a gains
// vector filled by the worker pool. Matches gain_stats' aggregation.
GainStats aggregate_gains(std::size_t n, std::size_t ell, std::uint64_t seed,
                          const std::vector<double>& gains) {
    GainStats s;
    s.n = n;
    s.ell = ell;
    s.samples = gains.size();
    s.seed = seed;
    if (gains.empty()) return s;
    double sum = 0.0, sumsq = 0.0, mn = gains[0], mx = gains[0];
    for (double g : gains) {
        sum += g;
        sumsq += g * g;
        if (g < mn) mn = g;
        if (g > mx) mx = g;
    }
    double count = double(gains.size());
    s.mean_pct = sum / count;
    double var = sumsq / count - s.mean_pct * s.mean_pct;
    s.stddev_pct = var > 0.0 ? std::sqrt(var) : 0.0;
    s.min_pct = mn;
    s.max_pct = mx;
    return s;
}

GainStats stats_cell(std::size_t n, std::size_t ell, std::size_t samples, std::uint64_t seed) {
    std::vector<double> gains(samples, 0.0);
    unsigned workers = std::thread::hardware_concurrency();
    if (workers < 1) workers = 1;
    if (workers > 8) workers = 8;
    if (workers <= 1 || samples < 2) {
        for (std::size_t i = 0; i < samples; ++i) {
            SymZeroDiag b = random_graph(n, ell, sample_seed(seed, i));
            gains[i] = gain(b, reduce_graph_state(b)).gain_pct;
        }
    } else {
        std::atomic<std::size_t> next{0};
        auto run = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= samples) return;
                SymZeroDiag b = random_graph(n, ell, sample_seed(seed, i));
                gains[i] = gain(b, reduce_graph_state(b)).gain_pct;
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }
    return aggregate_gains(n, ell, seed, gains);
}

int cmd_stats(const StatsOpts& o) {
    std::size_t n_cap = o.big ? 300 : 100;
    std::vector<std::size_t> ns;
    if (o.have_qubits) {
        if (o.qubits < 2) throw std::runtime_error("--qubits must be at least 2");
        if (o.qubits > n_cap)
            throw std::runtime_error("--qubits above " + std::to_string(n_cap) +
                                     (o.big ? "" : " (pass --big for larger tables)"));
        ns.push_back(o.qubits);
    } else {
        ns = {5, 10, 20, 50, 100};
        if (o.big) {
            ns.push_back(200);
            ns.push_back(300);
        }
    }
    std::vector<StatsCell> cells;
    for (std::size_t n : ns) {
        std::size_t max_edges = n * (n - 1) / 2;
        std::vector<std::size_t> ells;
        if (o.have_edges) {
            if (o.edges > max_edges)
                throw std::runtime_error("--edges exceeds n(n-1)/2 = " + std::to_string(max_edges));
            ells.push_back(o.edges);
        } else {
            for (double frac : {0.2, 0.4, 0.6, 0.8, 1.0})
                ells.push_back(std::size_t(std::llround(frac * double(max_edges))));
        }
        for (std::size_t ell : ells) cells.push_back({n, ell, {}});
    }
    for (StatsCell& c : cells) c.s = stats_cell(c.n, c.ell, o.samples, o.seed);

    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    if (o.format == "md") {
        os << "| n | edges | samples | mean_gain_pct | stddev | min | max | seed |\n";
        os << "|---|-------|---------|---------------|--------|-----|-----|------|\n";
        for (const StatsCell& c : cells)
            os << "| " << c.n << " | " << c.ell << " | " << c.s.samples << " | " << c.s.mean_pct
               << " | " << c.s.stddev_pct << " | " << c.s.min_pct << " | " << c.s.max_pct << " | "
               << c.s.seed << " |\n";
    } else {
        os << "n,edges,samples,mean_gain_pct,stddev,min,max,seed\n";
        for (const StatsCell& c : cells)
            os << c.n << ',' << c.ell << ',' << c.s.samples << ',' << c.s.mean_pct << ','
               << c.s.stddev_pct << ',' << c.s.min_pct << ',' << c.s.max_pct << ',' << c.s.seed
               << "\n";
    }
    std::cout << os.str();
    return kOk;
}

int cmd_repl(std::size_t n) {
    if (n == 0) throw std::runtime_error("--qubits must be at least 1");
    IntermediateForm f = IntermediateForm::base(n);
    std::vector<IntermediateForm> history;
    std::cout << intermediate_text(f);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(std::cin, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);
        if (line == "quit" || line == "exit") break;
        if (line == "finish") {
            std::cout << gpzx_text(finish(f));
            continue;
        }
        if (line == "undo") {
            if (history.empty()) {
                std::cout << "nothing to undo\n";
            } else {
                f = history.back();
                history.pop_back();
                std::cout << intermediate_text(f);
            }
            continue;
        }
        Gate g;
        try {
            g = parse_gate_line(line, n, lineno);
        } catch (const parse_error& e) {
            std::cout << "error: " << e.what() << "\n";
            continue;
        }
        Circuit one(n);
        one.push(g);
        Circuit flat = desugar(one);
        if (flat.gates.size() != 1) {
            std::cout << "desugared:";
            for (const Gate& dg : flat.gates) std::cout << " " << gate_str(dg) << ";";
            std::cout << "\n";
        }
        history.push_back(f);
        for (const Gate& dg : flat.gates) {
            switch (dg.kind) {
                case GateKind::H: f = merge_h(dg.i, std::move(f)); break;
                case GateKind::P: f = merge_p(dg.i, std::move(f)); break;
                case GateKind::CX: f = merge_cx(dg.i, dg.j, std::move(f)); break;
                default: break;
            }
        }
        std::cout << intermediate_text(f);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"normal forms for stabilizer circuits"};
    app.require_subcommand(1);

    NormalizeOpts nopt;
    CLI::App* normalize = app.add_subcommand("normalize", "rewrite a circuit in normal form");
    normalize->add_option("--in", nopt.in, "input circuit file")->required();
    normalize->add_option("--form", nopt.form, "target form")
        ->required()
        ->check(CLI::IsMember({"pzx", "genpzx"}));
    normalize->add_option("--out", nopt.out, "output file (default stdout)");
    normalize->add_option("--emit", nopt.emit, "output as text, json or qasm")
        ->check(CLI::IsMember({"text", "json", "qasm"}));
    normalize->add_option("--synth", nopt.synth, "CX-word synthesis method")
        ->check(CLI::IsMember({"pmh", "gauss", "optimal"}));
    normalize->add_flag("--verify", nopt.verify, "check the form against the input circuit");

    CLI::App* graph = app.add_subcommand("graph", "graph state tools");
    graph->require_subcommand(1);
    GraphReduceOpts gopt;
    CLI::App* greduce = graph->add_subcommand("reduce", "reduce a graph state preparation");
    greduce->add_option("--edges", gopt.edges, "edge list, e.g. \"0-1,1-2\"")->required();
    greduce->add_option("--qubits", gopt.qubits, "qubit count (default: max endpoint + 1)");
    greduce->add_option("--synth", gopt.synth, "CX-word synthesis method")
        ->check(CLI::IsMember({"pmh", "gauss", "optimal"}));

    SynthOpts sopt;
    CLI::App* synth = app.add_subcommand("synth", "synthesize an invertible matrix as a CX word");
    synth->add_option("--matrix", sopt.matrix, "matrix file: first line n, then n rows of 0/1")
        ->required();
    synth->add_option("--method", sopt.method, "synthesis method")
        ->check(CLI::IsMember({"pmh", "gauss", "optimal"}));

    VerifyOpts vopt;
    CLI::App* verify = app.add_subcommand("verify", "compare two circuits");
    verify->add_option("a", vopt.a, "first circuit file")->required();
    verify->add_option("b", vopt.b, "second circuit file")->required();
    verify->add_flag("--state", vopt.state, "compare the states c|0...0> instead of unitaries");

    StatsOpts topt;
    CLI::App* stats = app.add_subcommand("stats", "two-qubit gain statistics on random graphs");
    CLI::Option* oq = stats->add_option("--qubits", topt.qubits, "qubit count (default: sweep)");
    CLI::Option* oe = stats->add_option("--edges", topt.edges, "edge count (default: sweep)");
    stats->add_option("--samples", topt.samples, "samples per cell (default 200)");
    stats->add_option("--seed", topt.seed, "base seed (default 1)");
    stats->add_option("--format", topt.format, "output format")
        ->check(CLI::IsMember({"csv", "md"}));
    stats->add_flag("--big", topt.big, "allow tables up to n = 300 (default cap 100)");

    std::size_t repl_qubits = 0;
    CLI::App* repl = app.add_subcommand("repl", "enter gates one per line, see the form evolve");
    repl->add_option("--qubits", repl_qubits, "qubit count")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*normalize) return cmd_normalize(nopt);
        if (*graph) return cmd_graph_reduce(gopt);
        if (*synth) return cmd_synth(sopt);
        if (*verify) return cmd_verify(vopt);
        if (*stats) {
            topt.have_qubits = oq->count() > 0;
            topt.have_edges = oe->count() > 0;
            return cmd_stats(topt);
        }
        if (*repl) return cmd_repl(repl_qubits);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const unsupported_gate_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const singular_matrix_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
