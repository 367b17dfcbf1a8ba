#include "stabnf/graphstate.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "stabnf/genpzx.hpp"

namespace stabnf {

std::pair<SymZeroDiag, BitMat> b_to_b_red(const SymZeroDiag& b) {
    std::size_t n = b.size();
    SymZeroDiag red = b;
    BitMat a = BitMat::identity(n);
    if (n < 2) return {red, a};
    std::vector<bool> pivot(n, false);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        if (pivot[j]) continue;
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (red.get(i, j)) {
                p = i;
                break;
            }
        }
        if (p == n) continue;
        pivot[p] = true;
        // step a: clear column j below the pivot
        for (std::size_t r = p + 1; r < n; ++r) {
            if (red.get(r, j)) {
                red.congruence({r, p});
                transvect_right_inplace(a, {p, r});
            }
        }
        // step b: clear row p to the right of column j
        for (std::size_t c = j + 1; c < n; ++c) {
            if (red.get(p, c)) {
                red.congruence({c, j});
                transvect_right_inplace(a, {j, c});
            }
        }
    }
    return {red, a};
}

GraphStateForm reduce_graph_state(const SymZeroDiag& b, SynthMethod method) {
    auto [red, a] = b_to_b_red(b);
    GraphStateForm f;
    f.n = b.size();
    f.v = qform_of_matrix({red}, invert(a));
    f.word = synthesize(a, method);
    f.b_red = red;
    return f;
}

GainReport gain(const SymZeroDiag& b, const GraphStateForm& f) {
    GainReport r;
    r.ell = b.edge_count();
    r.ell_prime = f.two_qubit_count();
    if (r.ell > r.ell_prime)
        r.gain_pct = 100.0 * double(r.ell - r.ell_prime) / double(r.ell);
    return r;
}

StabStateForm stab_state_form(const Circuit& c) {
    Circuit flat = desugar(c);
    IntermediateForm f = IntermediateForm::base(c.n);
    for (const Gate& g : flat.gates) {
        switch (g.kind) {
            case GateKind::H: f = merge_h(g.i, std::move(f)); break;
            case GateKind::P: f = merge_p(g.i, std::move(f)); break;
            case GateKind::CX: f = merge_cx(g.i, g.j, std::move(f)); break;
            default: throw std::logic_error("desugared circuit contains a non-generator gate");
        }
    }
    // h X_u = Z_u h turns the X layer into the Z layer of the state form; the
    // remaining right block fixes |0>^n and is dropped.
    StabStateForm s;
    s.n = c.n;
    s.a = f.a;
    s.u = f.u;
    s.d = f.d;
    s.G = f.D;
    return s;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Unbiased integer in [0, bound) via rejection sampling.
std::uint64_t bounded(std::uint64_t& state, std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = splitmix64(state);
        if (r >= threshold) return r % bound;
    }
}

}  // namespace

SymZeroDiag random_graph(std::size_t n, std::size_t ell, std::uint64_t seed) {
    std::size_t max_edges = n < 2 ? 0 : n * (n - 1) / 2;
    if (ell > max_edges) throw std::out_of_range("edge count exceeds n(n-1)/2");
    std::vector<std::pair<std::size_t, std::size_t>> all;
    all.reserve(max_edges);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) all.emplace_back(i, j);
    // partial Fisher-Yates shuffle: the first ell slots become the sample
    std::uint64_t state = seed;
    for (std::size_t k = 0; k < ell; ++k) {
        std::size_t r = k + std::size_t(bounded(state, std::uint64_t(max_edges - k)));
        std::swap(all[k], all[r]);
    }
    all.resize(ell);
    return SymZeroDiag::from_edges(n, all);
}

Circuit graph_circuit(const SymZeroDiag& b) {
    Circuit c(b.size());
    for (std::size_t q = 0; q < b.size(); ++q) c.push(Gate::h(q));
    for (auto [i, j] : b.edges()) c.push(Gate::cz(i, j));
    return c;
}

Circuit reduced_graph_circuit(const GraphStateForm& f) {
    Circuit c(f.n);
    for (std::size_t q = 0; q < f.n; ++q) c.push(Gate::h(q));
    for (auto [i, j] : f.b_red.edges()) c.push(Gate::cz(i, j));
    for (auto it = f.word.rbegin(); it != f.word.rend(); ++it)
        c.push(Gate::cx(it->i, it->j));
    for (std::size_t q = 0; q < f.n; ++q)
        if (f.v.get(q)) c.push(Gate::z(q));
    return c;
}

Circuit stab_state_circuit(const StabStateForm& f) {
    Circuit c(f.n);
    for (std::size_t q = 0; q < f.n; ++q) c.push(Gate::h(q));
    for (auto [i, j] : f.G.edges()) c.push(Gate::cz(i, j));
    for (std::size_t q = 0; q < f.n; ++q)
        if (f.d.get(q)) c.push(Gate::p(q));
    for (std::size_t q = 0; q < f.n; ++q)
        if (f.u.get(q)) c.push(Gate::z(q));
    for (std::size_t q = 0; q < f.n; ++q)
        if (f.a.get(q)) c.push(Gate::h(q));
    return c;
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    return splitmix64(state);
}

GainStats gain_stats(std::size_t n, std::size_t ell, std::size_t samples,
                     std::uint64_t seed, SynthMethod method) {
    GainStats s;
    s.n = n;
    s.ell = ell;
    s.samples = samples;
    s.seed = seed;
    if (samples == 0) return s;
    double sum = 0.0, sumsq = 0.0;
    double mn = 0.0, mx = 0.0;
    for (std::size_t idx = 0; idx < samples; ++idx) {
        SymZeroDiag b = random_graph(n, ell, sample_seed(seed, idx));
        GainReport g = gain(b, reduce_graph_state(b, method));
        sum += g.gain_pct;
        sumsq += g.gain_pct * g.gain_pct;
        if (idx == 0 || g.gain_pct < mn) mn = g.gain_pct;
        if (idx == 0 || g.gain_pct > mx) mx = g.gain_pct;
    }
    double count = double(samples);
    s.mean_pct = sum / count;
    double var = sumsq / count - s.mean_pct * s.mean_pct;
    s.stddev_pct = var > 0.0 ? std::sqrt(var) : 0.0;
    s.min_pct = mn;
    s.max_pct = mx;
    return s;
}

namespace {

nlohmann::json edge_list_json(const SymZeroDiag& g) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto [i, j] : g.edges()) arr.push_back({i, j});
    return arr;
}

}  // namespace

nlohmann::json graph_state_json(const GraphStateForm& f) {
    nlohmann::json j;
    j["qubits"] = f.n;
    j["v"] = f.v.str();
    nlohmann::json word = nlohmann::json::array();
    for (const Transvection& t : f.word) word.push_back({t.i, t.j});
    j["word"] = word;
    j["B_red"] = edge_list_json(f.b_red);
    j["two_qubit_count"] = f.two_qubit_count();
    return j;
}

std::string graph_state_text(const GraphStateForm& f) {
    std::ostringstream os;
    os << "qubits " << f.n << "\n";
    os << "v " << f.v.str() << "\n";
    os << "word";
    for (const Transvection& t : f.word) os << " [" << t.i << "," << t.j << "]";
    os << "\n";
    os << "B_red";
    for (auto [i, j] : f.b_red.edges()) os << " {" << i << "," << j << "}";
    os << "\n";
    os << "two-qubit count " << f.two_qubit_count() << "\n";
    return os.str();
}

std::string stab_state_text(const StabStateForm& f) {
    std::ostringstream os;
    os << "qubits " << f.n << "\n";
    os << "a " << f.a.str() << "\n";
    os << "u " << f.u.str() << "\n";
    os << "d " << f.d.str() << "\n";
    os << "G";
    for (auto [i, j] : f.G.edges()) os << " {" << i << "," << j << "}";
    os << "\n";
    return os.str();
}

}  // namespace stabnf
