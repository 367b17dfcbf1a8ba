#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>
#include <string>
#include <vector>

#include "identities.hpp"
#include "stabnf/circuit.hpp"
#include "stabnf/gf2core.hpp"
#include "stabnf/oracle.hpp"
#include "stabnf/synth.hpp"

using namespace stabnf;

namespace {

BitMat random_invertible(std::size_t n, std::mt19937_64& rng) {
    BitMat a = BitMat::identity(n);
    for (std::size_t k = 0; k < 5 * n; ++k) {
        std::size_t i = rng() % n, j = rng() % n;
        if (i != j) a.add_row(i, j);
    }
    return a;
}

BitMat random_mat(std::size_t n, std::mt19937_64& rng) {
    BitMat m(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m.set(r, c, rng() & 1);
    return m;
}

SymZeroDiag random_sym(std::size_t n, std::mt19937_64& rng) {
    SymZeroDiag b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng() & 1) b.set_edge(i, j, true);
    return b;
}

BitVec random_vec(std::size_t n, std::mt19937_64& rng) {
    BitVec v(n);
    for (std::size_t i = 0; i < n; ++i)
        if (rng() & 1) v.set(i, true);
    return v;
}

Circuit random_clifford_circuit(std::size_t n, std::size_t len, std::mt19937_64& rng) {
    Circuit c(n);
    while (c.gates.size() < len) {
        std::size_t pick = rng() % 8;
        std::size_t i = rng() % n, j = rng() % n;
        if (pick >= 5 && (n < 2 || i == j)) continue;
        switch (pick) {
            case 0: c.push(Gate::h(i)); break;
            case 1: c.push(Gate::p(i)); break;
            case 2: c.push(Gate::x(i)); break;
            case 3: c.push(Gate::y(i)); break;
            case 4: c.push(Gate::z(i)); break;
            case 5: c.push(Gate::cx(i, j)); break;
            case 6: c.push(Gate::cz(i, j)); break;
            case 7: c.push(Gate::swap(i, j)); break;
        }
    }
    return c;
}

double max_diff(const DenseUnitary& x, const DenseUnitary& y) {
    REQUIRE(x.n == y.n);
    double m = 0;
    for (std::size_t k = 0; k < x.a.size(); ++k) m = std::max(m, std::abs(x.a[k] - y.a[k]));
    return m;
}

const std::vector<Transvection> k43_word = {{3, 5}, {0, 1}, {0, 4}, {2, 5}, {2, 6}, {1, 4}, {1, 5}};
const std::vector<Transvection> k43_word_rev = {{1, 5}, {1, 4}, {2, 6}, {2, 5}, {0, 4}, {0, 1}, {3, 5}};

const char* k43_a_text =
    "1100010\n"
    "0100110\n"
    "0010011\n"
    "0001010\n"
    "0000100\n"
    "0000010\n"
    "0000001\n";

const char* k43_ainv_text =
    "1100100\n"
    "0100110\n"
    "0010011\n"
    "0001010\n"
    "0000100\n"
    "0000010\n"
    "0000001\n";

SymZeroDiag k43_b_red() {
    return SymZeroDiag::from_edges(7, {{0, 3}, {1, 2}, {4, 6}});
}

}  // namespace

TEST_CASE("bitvec basics") {
    BitVec v = BitVec::parse("0110");
    CHECK(v.size() == 4);
    CHECK_FALSE(v.get(0));
    CHECK(v.get(1));
    CHECK(v.get(2));
    CHECK(v.str() == "0110");

    CHECK(BitVec::unit(4, 2).str() == "0010");
    CHECK(BitVec::ones(3).str() == "111");

    BitVec w = BitVec::parse("1100");
    CHECK((v ^ w).str() == "1010");
    CHECK((v & w).str() == "0100");
    CHECK(v.dot(w));
    CHECK_FALSE(v.dot(BitVec::parse("1001")));
    CHECK(v.count() == 2);
    CHECK(v.any());
    CHECK_FALSE(BitVec(4).any());

    CHECK(v.next_set(0) == 1);
    CHECK(v.next_set(2) == 2);
    CHECK(v.next_set(3) == 4);

    CHECK_THROWS_AS(v.get(4), std::out_of_range);
    CHECK_THROWS_AS(v ^ BitVec(3), std::invalid_argument);

    BitVec big(130);
    big.set(129, true);
    CHECK(big.next_set(0) == 129);
    CHECK(big.count() == 1);
}

TEST_CASE("transvection matrices act by row and column addition") {
    BitMat m = BitMat::identity(2);
    BitMat left = transvect_left(m, {0, 1});
    CHECK(left.row(0).str() == "11");
    CHECK(left.row(1).str() == "01");

    BitMat right = transvect_right(m, {0, 1});
    CHECK(right.col(0).str() == "10");
    CHECK(right.col(1).str() == "11");

    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        BitMat r = random_mat(5, rng);
        Transvection tv{rng() % 5, 0};
        while (tv.j == tv.i) tv = {tv.i, rng() % 5};
        CHECK(transvect_left(transvect_left(r, tv), tv) == r);
        CHECK(transvect_right(transvect_right(r, tv), tv) == r);
    }
}

TEST_CASE("squared mixed transvection pair collapses") {
    std::vector<Transvection> w = {{0, 1}, {1, 2}, {0, 1}, {1, 2}};
    CHECK(word_product(3, w) == word_product(3, {{0, 2}}));
}

TEST_CASE("transvection word product matches the cnot circuit action") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 2 + rng() % 3;
        std::vector<Transvection> word;
        for (int k = 0; k < 6; ++k) {
            std::size_t i = rng() % n, j = rng() % n;
            if (i != j) word.push_back({i, j});
        }
        BitMat m = word_product(n, word);

        // X_{t1}...X_{tk}|e_c> = |M e_c>, circuit order is the reversed word
        Circuit c(n);
        for (auto it = word.rbegin(); it != word.rend(); ++it) c.push(Gate::cx(it->i, it->j));
        DenseUnitary u = build_unitary(c);
        BitMat extracted(n);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t in_idx = std::size_t(1) << (n - 1 - col);
            for (std::size_t r = 0; r < u.dim(); ++r)
                if (std::abs(u.at(r, in_idx) - cplx(1, 0)) < 1e-12)
                    for (std::size_t bit = 0; bit < n; ++bit)
                        extracted.set(bit, col, (r >> (n - 1 - bit)) & 1);
        }
        CHECK(extracted == m);
    }
}

TEST_CASE("matrix inversion round-trips and rejects singular input") {
    CHECK(invert(BitMat::identity(4)) == BitMat::identity(4));

    std::mt19937_64 rng(7);
    for (int t = 0; t < 25; ++t) {
        std::size_t n = 1 + rng() % 6;
        BitMat a = random_invertible(n, rng);
        CHECK(a.mul(invert(a)).is_identity());
        CHECK(invert(a).mul(a).is_identity());
    }

    BitMat s(2);
    s.set(0, 0, true);
    s.set(0, 1, true);
    s.set(1, 0, true);
    s.set(1, 1, true);
    CHECK_THROWS_AS(invert(s), singular_matrix_error);
    CHECK_THROWS_AS(invert(BitMat(3)), singular_matrix_error);
}

TEST_CASE("worked seven-qubit transvection word and its inverse") {
    BitMat a = word_product(7, k43_word);
    CHECK(a == BitMat::parse(k43_a_text));

    BitMat ainv = invert(a);
    CHECK(ainv == BitMat::parse(k43_ainv_text));
    CHECK(ainv == word_product(7, k43_word_rev));
    CHECK(a.mul(ainv).is_identity());
}

TEST_CASE("symmetric zero-diagonal matrices behave like edge sets") {
    SymZeroDiag b = SymZeroDiag::from_edges(4, {{0, 1}, {2, 3}, {1, 0}});
    CHECK(b.edge_count() == 2);
    CHECK(b.get(0, 1));
    CHECK(b.get(1, 0));
    CHECK_FALSE(b.get(0, 2));

    b.flip_edge(0, 2);
    CHECK(b.get(2, 0));
    b.set_edge(0, 2, false);
    CHECK_FALSE(b.get(0, 2));

    auto edges = b.edges();
    REQUIRE(edges.size() == 2);
    CHECK(edges[0] == std::pair<std::size_t, std::size_t>{0, 1});
    CHECK(edges[1] == std::pair<std::size_t, std::size_t>{2, 3});

    SymZeroDiag c = SymZeroDiag::from_edges(4, {{0, 1}, {1, 2}});
    SymZeroDiag x = b ^ c;
    CHECK(x.edge_count() == 2);
    CHECK(x.get(2, 3));
    CHECK(x.get(1, 2));
    CHECK_FALSE(x.get(0, 1));
}

TEST_CASE("congruence by a transvection matches the dense matrix computation") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 2 + rng() % 5;
        SymZeroDiag b = random_sym(n, rng);
        std::size_t i = rng() % n, j = rng() % n;
        if (i == j) continue;

        SymZeroDiag got = b;
        got.congruence({i, j});

        // [ij] B [ij]^T
        BitMat expect = transvect_left(b.to_mat(), {i, j});
        expect = transvect_right(expect, {j, i});
        CHECK(got.to_mat() == expect);
    }
}

TEST_CASE("qubit swap on a graph relabels its edges") {
    SymZeroDiag b = SymZeroDiag::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    b.swap_qubits(1, 3);
    auto edges = b.edges();
    REQUIRE(edges.size() == 3);
    CHECK(b.get(0, 3));
    CHECK(b.get(2, 3));
    CHECK(b.get(1, 2));
}

TEST_CASE("quadratic form evaluation") {
    QuadraticForm q{k43_b_red()};
    CHECK(eval_qform(q, BitVec::parse("1001000")));
    for (std::size_t i = 0; i < 7; ++i) CHECK_FALSE(eval_qform(q, BitVec::unit(7, i)));

    std::mt19937_64 rng(9);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 2 + rng() % 5;
        SymZeroDiag b = random_sym(n, rng);
        BitVec x = random_vec(n, rng);
        bool direct = false;
        for (auto [i, j] : b.edges()) direct ^= (x.get(i) && x.get(j));
        CHECK(eval_qform({b}, x) == direct);
    }
}

TEST_CASE("quadratic form of a matrix goes column by column") {
    QuadraticForm q{k43_b_red()};
    BitMat ainv = BitMat::parse(k43_ainv_text);
    CHECK(qform_of_matrix(q, ainv).str() == "0000010");
    CHECK_FALSE(qform_of_matrix(q, BitMat::identity(7)).any());

    std::mt19937_64 rng(10);
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 2 + rng() % 5;
        SymZeroDiag b = random_sym(n, rng);
        BitMat m = random_mat(n, rng);
        BitVec v = qform_of_matrix({b}, m);
        for (std::size_t c = 0; c < n; ++c) CHECK(v.get(c) == eval_qform({b}, m.col(c)));
    }
}

TEST_CASE("matrix text parses and serializes") {
    BitMat m = parse_matrix_text("2\n10\n11\n");
    CHECK(m.get(0, 0));
    CHECK_FALSE(m.get(0, 1));
    CHECK(m.get(1, 1));
    CHECK(parse_matrix_text(matrix_text(m)) == m);

    CHECK_THROWS_AS(parse_matrix_text(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix_text("x\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix_text("2\n10\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix_text("2\n10\n111\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix_text("2\n10\n1x\n"), std::invalid_argument);
}

TEST_CASE("gate constructors enforce the index conventions") {
    Gate c = Gate::cx(2, 0);
    CHECK(c.i == 2);
    CHECK(c.j == 0);

    Gate z = Gate::cz(3, 1);
    CHECK(z.i == 1);
    CHECK(z.j == 3);
    Gate s = Gate::swap(3, 1);
    CHECK(s.i == 1);
    CHECK(s.j == 3);

    CHECK_THROWS_AS(Gate::cx(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Gate::cz(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(Gate::swap(2, 2), std::invalid_argument);

    Circuit c2(2);
    CHECK_THROWS_AS(c2.push(Gate::h(2)), std::out_of_range);
    CHECK_THROWS_AS(c2.push(Gate::cx(0, 3)), std::out_of_range);
}

TEST_CASE("circuit text parses the documented format") {
    Circuit c = parse_circuit("qubits 2\nH 0\nCX 0 1\n");
    CHECK(c.n == 2);
    REQUIRE(c.gates.size() == 2);
    CHECK(c.gates[0] == Gate::h(0));
    CHECK(c.gates[1] == Gate::cx(0, 1));

    Circuit k5 = parse_circuit(
        "qubits 5\nCZ 0 1\nCZ 0 2\nCZ 0 3\nCZ 0 4\nCZ 1 2\nCZ 1 3\nCZ 1 4\nCZ 2 3\nCZ 2 4\n"
        "CZ 3 4\n");
    CHECK(k5.gates.size() == 10);
    CHECK(k5.two_qubit_count() == 10);

    Circuit cmt = parse_circuit("# leading comment\n\nqubits 1\nH 0 # trailing comment\n");
    CHECK(cmt.gates.size() == 1);
}

TEST_CASE("circuit parse errors carry the line number") {
    CHECK_THROWS_AS(parse_circuit(""), parse_error);
    CHECK_THROWS_AS(parse_circuit("H 0\n"), parse_error);
    CHECK_THROWS_AS(parse_circuit("qubits\n"), parse_error);
    CHECK_THROWS_AS(parse_circuit("qubits two\n"), parse_error);
    CHECK_THROWS_AS(parse_circuit("qubits 2 3\n"), parse_error);
    CHECK_THROWS_AS(parse_circuit("qubits 2\nQ 0\n"), parse_error);
    CHECK_THROWS_AS(parse_circuit("qubits 2\nH\n"), parse_error);
    CHECK_THROWS_AS(parse_circuit("qubits 2\nCX 0\n"), parse_error);
    CHECK_THROWS_AS(parse_circuit("qubits 2\nCX 0 0\n"), parse_error);
    CHECK_THROWS_AS(parse_circuit("qubits 2\nH 5\n"), parse_error);
    CHECK_THROWS_AS(parse_circuit("qubits 2\nH 0 1\n"), parse_error);
    CHECK_THROWS_AS(parse_circuit("qubits 2\nH x\n"), parse_error);

    try {
        parse_circuit("qubits 2\nH 0\nCX 9 1\n");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("circuit serialization round-trips") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 10; ++t) {
        Circuit c = random_clifford_circuit(4, 12, rng);
        Circuit back = parse_circuit(serialize(c));
        CHECK(back.n == c.n);
        CHECK(back.gates == c.gates);

        Circuit jback = circuit_from_json(circuit_json(c));
        CHECK(jback.n == c.n);
        CHECK(jback.gates == c.gates);
    }
}

TEST_CASE("desugar expands sugar gates over the generator set") {
    Circuit z(1);
    z.push(Gate::z(0));
    CHECK(desugar(z).gates == std::vector<Gate>{Gate::p(0), Gate::p(0)});

    Circuit cz(2);
    cz.push(Gate::cz(0, 1));
    CHECK(desugar(cz).gates == std::vector<Gate>{Gate::h(0), Gate::cx(0, 1), Gate::h(0)});

    Circuit sw(2);
    sw.push(Gate::swap(0, 1));
    CHECK(desugar(sw).gates ==
          std::vector<Gate>{Gate::cx(0, 1), Gate::cx(1, 0), Gate::cx(0, 1)});

    Circuit y(1);
    y.push(Gate::y(0));
    Circuit dy = desugar(y);
    CHECK(dy.gates.size() == 8);

    std::mt19937_64 rng(12);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + rng() % 6;
        Circuit c = random_clifford_circuit(n, 14, rng);
        Circuit d = desugar(c);
        for (const auto& g : d.gates)
            CHECK((g.kind == GateKind::H || g.kind == GateKind::P || g.kind == GateKind::CX));
        CHECK(d.gates.size() <= 8 * c.gates.size());
        CHECK(max_diff(build_unitary(c), build_unitary(d)) < 1e-9);
    }
}

TEST_CASE("qasm export flips the stored cx order back to control-first") {
    Circuit c(3);
    c.push(Gate::h(0));
    c.push(Gate::cx(0, 1));
    c.push(Gate::cz(1, 2));
    c.push(Gate::p(2));
    std::string q = export_qasm(c);
    CHECK(q.find("OPENQASM 2.0;") != std::string::npos);
    CHECK(q.find("qreg q[3];") != std::string::npos);
    CHECK(q.find("h q[0];") != std::string::npos);
    CHECK(q.find("cx q[1],q[0];") != std::string::npos);
    CHECK(q.find("cz q[1],q[2];") != std::string::npos);
    CHECK(q.find("s q[2];") != std::string::npos);
}

TEST_CASE("phase octant arithmetic") {
    PhaseOctant k;
    k += 5;
    k += 5;
    CHECK(k.k == 2);
    k += -3;
    CHECK(k.k == 7);
    CHECK(std::abs(PhaseOctant{2}.value() - cplx(0, 1)) < 1e-12);
    CHECK(std::abs(PhaseOctant{4}.value() - cplx(-1, 0)) < 1e-12);
}

TEST_CASE("dense oracle pins the basis order with a z gate") {
    Circuit c(3);
    c.push(Gate::x(0));
    c.push(Gate::z(0));
    StateVector s = state_of(c);
    // |100> lives at index 4 because qubit 0 is the most significant label bit
    CHECK(std::abs(s.amp[4] - cplx(-1, 0)) < 1e-12);
    for (std::size_t k = 0; k < 8; ++k)
        if (k != 4) CHECK(std::abs(s.amp[k]) < 1e-12);
}

TEST_CASE("dense oracle basics") {
    Circuit hh(1);
    hh.push(Gate::h(0));
    hh.push(Gate::h(0));
    CHECK(max_diff(build_unitary(hh), DenseUnitary::identity(1)) < 1e-9);

    Circuit hp3(1);
    for (int k = 0; k < 3; ++k) {
        hp3.push(Gate::p(0));
        hp3.push(Gate::h(0));
    }
    auto m = equal_up_to_octant_phase(build_unitary(hp3), DenseUnitary::identity(1));
    CHECK(m.equal);
    CHECK(m.octant.k == 1);

    Circuit lhs(2), rhs(2);
    lhs.push(Gate::h(0));
    lhs.push(Gate::h(1));
    lhs.push(Gate::cx(1, 0));
    lhs.push(Gate::h(0));
    lhs.push(Gate::h(1));
    rhs.push(Gate::cx(0, 1));
    CHECK(max_diff(build_unitary(lhs), build_unitary(rhs)) < 1e-9);

    auto same = equal_up_to_octant_phase(build_unitary(rhs), build_unitary(rhs));
    CHECK(same.equal);
    CHECK(same.octant.k == 0);

    Circuit h(1), p(1);
    h.push(Gate::h(0));
    p.push(Gate::p(0));
    CHECK_FALSE(equal_up_to_octant_phase(build_unitary(h), build_unitary(p)).equal);
}

TEST_CASE("statevector construction agrees with the full matrix") {
    StateVector empty = state_of(Circuit(2));
    CHECK(std::abs(empty.amp[0] - cplx(1, 0)) < 1e-12);

    std::mt19937_64 rng(13);
    for (int t = 0; t < 10; ++t) {
        Circuit c = random_clifford_circuit(3, 10, rng);
        DenseUnitary u = build_unitary(c);
        StateVector s = state_of(c);
        for (std::size_t r = 0; r < 8; ++r) CHECK(std::abs(s.amp[r] - u.at(r, 0)) < 1e-9);
        CHECK(approx_equal(s, s));
    }
}

TEST_CASE("graph state amplitudes follow the quadratic form") {
    std::mt19937_64 rng(14);
    std::size_t n = 4;
    SymZeroDiag b = random_sym(n, rng);
    Circuit c(n);
    for (std::size_t i = 0; i < n; ++i) c.push(Gate::h(i));
    for (auto [i, j] : b.edges()) c.push(Gate::cz(i, j));
    StateVector s = state_of(c);
    double scale = 0.25;  // 2^{-n/2}
    for (std::size_t idx = 0; idx < s.amp.size(); ++idx) {
        BitVec x(n);
        for (std::size_t q = 0; q < n; ++q)
            if ((idx >> (n - 1 - q)) & 1) x.set(q, true);
        double expect = eval_qform({b}, x) ? -scale : scale;
        CHECK(std::abs(s.amp[idx] - cplx(expect, 0)) < 1e-9);
    }
}

TEST_CASE("random circuits build unitary matrices") {
    std::mt19937_64 rng(15);
    Circuit c = random_clifford_circuit(3, 20, rng);
    DenseUnitary u = build_unitary(c);
    DenseUnitary prod(u.n);
    for (std::size_t r = 0; r < u.dim(); ++r)
        for (std::size_t cc = 0; cc < u.dim(); ++cc)
            for (std::size_t k = 0; k < u.dim(); ++k)
                prod.at(r, cc) += u.at(r, k) * std::conj(u.at(cc, k));
    CHECK(max_diff(prod, DenseUnitary::identity(u.n)) < 1e-9);
}

TEST_CASE("oracle size cap is enforced") {
    CHECK(oracle_cap() == 12);
    Circuit big(13);
    CHECK_THROWS_AS(build_unitary(big), oracle_cap_error);
    CHECK_THROWS_AS(state_of(big), oracle_cap_error);
}

TEST_CASE("every synthesis method reproduces its input matrix") {
    std::mt19937_64 rng(16);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + rng() % 6;
        BitMat a = random_invertible(n, rng);
        for (SynthMethod m : {SynthMethod::PMH, SynthMethod::Gauss}) {
            auto word = synthesize(a, m);
            CHECK(word_product(n, word) == a);
        }
        if (n <= 4) {
            auto wopt = optimal_synth(a);
            CHECK(word_product(n, wopt) == a);
            CHECK(wopt.size() <= a_to_x(a).size());
            CHECK(wopt.size() <= gauss_synth(a).size());
        }
    }

    CHECK(a_to_x(BitMat::identity(5)).empty());
    CHECK(gauss_synth(BitMat::identity(5)).empty());
    CHECK(optimal_synth(BitMat::identity(3)).empty());

    BitMat single = word_product(2, {{0, 1}});
    CHECK(gauss_synth(single).size() == 1);
}

TEST_CASE("synthesis rejects singular matrices") {
    BitMat s(3);
    s.set(0, 0, true);
    s.set(1, 0, true);
    CHECK_THROWS_AS(a_to_x(s), singular_matrix_error);
    CHECK_THROWS_AS(gauss_synth(s), singular_matrix_error);
    CHECK_THROWS_AS(optimal_synth(s), singular_matrix_error);
}

TEST_CASE("optimal synthesis certifies the three-gate swap") {
    BitMat sw(2);
    sw.set(0, 1, true);
    sw.set(1, 0, true);
    auto word = optimal_synth(sw);
    CHECK(word.size() == 3);
    CHECK(word_product(2, word) == sw);

    BitMat big = BitMat::identity(6);
    CHECK_THROWS_AS(optimal_synth(big), std::invalid_argument);
}

TEST_CASE("block elimination reproduces the worked seven-qubit word") {
    BitMat a = BitMat::parse(k43_a_text);
    auto word = a_to_x(a);
    std::vector<Transvection> expect = {{3, 5}, {2, 5}, {2, 6}, {1, 4}, {0, 1}, {1, 5}};
    CHECK(word == expect);
    CHECK(word_product(7, word) == a);
}

TEST_CASE("block elimination beats plain elimination on large random instances") {
    std::mt19937_64 rng(17);
    for (std::size_t n : {std::size_t(16), std::size_t(32)}) {
        for (int t = 0; t < 20; ++t) {
            BitMat a = random_invertible(n, rng);
            auto pmh = a_to_x(a);
            auto gauss = gauss_synth(a);
            CHECK(word_product(n, pmh) == a);
            CHECK(pmh.size() <= gauss.size());
        }
    }
}

TEST_CASE("transvection closure sizes match the general linear group orders") {
    CHECK(gl_group_order_bfs(2) == 6);
    CHECK(gl_group_order_bfs(3) == 168);
    CHECK(gl_group_order_bfs(4) == 20160);
}

TEST_CASE("identity catalog holds densely") {
    auto results = stabnf_tests::run_identity_checks();
    CHECK(results.size() == 50);
    for (const auto& r : results) {
        CAPTURE(r.name);
        CAPTURE(r.err);
        CHECK(r.pass);
    }
}
