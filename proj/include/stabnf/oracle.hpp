#ifndef STABNF_ORACLE_HPP
#define STABNF_ORACLE_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "stabnf/circuit.hpp"

namespace stabnf {

using cplx = std::complex<double>;

struct oracle_cap_error : std::runtime_error {
    explicit oracle_cap_error(std::size_t n, std::size_t cap)
        : std::runtime_error("dense verification needs n <= " + std::to_string(cap) + ", got n = " +
                             std::to_string(n)) {}
};

// Verification cap; STABNF_ORACLE_CAP overrides the default of 12.
std::size_t oracle_cap();

// Basis index of |x> is sum of x_i 2^(n-1-i): qubit 0 is the most significant
// bit of the row/column index, matching the label order x_0 x_1 ... x_{n-1}.
struct DenseUnitary {
    std::size_t n = 0;
    std::vector<cplx> a;

    DenseUnitary() = default;
    explicit DenseUnitary(std::size_t n_) : n(n_), a(std::size_t(1) << (2 * n_), cplx(0, 0)) {}

    std::size_t dim() const { return std::size_t(1) << n; }
    cplx& at(std::size_t r, std::size_t c) { return a[r * dim() + c]; }
    const cplx& at(std::size_t r, std::size_t c) const { return a[r * dim() + c]; }

    static DenseUnitary identity(std::size_t n);
    DenseUnitary mul(const DenseUnitary& o) const;
    DenseUnitary scaled(cplx s) const;
};

struct StateVector {
    std::size_t n = 0;
    std::vector<cplx> amp;

    StateVector() = default;
    explicit StateVector(std::size_t n_) : n(n_), amp(std::size_t(1) << n_, cplx(0, 0)) {}
};

void apply_gate(DenseUnitary& u, const Gate& g);
void apply_gate(StateVector& s, const Gate& g);

DenseUnitary build_unitary(const Circuit& c);
// c applied to |0...0> column by column, no full matrix
StateVector state_of(const Circuit& c);

struct OctantMatch {
    bool equal = false;
    PhaseOctant octant;
};

// Tests U = e^{i k pi/4} V for some integer k: the ratio is read off the
// first entry of V with modulus above 1e-6 and then checked entrywise.
OctantMatch equal_up_to_octant_phase(const DenseUnitary& u, const DenseUnitary& v);

bool approx_equal(const DenseUnitary& u, const DenseUnitary& v, double tol = 1e-9);
bool approx_equal(const StateVector& s, const StateVector& t, double tol = 1e-9);
bool equal_up_to_phase(const StateVector& s, const StateVector& t, double tol = 1e-9);

}  // namespace stabnf

#endif
