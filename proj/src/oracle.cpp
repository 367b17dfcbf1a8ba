#include "stabnf/oracle.hpp"

#include <cmath>
#include <cstdlib>

namespace stabnf {

std::size_t oracle_cap() {
    if (const char* env = std::getenv("STABNF_ORACLE_CAP")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 12;
}

DenseUnitary DenseUnitary::identity(std::size_t n) {
    DenseUnitary u(n);
    for (std::size_t r = 0; r < u.dim(); ++r) u.at(r, r) = 1.0;
    return u;
}

DenseUnitary DenseUnitary::mul(const DenseUnitary& o) const {
    if (o.n != n) throw std::invalid_argument("dimension mismatch");
    DenseUnitary p(n);
    std::size_t d = dim();
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t k = 0; k < d; ++k) {
            cplx f = at(r, k);
            if (f == cplx(0, 0)) continue;
            for (std::size_t c = 0; c < d; ++c) p.at(r, c) += f * o.at(k, c);
        }
    return p;
}

DenseUnitary DenseUnitary::scaled(cplx s) const {
    DenseUnitary p = *this;
    for (auto& e : p.a) e *= s;
    return p;
}

namespace {

const double inv_sqrt2 = 0.70710678118654752440;

// row index bit of qubit q (qubit 0 is most significant)
inline std::size_t qubit_mask(std::size_t n, std::size_t q) {
    return std::size_t(1) << (n - 1 - q);
}

// One column of length 2^n with a given stride-access helper would obscure
// more than it saves; the two overloads below just duplicate the row loop.
template <typename Rows>
void apply_rows(std::size_t n, const Gate& g, std::size_t count, Rows&& rows) {
    // rows(r) returns a reference to row r's storage slot for one column;
    // count is the number of row indices.
    const cplx im(0, 1);
    switch (g.kind) {
        case GateKind::H: {
            std::size_t m = qubit_mask(n, g.i);
            for (std::size_t r = 0; r < count; ++r)
                if (!(r & m)) {
                    cplx a = rows(r), b = rows(r | m);
                    rows(r) = (a + b) * inv_sqrt2;
                    rows(r | m) = (a - b) * inv_sqrt2;
                }
            break;
        }
        case GateKind::P: {
            std::size_t m = qubit_mask(n, g.i);
            for (std::size_t r = 0; r < count; ++r)
                if (r & m) rows(r) *= im;
            break;
        }
        case GateKind::X: {
            std::size_t m = qubit_mask(n, g.i);
            for (std::size_t r = 0; r < count; ++r)
                if (!(r & m)) std::swap(rows(r), rows(r | m));
            break;
        }
        case GateKind::Y: {
            std::size_t m = qubit_mask(n, g.i);
            for (std::size_t r = 0; r < count; ++r)
                if (!(r & m)) {
                    cplx a = rows(r), b = rows(r | m);
                    rows(r) = -im * b;
                    rows(r | m) = im * a;
                }
            break;
        }
        case GateKind::Z: {
            std::size_t m = qubit_mask(n, g.i);
            for (std::size_t r = 0; r < count; ++r)
                if (r & m) rows(r) = -rows(r);
            break;
        }
        case GateKind::CX: {
            std::size_t mt = qubit_mask(n, g.i), mc = qubit_mask(n, g.j);
            for (std::size_t r = 0; r < count; ++r)
                if ((r & mc) && !(r & mt)) std::swap(rows(r), rows(r | mt));
            break;
        }
        case GateKind::CZ: {
            std::size_t ma = qubit_mask(n, g.i), mb = qubit_mask(n, g.j);
            for (std::size_t r = 0; r < count; ++r)
                if ((r & ma) && (r & mb)) rows(r) = -rows(r);
            break;
        }
        case GateKind::SWAP: {
            std::size_t ma = qubit_mask(n, g.i), mb = qubit_mask(n, g.j);
            for (std::size_t r = 0; r < count; ++r)
                if ((r & ma) && !(r & mb)) std::swap(rows(r), rows((r & ~ma) | mb));
            break;
        }
    }
}

}  // namespace

void apply_gate(DenseUnitary& u, const Gate& g) {
    std::size_t d = u.dim();
    for (std::size_t c = 0; c < d; ++c)
        apply_rows(u.n, g, d, [&](std::size_t r) -> cplx& { return u.at(r, c); });
}

void apply_gate(StateVector& s, const Gate& g) {
    apply_rows(s.n, g, s.amp.size(), [&](std::size_t r) -> cplx& { return s.amp[r]; });
}

DenseUnitary build_unitary(const Circuit& c) {
    std::size_t cap = oracle_cap();
    if (c.n > cap) throw oracle_cap_error(c.n, cap);
    DenseUnitary u = DenseUnitary::identity(c.n);
    for (const auto& g : c.gates) apply_gate(u, g);
    return u;
}

StateVector state_of(const Circuit& c) {
    std::size_t cap = oracle_cap();
    if (c.n > cap) throw oracle_cap_error(c.n, cap);
    StateVector s(c.n);
    s.amp[0] = 1.0;
    for (const auto& g : c.gates) apply_gate(s, g);
    return s;
}

OctantMatch equal_up_to_octant_phase(const DenseUnitary& u, const DenseUnitary& v) {
    OctantMatch miss;
    if (u.n != v.n) return miss;
    const double pi = 3.14159265358979323846;
    std::size_t ref = v.a.size();
    for (std::size_t k = 0; k < v.a.size(); ++k)
        if (std::abs(v.a[k]) > 1e-6) {
            ref = k;
            break;
        }
    if (ref == v.a.size()) return miss;
    cplx r = u.a[ref] / v.a[ref];
    if (std::abs(std::abs(r) - 1.0) > 1e-6) return miss;
    double ang = std::arg(r);
    int k = int(std::lround(ang / (pi / 4.0)));
    if (std::abs(ang - k * (pi / 4.0)) > 1e-6) return miss;
    for (std::size_t e = 0; e < u.a.size(); ++e)
        if (std::abs(u.a[e] - r * v.a[e]) > 1e-9) return miss;
    OctantMatch hit;
    hit.equal = true;
    hit.octant.k = ((k % 8) + 8) % 8;
    return hit;
}

bool approx_equal(const DenseUnitary& u, const DenseUnitary& v, double tol) {
    if (u.n != v.n) return false;
    for (std::size_t e = 0; e < u.a.size(); ++e)
        if (std::abs(u.a[e] - v.a[e]) > tol) return false;
    return true;
}

bool approx_equal(const StateVector& s, const StateVector& t, double tol) {
    if (s.n != t.n) return false;
    for (std::size_t e = 0; e < s.amp.size(); ++e)
        if (std::abs(s.amp[e] - t.amp[e]) > tol) return false;
    return true;
}

bool equal_up_to_phase(const StateVector& s, const StateVector& t, double tol) {
    if (s.n != t.n) return false;
    std::size_t ref = t.amp.size();
    for (std::size_t k = 0; k < t.amp.size(); ++k)
        if (std::abs(t.amp[k]) > 1e-6) {
            ref = k;
            break;
        }
    if (ref == t.amp.size()) return false;
    cplx r = s.amp[ref] / t.amp[ref];
    if (std::abs(std::abs(r) - 1.0) > 1e-6) return false;
    for (std::size_t e = 0; e < s.amp.size(); ++e)
        if (std::abs(s.amp[e] - r * t.amp[e]) > tol) return false;
    return true;
}

}  // namespace stabnf
