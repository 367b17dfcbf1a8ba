#ifndef STABNF_GF2CORE_HPP
#define STABNF_GF2CORE_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stabnf {

struct singular_matrix_error : std::runtime_error {
    singular_matrix_error() : std::runtime_error("matrix is singular over GF(2)") {}
};

// Vector over GF(2), bits packed into 64-bit words.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVec unit(std::size_t n, std::size_t i);
    static BitVec ones(std::size_t n);
    static BitVec parse(const std::string& s);

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const {
        range_check(i);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i, bool v) {
        range_check(i);
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) {
        range_check(i);
        w_[i >> 6] ^= std::uint64_t(1) << (i & 63);
    }

    BitVec& operator^=(const BitVec& o);
    friend BitVec operator^(BitVec a, const BitVec& b) {
        a ^= b;
        return a;
    }
    // entrywise product
    BitVec operator&(const BitVec& o) const;

    // parity of the inner product
    bool dot(const BitVec& o) const;
    bool any() const;
    std::size_t count() const;
    // index of the lowest set bit at position >= from, or size() if none
    std::size_t next_set(std::size_t from) const;

    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitVec& o) const { return !(*this == o); }

    std::string str() const;
    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;

    void range_check(std::size_t i) const {
        if (i >= n_) throw std::out_of_range("bit index out of range");
    }
    void size_check(const BitVec& o) const {
        if (n_ != o.n_) throw std::invalid_argument("bit vector size mismatch");
    }
};

// [ij] = I + E_ij over GF(2); left multiplication adds row j into row i,
// right multiplication adds column i into column j. Requires i != j.
struct Transvection {
    std::size_t i, j;
    bool operator==(const Transvection& o) const { return i == o.i && j == o.j; }
};

class BitMat {
public:
    BitMat() = default;
    explicit BitMat(std::size_t n) : n_(n), rows_(n, BitVec(n)) {}

    static BitMat identity(std::size_t n);
    static BitMat parse(const std::string& rows_text);

    std::size_t size() const { return n_; }

    bool get(std::size_t r, std::size_t c) const { return rows_.at(r).get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_.at(r).set(c, v); }
    void flip(std::size_t r, std::size_t c) { rows_.at(r).flip(c); }

    BitVec& row(std::size_t r) { return rows_.at(r); }
    const BitVec& row(std::size_t r) const { return rows_.at(r); }

    void add_row(std::size_t dst, std::size_t src) { rows_.at(dst) ^= rows_.at(src); }
    void add_col(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b) { std::swap(rows_.at(a), rows_.at(b)); }
    BitVec col(std::size_t c) const;

    BitMat transposed() const;
    BitVec mul(const BitVec& x) const;
    BitMat mul(const BitMat& o) const;
    bool is_identity() const;

    bool operator==(const BitMat& o) const { return n_ == o.n_ && rows_ == o.rows_; }
    bool operator!=(const BitMat& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::size_t n_ = 0;
    std::vector<BitVec> rows_;
};

// M <- [ij] M
inline void transvect_left_inplace(BitMat& m, Transvection t) { m.add_row(t.i, t.j); }
// M <- M [ij]
inline void transvect_right_inplace(BitMat& m, Transvection t) { m.add_col(t.j, t.i); }
// x <- [ij] x
inline void transvect_vec(BitVec& x, Transvection t) {
    if (x.get(t.j)) x.flip(t.i);
}

BitMat transvect_left(BitMat m, Transvection t);
BitMat transvect_right(BitMat m, Transvection t);

// t1 t2 ... tk as a matrix
BitMat word_product(std::size_t n, const std::vector<Transvection>& word);

BitMat invert(const BitMat& m);

// Symmetric zero-diagonal matrix over GF(2), i.e. an undirected graph on n
// vertices. Packed rows are the single source of truth; the edge-set view is
// derived from them on demand.
class SymZeroDiag {
public:
    SymZeroDiag() = default;
    explicit SymZeroDiag(std::size_t n) : n_(n), rows_(n, BitVec(n)) {}

    static SymZeroDiag from_edges(std::size_t n,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& edges);

    std::size_t size() const { return n_; }

    bool get(std::size_t i, std::size_t j) const { return rows_.at(i).get(j); }
    void flip_edge(std::size_t i, std::size_t j);
    void set_edge(std::size_t i, std::size_t j, bool v);
    const BitVec& row(std::size_t i) const { return rows_.at(i); }

    SymZeroDiag& operator^=(const SymZeroDiag& o);
    friend SymZeroDiag operator^(SymZeroDiag a, const SymZeroDiag& b) {
        a ^= b;
        return a;
    }

    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    std::size_t edge_count() const;
    bool any() const;

    bool operator==(const SymZeroDiag& o) const { return n_ == o.n_ && rows_ == o.rows_; }
    bool operator!=(const SymZeroDiag& o) const { return !(*this == o); }

    BitVec mul(const BitVec& x) const;

    // B <- [ij] B [ij]^T for t = [ij]: row i += row j, then col i += col j
    void congruence(Transvection t);
    // B <- (ij) B (ij)
    void swap_qubits(std::size_t i, std::size_t j);

    BitMat to_mat() const;

private:
    std::size_t n_ = 0;
    std::vector<BitVec> rows_;
};

struct QuadraticForm {
    SymZeroDiag source;
};

// q_B(x) = sum over edges {i,j} of B of x_i x_j, mod 2
bool eval_qform(const QuadraticForm& q, const BitVec& x);
// component i is q applied to column i of M
BitVec qform_of_matrix(const QuadraticForm& q, const BitMat& m);

// Text format: first line n, then n lines of n characters in {0,1}.
BitMat parse_matrix_text(const std::string& text);
std::string matrix_text(const BitMat& m);

}  // namespace stabnf

#endif
