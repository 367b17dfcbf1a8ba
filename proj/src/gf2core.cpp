#include "stabnf/gf2core.hpp"

#include <bit>
#include <sstream>

namespace stabnf {

BitVec BitVec::unit(std::size_t n, std::size_t i) {
    BitVec v(n);
    v.set(i, true);
    return v;
}

BitVec BitVec::ones(std::size_t n) {
    BitVec v(n);
    for (auto& w : v.w_) w = ~std::uint64_t(0);
    if (n % 64) v.w_.back() &= (std::uint64_t(1) << (n % 64)) - 1;
    return v;
}

BitVec BitVec::parse(const std::string& s) {
    BitVec v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(i, true);
        else if (s[i] != '0')
            throw std::invalid_argument("bit vector text must be over {0,1}");
    }
    return v;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    size_check(o);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
}

BitVec BitVec::operator&(const BitVec& o) const {
    size_check(o);
    BitVec r(n_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
    return r;
}

bool BitVec::dot(const BitVec& o) const {
    size_check(o);
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
    return std::popcount(acc) & 1;
}

bool BitVec::any() const {
    for (auto w : w_)
        if (w) return true;
    return false;
}

std::size_t BitVec::count() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

std::size_t BitVec::next_set(std::size_t from) const {
    if (from >= n_) return n_;
    std::size_t k = from >> 6;
    std::uint64_t w = w_[k] & (~std::uint64_t(0) << (from & 63));
    while (true) {
        if (w) return (k << 6) + std::countr_zero(w);
        if (++k == w_.size()) return n_;
        w = w_[k];
    }
}

std::string BitVec::str() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitMat BitMat::identity(std::size_t n) {
    BitMat m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMat BitMat::parse(const std::string& rows_text) {
    std::istringstream in(rows_text);
    std::vector<BitVec> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        rows.push_back(BitVec::parse(line));
    }
    BitMat m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.size())
            throw std::invalid_argument("matrix rows must be square");
        m.rows_[r] = rows[r];
    }
    return m;
}

void BitMat::add_col(std::size_t dst, std::size_t src) {
    if (dst >= n_ || src >= n_) throw std::out_of_range("column index out of range");
    for (std::size_t r = 0; r < n_; ++r)
        if (rows_[r].get(src)) rows_[r].flip(dst);
}

BitVec BitMat::col(std::size_t c) const {
    BitVec v(n_);
    for (std::size_t r = 0; r < n_; ++r)
        if (rows_.at(r).get(c)) v.set(r, true);
    return v;
}

BitMat BitMat::transposed() const {
    BitMat t(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = rows_[r].next_set(0); c < n_; c = rows_[r].next_set(c + 1))
            t.set(c, r, true);
    return t;
}

BitVec BitMat::mul(const BitVec& x) const {
    if (x.size() != n_) throw std::invalid_argument("matrix/vector size mismatch");
    BitVec y(n_);
    for (std::size_t r = 0; r < n_; ++r)
        if (rows_[r].dot(x)) y.set(r, true);
    return y;
}

BitMat BitMat::mul(const BitMat& o) const {
    if (o.n_ != n_) throw std::invalid_argument("matrix size mismatch");
    BitMat p(n_);
    for (std::size_t r = 0; r < n_; ++r) {
        const BitVec& row = rows_[r];
        for (std::size_t k = row.next_set(0); k < n_; k = row.next_set(k + 1))
            p.rows_[r] ^= o.rows_[k];
    }
    return p;
}

bool BitMat::is_identity() const {
    return *this == identity(n_);
}

std::string BitMat::str() const {
    std::string s;
    for (std::size_t r = 0; r < n_; ++r) {
        s += rows_[r].str();
        s += '\n';
    }
    return s;
}

BitMat transvect_left(BitMat m, Transvection t) {
    transvect_left_inplace(m, t);
    return m;
}

BitMat transvect_right(BitMat m, Transvection t) {
    transvect_right_inplace(m, t);
    return m;
}

BitMat word_product(std::size_t n, const std::vector<Transvection>& word) {
    BitMat m = BitMat::identity(n);
    for (auto t : word) transvect_right_inplace(m, t);
    return m;
}

BitMat invert(const BitMat& m) {
    std::size_t n = m.size();
    BitMat a = m;
    BitMat r = BitMat::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && !a.get(piv, c)) ++piv;
        if (piv == n) throw singular_matrix_error();
        if (piv != c) {
            a.swap_rows(piv, c);
            r.swap_rows(piv, c);
        }
        for (std::size_t rr = 0; rr < n; ++rr) {
            if (rr != c && a.get(rr, c)) {
                a.add_row(rr, c);
                r.add_row(rr, c);
            }
        }
    }
    return r;
}

SymZeroDiag SymZeroDiag::from_edges(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    SymZeroDiag b(n);
    for (auto [i, j] : edges) b.set_edge(i, j, true);
    return b;
}

void SymZeroDiag::flip_edge(std::size_t i, std::size_t j) {
    if (i == j) throw std::invalid_argument("no diagonal entries in a zero-diagonal matrix");
    rows_.at(i).flip(j);
    rows_.at(j).flip(i);
}

void SymZeroDiag::set_edge(std::size_t i, std::size_t j, bool v) {
    if (i == j) throw std::invalid_argument("no diagonal entries in a zero-diagonal matrix");
    rows_.at(i).set(j, v);
    rows_.at(j).set(i, v);
}

SymZeroDiag& SymZeroDiag::operator^=(const SymZeroDiag& o) {
    if (n_ != o.n_) throw std::invalid_argument("size mismatch");
    for (std::size_t r = 0; r < n_; ++r) rows_[r] ^= o.rows_[r];
    return *this;
}

std::vector<std::pair<std::size_t, std::size_t>> SymZeroDiag::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = rows_[i].next_set(i + 1); j < n_; j = rows_[i].next_set(j + 1))
            e.emplace_back(i, j);
    return e;
}

std::size_t SymZeroDiag::edge_count() const {
    std::size_t c = 0;
    for (const auto& r : rows_) c += r.count();
    return c / 2;
}

bool SymZeroDiag::any() const {
    for (const auto& r : rows_)
        if (r.any()) return true;
    return false;
}

BitVec SymZeroDiag::mul(const BitVec& x) const {
    if (x.size() != n_) throw std::invalid_argument("matrix/vector size mismatch");
    BitVec y(n_);
    for (std::size_t r = 0; r < n_; ++r)
        if (rows_[r].dot(x)) y.set(r, true);
    return y;
}

void SymZeroDiag::congruence(Transvection t) {
    rows_.at(t.i) ^= rows_.at(t.j);
    for (std::size_t r = 0; r < n_; ++r)
        if (rows_[r].get(t.j)) rows_[r].flip(t.i);
}

void SymZeroDiag::swap_qubits(std::size_t i, std::size_t j) {
    std::swap(rows_.at(i), rows_.at(j));
    for (std::size_t r = 0; r < n_; ++r) {
        bool bi = rows_[r].get(i), bj = rows_[r].get(j);
        rows_[r].set(i, bj);
        rows_[r].set(j, bi);
    }
}

BitMat SymZeroDiag::to_mat() const {
    BitMat m(n_);
    for (std::size_t r = 0; r < n_; ++r) m.row(r) = rows_[r];
    return m;
}

bool eval_qform(const QuadraticForm& q, const BitVec& x) {
    if (x.size() != q.source.size()) throw std::invalid_argument("size mismatch");
    // x^T B x = 2 q_B(x) over the integers since B is symmetric with zero
    // diagonal, so halve the double-counted edge total.
    std::size_t total = 0;
    for (std::size_t i = x.next_set(0); i < x.size(); i = x.next_set(i + 1))
        total += (q.source.row(i) & x).count();
    return (total >> 1) & 1;
}

BitVec qform_of_matrix(const QuadraticForm& q, const BitMat& m) {
    if (m.size() != q.source.size()) throw std::invalid_argument("size mismatch");
    BitVec out(m.size());
    for (std::size_t c = 0; c < m.size(); ++c)
        if (eval_qform(q, m.col(c))) out.set(c, true);
    return out;
}

BitMat parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t n = 0;
    bool have_n = false;
    std::vector<BitVec> rows;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        line.erase(0, start);
        if (!have_n) {
            try {
                n = std::stoul(line);
            } catch (const std::exception&) {
                throw std::invalid_argument("matrix text line " + std::to_string(lineno) +
                                            ": expected dimension");
            }
            have_n = true;
            continue;
        }
        BitVec row = BitVec::parse(line);
        if (row.size() != n)
            throw std::invalid_argument("matrix text line " + std::to_string(lineno) + ": expected " +
                                        std::to_string(n) + " characters");
        rows.push_back(row);
    }
    if (!have_n) throw std::invalid_argument("matrix text: missing dimension line");
    if (rows.size() != n)
        throw std::invalid_argument("matrix text: expected " + std::to_string(n) + " rows, got " +
                                    std::to_string(rows.size()));
    BitMat m(n);
    for (std::size_t r = 0; r < n; ++r) m.row(r) = rows[r];
    return m;
}

std::string matrix_text(const BitMat& m) {
    return std::to_string(m.size()) + "\n" + m.str();
}

}  // namespace stabnf
