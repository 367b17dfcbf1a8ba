#include "stabnf/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>

namespace stabnf {

namespace {

// Left-multiplication passes record the op [i j] meaning "row j added into
// row i", so a recorded sequence G1..Gm with Gm...G1 W = I gives W = G1...Gm.

std::vector<Transvection> gauss_ops(BitMat& work) {
    std::size_t n = work.size();
    std::vector<Transvection> ops;
    for (std::size_t col = 0; col < n; ++col) {
        if (!work.get(col, col)) {
            std::size_t r = col + 1;
            while (r < n && !work.get(r, col)) ++r;
            if (r == n) throw singular_matrix_error();
            work.add_row(col, r);
            ops.push_back({col, r});
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r != col && work.get(r, col)) {
                work.add_row(r, col);
                ops.push_back({r, col});
            }
        }
    }
    return ops;
}

std::size_t chunk_width(std::size_t n) {
    if (n < 2) return 1;
    std::size_t m = std::size_t(std::ceil(std::log2(double(n)) / 2.0));
    return m < 1 ? 1 : m;
}

std::uint64_t sub_row(const BitVec& row, std::size_t lo, std::size_t hi) {
    std::uint64_t pat = 0;
    for (std::size_t k = lo; k < hi; ++k) pat = (pat << 1) | std::uint64_t(row.get(k));
    return pat;
}

// Reduces work to upper triangular with unit diagonal, returning the
// left-multiplied ops. Per column section, rows sharing the same sub-row
// pattern are collapsed onto the first occurrence before the usual sweep.
std::vector<Transvection> lower_elimination_ops(BitMat& work, std::size_t m) {
    std::size_t n = work.size();
    std::vector<Transvection> ops;
    const std::size_t none = n;
    for (std::size_t lo = 0; lo < n; lo += m) {
        std::size_t hi = std::min(n, lo + m);
        std::vector<std::size_t> first(std::size_t(1) << (hi - lo), none);
        for (std::size_t r = lo; r < n; ++r) {
            std::uint64_t pat = sub_row(work.row(r), lo, hi);
            if (pat == 0) continue;
            if (first[pat] == none) {
                first[pat] = r;
            } else {
                work.add_row(r, first[pat]);
                ops.push_back({r, first[pat]});
            }
        }
        for (std::size_t col = lo; col < hi; ++col) {
            if (!work.get(col, col)) {
                std::size_t r = col + 1;
                while (r < n && !work.get(r, col)) ++r;
                if (r == n) throw singular_matrix_error();
                work.add_row(col, r);
                ops.push_back({col, r});
            }
            for (std::size_t r = col + 1; r < n; ++r) {
                if (work.get(r, col)) {
                    work.add_row(r, col);
                    ops.push_back({r, col});
                }
            }
        }
    }
    return ops;
}

}  // namespace

std::vector<Transvection> a_to_x(const BitMat& a) {
    std::size_t m = chunk_width(a.size());
    BitMat work = a;
    std::vector<Transvection> lower = lower_elimination_ops(work, m);
    // work is now upper triangular U with T_p...T_1 A = U, so A = T_1...T_p U.
    BitMat upper_t = work.transposed();
    std::vector<Transvection> upper = lower_elimination_ops(upper_t, m);
    // S_q...S_1 U^T = I gives U = (S_1...S_q)^T = S_q^T ... S_1^T.
    std::vector<Transvection> word = lower;
    for (auto it = upper.rbegin(); it != upper.rend(); ++it) word.push_back({it->j, it->i});
    return word;
}

std::vector<Transvection> gauss_synth(const BitMat& a) {
    BitMat work = a;
    return gauss_ops(work);
}

namespace {

constexpr std::uint8_t kUnseen = 0xFF;
constexpr std::uint8_t kRoot = 0xFE;

struct BfsTable {
    std::size_t n = 0;
    std::vector<std::uint8_t> parent_edge;  // indexed by packed matrix
    std::vector<std::uint32_t> col_mask;    // per column
    std::uint64_t reached = 0;

    std::uint32_t child(std::uint32_t key, std::size_t i, std::size_t j) const {
        // right multiplication by [ij]: column j += column i
        std::uint32_t bits = key & col_mask[i];
        return j > i ? key ^ (bits << (j - i)) : key ^ (bits >> (i - j));
    }
};

std::uint32_t pack_matrix(const BitMat& m) {
    std::size_t n = m.size();
    std::uint32_t key = 0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (m.get(r, c)) key |= std::uint32_t(1) << (r * n + c);
    return key;
}

const BfsTable& bfs_table(std::size_t n) {
    static std::map<std::size_t, BfsTable> cache;
    static std::mutex lock;
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    BfsTable t;
    t.n = n;
    t.parent_edge.assign(std::size_t(1) << (n * n), kUnseen);
    t.col_mask.resize(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::uint32_t mask = 0;
        for (std::size_t r = 0; r < n; ++r) mask |= std::uint32_t(1) << (r * n + c);
        t.col_mask[c] = mask;
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) edges.emplace_back(i, j);

    std::uint32_t root = pack_matrix(BitMat::identity(n));
    t.parent_edge[root] = kRoot;
    t.reached = 1;
    std::vector<std::uint32_t> frontier{root}, next;
    while (!frontier.empty()) {
        next.clear();
        for (std::uint32_t key : frontier) {
            for (std::size_t e = 0; e < edges.size(); ++e) {
                std::uint32_t c = t.child(key, edges[e].first, edges[e].second);
                if (t.parent_edge[c] == kUnseen) {
                    t.parent_edge[c] = std::uint8_t(e);
                    ++t.reached;
                    next.push_back(c);
                }
            }
        }
        frontier.swap(next);
    }
    return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace

std::vector<Transvection> optimal_synth(const BitMat& a) {
    std::size_t n = a.size();
    if (n > 5) throw std::invalid_argument("optimal synthesis is limited to n <= 5");
    if (n < 2) {
        if (n == 1 && !a.get(0, 0)) throw singular_matrix_error();
        return {};
    }
    const BfsTable& t = bfs_table(n);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) edges.emplace_back(i, j);

    std::uint32_t key = pack_matrix(a);
    if (t.parent_edge[key] == kUnseen) throw singular_matrix_error();
    std::vector<Transvection> word;
    while (t.parent_edge[key] != kRoot) {
        auto [i, j] = edges[t.parent_edge[key]];
        word.push_back({i, j});
        key = t.child(key, i, j);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::vector<Transvection> synthesize(const BitMat& a, SynthMethod method) {
    switch (method) {
        case SynthMethod::PMH: return a_to_x(a);
        case SynthMethod::Gauss: return gauss_synth(a);
        case SynthMethod::Optimal: return optimal_synth(a);
    }
    throw std::invalid_argument("unknown synthesis method");
}

std::uint64_t gl_group_order_bfs(std::size_t n) {
    if (n == 0) return 1;
    if (n > 5) throw std::invalid_argument("BFS enumeration is limited to n <= 5");
    if (n == 1) return 1;
    return bfs_table(n).reached;
}

}  // namespace stabnf
