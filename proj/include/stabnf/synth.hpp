#ifndef STABNF_SYNTH_HPP
#define STABNF_SYNTH_HPP

#include <vector>

#include "stabnf/gf2core.hpp"

namespace stabnf {

enum class SynthMethod { PMH, Gauss, Optimal };

// All three return a word [t1, ..., tk] with t1 t2 ... tk = A.

// Block elimination with chunk width m = ceil(log2(n)/2), clamped to >= 1:
// per column section, duplicate sub-rows are collapsed before the Gaussian
// sweep; the transpose factor is handled by a second lower-triangular pass.
std::vector<Transvection> a_to_x(const BitMat& a);

// Plain Gauss-Jordan, at most n^2 transvections, no row swaps.
std::vector<Transvection> gauss_synth(const BitMat& a);

// Breadth-first search over right multiplication by all n(n-1) transvections,
// from the identity. Minimum-length word. n <= 5 (the n=5 table holds all
// |GL(5,2)| ~ 9.99e6 states and costs a 32 MiB parent array).
std::vector<Transvection> optimal_synth(const BitMat& a);

std::vector<Transvection> synthesize(const BitMat& a, SynthMethod method);

// Number of invertible matrices reached by the BFS closure, n <= 5.
std::uint64_t gl_group_order_bfs(std::size_t n);

}  // namespace stabnf

#endif
