#ifndef CHROMADISC_CHROMATIC_HPP
#define CHROMADISC_CHROMATIC_HPP

#include <cstdint>

#include "chromadisc/graph.hpp"
#include "chromadisc/polynomial.hpp"

namespace chromadisc {

constexpr int kMaxChromaticVertices = 15;
constexpr std::uint64_t kMaxColoringWork = 200'000'000;

// Chromatic polynomial by deletion-contraction with a global memo table
// keyed on the exact (n, degree sequence, edge list) form. The recursion
// pivots on the lexicographically smallest edge; disconnected graphs
// multiply over components.
Polynomial chromatic_polynomial(const Graph& g, int max_n = kMaxChromaticVertices);

// |coefficient of q^1| of the chromatic polynomial. Requires n >= 1.
BigInt alpha_from_polynomial(const Graph& g, int max_n = kMaxChromaticVertices);

// Number of proper colorings with palette {1..q}, counted by exhaustive
// assignment. Independent of the deletion-contraction path; the two must
// agree at every q. Guarded by q^n <= max_work.
std::uint64_t count_proper_colorings(const Graph& g, int q,
                                     std::uint64_t max_work = kMaxColoringWork);

// Number of entries currently held by the deletion-contraction memo table.
std::size_t chromatic_memo_size();
void clear_chromatic_memo();

}  // namespace chromadisc

#endif
