#ifndef CHROMADISC_GRAPH_HPP
#define CHROMADISC_GRAPH_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "chromadisc/errors.hpp"

namespace chromadisc {

// Vertex subsets are bitmasks over labels 0..n-1. Enumeration caps keep
// n small enough that 32 bits always suffice.
using VertexSet = std::uint32_t;

inline int set_size(VertexSet s) { return __builtin_popcount(s); }
inline bool set_contains(VertexSet s, int v) { return (s >> v) & 1u; }
inline VertexSet full_set(int n) { return n >= 32 ? ~0u : ((1u << n) - 1u); }
std::vector<int> set_to_vertices(VertexSet s);
VertexSet vertices_to_set(const std::vector<int>& vs);

// Undirected edge, stored with u < v.
struct Edge {
    int u;
    int v;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw LoopEdgeError(a);
    }
    bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
    bool operator<(const Edge& o) const { return u != o.u ? u < o.u : v < o.v; }
};

// Ordered pair of vertex sets partitioning V(G).
struct OrderedPartition {
    VertexSet first;
    VertexSet second;
    bool operator==(const OrderedPartition& o) const {
        return first == o.first && second == o.second;
    }
};

struct InducedSubgraph;

// Immutable simple undirected graph on dense labels 0..n-1.
class Graph {
public:
    Graph() : n_(0) {}
    // Normalizes endpoints to u < v, deduplicates, rejects loops and
    // out-of-range labels.
    Graph(int n, std::span<const std::pair<int, int>> edge_list);
    Graph(int n, std::initializer_list<std::pair<int, int>> edge_list)
        : Graph(n, std::span<const std::pair<int, int>>(edge_list.begin(), edge_list.size())) {}

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    VertexSet vertices() const { return full_set(n_); }

    bool has_edge(int u, int v) const;
    // Index of e in the lexicographically sorted edge list, or -1.
    int edge_index(const Edge& e) const;
    // Neighbors of v as a bitmask.
    VertexSet adjacency(int v) const { return adj_[v]; }
    int degree(int v) const { return set_size(adj_[v]); }

    Graph delete_edge(const Edge& e) const;
    // Contracts e = {u,v}: the merged vertex takes label min(u,v), loops are
    // dropped, parallel edges merge, and labels compact to 0..n-2.
    Graph contract_edge(const Edge& e) const;
    InducedSubgraph induced_subgraph(VertexSet vs) const;

    std::vector<Edge> straddling_edges(const OrderedPartition& p) const;

    std::vector<std::vector<int>> connected_components() const;
    std::vector<VertexSet> component_masks() const;
    bool is_connected() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_;
    std::vector<Edge> edges_;      // sorted lexicographically, unique
    std::vector<VertexSet> adj_;   // adjacency bitmask per vertex

    void check_vertex(int v) const;
};

// Result of taking the subgraph induced by a vertex set: the subgraph plus
// the order-preserving relabeling in both directions. old_to_new holds -1
// for vertices outside the set.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new;
    std::vector<int> new_to_old;
};

constexpr int kMaxPartitionVertices = 20;

// All ordered pairs (S, V\S) over nonempty proper subsets S, with S iterated
// as an increasing bitmask; 2^n - 2 partitions in total.
std::vector<OrderedPartition> ordered_partitions(const Graph& g,
                                                 int max_n = kMaxPartitionVertices);

// Streaming form of the above, for callers that do not want 2^n - 2 entries
// materialized at once.
template <typename Fn>
void for_each_ordered_partition(const Graph& g, Fn&& fn,
                                int max_n = kMaxPartitionVertices) {
    int n = g.vertex_count();
    if (n > max_n) throw SizeGuardError("partition vertex count", n, max_n);
    if (n < 1) return;
    VertexSet all = full_set(n);
    for (VertexSet s = 1; s < all; ++s) {
        fn(OrderedPartition{s, static_cast<VertexSet>(all & ~s)});
    }
}

}  // namespace chromadisc

#endif
