#ifndef CHROMADISC_ORIENTATIONS_HPP
#define CHROMADISC_ORIENTATIONS_HPP

#include <cstdint>
#include <vector>

#include "chromadisc/graph.hpp"

namespace chromadisc {

constexpr int kMaxOrientationEdges = 24;

// An edge with a chosen direction.
struct OrientedEdge {
    int tail;
    int head;
    bool operator==(const OrientedEdge& o) const { return tail == o.tail && head == o.head; }
};

// Direction assignment for every edge of the owning graph: bit i clear
// orients edges()[i] as u->v (low to high), bit i set as v->u.
struct Orientation {
    std::uint32_t dir_bits = 0;
    bool operator==(const Orientation& o) const { return dir_bits == o.dir_bits; }
};

inline OrientedEdge arc_of(const Graph& g, int edge_idx, const Orientation& o) {
    const Edge& e = g.edges()[edge_idx];
    bool flipped = (o.dir_bits >> edge_idx) & 1u;
    return flipped ? OrientedEdge{e.v, e.u} : OrientedEdge{e.u, e.v};
}

bool is_acyclic(const Graph& g, const Orientation& o);

// Every acyclic orientation exactly once: backtracking over edges in index
// order, u->v tried before v->u, directed cycles pruned incrementally.
std::vector<Orientation> acyclic_orientations(const Graph& g,
                                              int max_edges = kMaxOrientationEdges);

template <typename Fn>
void for_each_acyclic_orientation(const Graph& g, Fn&& fn,
                                  int max_edges = kMaxOrientationEdges);

// Vertices with no outgoing arc (isolated vertices included).
VertexSet sinks(const Graph& g, const Orientation& o);

// Acyclic orientations whose sink set is exactly {q}.
std::vector<Orientation> unique_sink_orientations(const Graph& g, int q,
                                                  int max_edges = kMaxOrientationEdges);

// Count of unique-sink orientations per vertex, from one enumeration pass.
std::vector<std::uint64_t> unique_sink_counts(const Graph& g,
                                              int max_edges = kMaxOrientationEdges);

// All vertices admitting a directed path to q (q itself included).
VertexSet reaching_set(const Graph& g, const Orientation& o, int q);

// Element of the marked side of the bijection: an oriented edge whose head
// is the unique sink of the orientation.
struct MarkedOrientation {
    OrientedEdge arrow;
    Orientation lambda;
    bool operator==(const MarkedOrientation& o) const {
        return arrow == o.arrow && lambda == o.lambda;
    }
};

// Element of the split side: a partition, a straddling bridge edge, and a
// unique-sink orientation of each induced side. lambda1/lambda2 index the
// edges of the induced subgraphs of partition.first/partition.second.
struct SplitOrientation {
    OrderedPartition partition;
    Edge bridge;
    Orientation lambda1;
    Orientation lambda2;
    bool operator==(const SplitOrientation& o) const {
        return partition == o.partition && bridge == o.bridge && lambda1 == o.lambda1 &&
               lambda2 == o.lambda2;
    }
};

void validate_marked_orientation(const Graph& g, const MarkedOrientation& a);
void validate_split_orientation(const Graph& g, const SplitOrientation& b);

// All marked orientations, ordered by (edge index, direction, orientation
// enumeration index). Cardinality 2 * e(G) * alpha(G).
std::vector<MarkedOrientation> marked_orientations(const Graph& g,
                                                   int max_edges = kMaxOrientationEdges);

// All split orientations, ordered by (partition bitmask, edge index,
// lambda1 index, lambda2 index). Cardinality matches the partition sum.
std::vector<SplitOrientation> split_orientations(const Graph& g,
                                                 int max_edges = kMaxOrientationEdges);

// Splits a marked orientation at its arrow: the tail's reaching set becomes
// the first side, the rest the second, and the orientation restricts to both.
SplitOrientation split_orientation(const Graph& g, const MarkedOrientation& a);

// Rejoins a split: both restrictions keep their arcs and every straddling
// edge points from the first side to the second.
MarkedOrientation join_orientation(const Graph& g, const SplitOrientation& b);

namespace detail {
bool arc_reaches(const std::vector<VertexSet>& out_mask, int from, int to);
}

template <typename Fn>
void for_each_acyclic_orientation(const Graph& g, Fn&& fn, int max_edges) {
    int m = g.edge_count();
    if (m > max_edges) throw SizeGuardError("orientation edge count", m, max_edges);
    std::vector<VertexSet> out_mask(g.vertex_count(), 0);
    std::uint32_t dirs = 0;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == m) {
            fn(Orientation{dirs});
            return;
        }
        const Edge& e = g.edges()[i];
        // u -> v unless that closes a directed cycle
        if (!detail::arc_reaches(out_mask, e.v, e.u)) {
            out_mask[e.u] |= 1u << e.v;
            self(self, i + 1);
            out_mask[e.u] &= ~(1u << e.v);
        }
        // v -> u
        if (!detail::arc_reaches(out_mask, e.u, e.v)) {
            dirs |= 1u << i;
            out_mask[e.v] |= 1u << e.u;
            self(self, i + 1);
            out_mask[e.v] &= ~(1u << e.u);
            dirs &= ~(1u << i);
        }
    };
    rec(rec, 0);
}

}  // namespace chromadisc

#endif
