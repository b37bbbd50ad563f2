#include "chromadisc/orientations.hpp"

#include <string>

namespace chromadisc {

namespace detail {

bool arc_reaches(const std::vector<VertexSet>& out_mask, int from, int to) {
    VertexSet seen = 1u << from;
    VertexSet frontier = seen;
    VertexSet target = 1u << to;
    while (frontier != 0) {
        if (seen & target) return true;
        VertexSet next = 0;
        for (VertexSet s = frontier; s != 0; s &= s - 1) {
            next |= out_mask[__builtin_ctz(s)];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return (seen & target) != 0;
}

}  // namespace detail

namespace {

std::vector<VertexSet> out_masks(const Graph& g, const Orientation& o) {
    std::vector<VertexSet> out(g.vertex_count(), 0);
    for (int i = 0; i < g.edge_count(); ++i) {
        OrientedEdge a = arc_of(g, i, o);
        out[a.tail] |= 1u << a.head;
    }
    return out;
}

// Copies the parent direction of every internal edge onto the induced
// subgraph. Valid because the induced relabeling is order-preserving.
Orientation restrict_orientation(const Graph& g, const Orientation& o,
                                 const InducedSubgraph& sub) {
    Orientation out;
    const Graph& h = sub.graph;
    for (int j = 0; j < h.edge_count(); ++j) {
        const Edge& f = h.edges()[j];
        Edge parent(sub.new_to_old[f.u], sub.new_to_old[f.v]);
        int i = g.edge_index(parent);
        if ((o.dir_bits >> i) & 1u) out.dir_bits |= 1u << j;
    }
    return out;
}

}  // namespace

bool is_acyclic(const Graph& g, const Orientation& o) {
    // Peel vertices of current out-degree zero; a leftover vertex set with
    // no sink contains a directed cycle.
    int n = g.vertex_count();
    auto out = out_masks(g, o);
    VertexSet alive = full_set(n);
    for (int round = 0; round < n; ++round) {
        VertexSet peel = 0;
        for (VertexSet s = alive; s != 0; s &= s - 1) {
            int v = __builtin_ctz(s);
            if ((out[v] & alive) == 0) peel |= 1u << v;
        }
        if (peel == 0) break;
        alive &= ~peel;
    }
    return alive == 0;
}

std::vector<Orientation> acyclic_orientations(const Graph& g, int max_edges) {
    std::vector<Orientation> out;
    for_each_acyclic_orientation(g, [&](const Orientation& o) { out.push_back(o); }, max_edges);
    return out;
}

VertexSet sinks(const Graph& g, const Orientation& o) {
    VertexSet result = full_set(g.vertex_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        result &= ~(1u << arc_of(g, i, o).tail);
    }
    return result;
}

std::vector<Orientation> unique_sink_orientations(const Graph& g, int q, int max_edges) {
    if (q < 0 || q >= g.vertex_count()) throw VertexOutOfRangeError(q, g.vertex_count());
    std::vector<Orientation> out;
    VertexSet want = 1u << q;
    for_each_acyclic_orientation(
        g, [&](const Orientation& o) { if (sinks(g, o) == want) out.push_back(o); }, max_edges);
    return out;
}

std::vector<std::uint64_t> unique_sink_counts(const Graph& g, int max_edges) {
    std::vector<std::uint64_t> counts(g.vertex_count(), 0);
    for_each_acyclic_orientation(
        g,
        [&](const Orientation& o) {
            VertexSet s = sinks(g, o);
            if (set_size(s) == 1) ++counts[__builtin_ctz(s)];
        },
        max_edges);
    return counts;
}

VertexSet reaching_set(const Graph& g, const Orientation& o, int q) {
    if (q < 0 || q >= g.vertex_count()) throw VertexOutOfRangeError(q, g.vertex_count());
    // Walk arcs backwards from q.
    std::vector<VertexSet> in(g.vertex_count(), 0);
    for (int i = 0; i < g.edge_count(); ++i) {
        OrientedEdge a = arc_of(g, i, o);
        in[a.head] |= 1u << a.tail;
    }
    VertexSet seen = 1u << q;
    VertexSet frontier = seen;
    while (frontier != 0) {
        VertexSet next = 0;
        for (VertexSet s = frontier; s != 0; s &= s - 1) {
            next |= in[__builtin_ctz(s)];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

void validate_marked_orientation(const Graph& g, const MarkedOrientation& a) {
    int n = g.vertex_count();
    if (a.arrow.tail < 0 || a.arrow.tail >= n || a.arrow.head < 0 || a.arrow.head >= n ||
        a.arrow.tail == a.arrow.head || !g.has_edge(a.arrow.tail, a.arrow.head)) {
        throw InvariantViolationError("marked arrow is not an edge of the graph");
    }
    if (!is_acyclic(g, a.lambda)) {
        throw InvariantViolationError("marked orientation contains a directed cycle");
    }
    if (sinks(g, a.lambda) != (1u << a.arrow.head)) {
        throw InvariantViolationError("arrow head is not the unique sink");
    }
}

void validate_split_orientation(const Graph& g, const SplitOrientation& b) {
    VertexSet all = g.vertices();
    const OrderedPartition& p = b.partition;
    if (p.first == 0 || p.second == 0 || (p.first & p.second) != 0 ||
        (p.first | p.second) != all) {
        throw InvariantViolationError("split does not partition the vertices");
    }
    bool u_first = set_contains(p.first, b.bridge.u);
    bool v_first = set_contains(p.first, b.bridge.v);
    if (g.edge_index(b.bridge) < 0 || u_first == v_first) {
        throw InvariantViolationError("bridge edge does not straddle the partition");
    }
    int p1 = u_first ? b.bridge.u : b.bridge.v;
    int p2 = u_first ? b.bridge.v : b.bridge.u;
    auto sub1 = g.induced_subgraph(p.first);
    auto sub2 = g.induced_subgraph(p.second);
    for (int side = 0; side < 2; ++side) {
        const InducedSubgraph& sub = side == 0 ? sub1 : sub2;
        const Orientation& lam = side == 0 ? b.lambda1 : b.lambda2;
        int sink = sub.old_to_new[side == 0 ? p1 : p2];
        if (!is_acyclic(sub.graph, lam)) {
            throw InvariantViolationError("side orientation contains a directed cycle");
        }
        if (sinks(sub.graph, lam) != (1u << sink)) {
            throw InvariantViolationError("side orientation lacks unique sink at bridge end");
        }
    }
}

std::vector<MarkedOrientation> marked_orientations(const Graph& g, int max_edges) {
    std::vector<MarkedOrientation> out;
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        for (int flip = 0; flip < 2; ++flip) {
            OrientedEdge arrow = flip ? OrientedEdge{e.v, e.u} : OrientedEdge{e.u, e.v};
            for (const Orientation& lam : unique_sink_orientations(g, arrow.head, max_edges)) {
                out.push_back(MarkedOrientation{arrow, lam});
            }
        }
    }
    return out;
}

std::vector<SplitOrientation> split_orientations(const Graph& g, int max_edges) {
    std::vector<SplitOrientation> out;
    for_each_ordered_partition(g, [&](const OrderedPartition& p) {
        auto straddle = g.straddling_edges(p);
        if (straddle.empty()) return;
        auto sub1 = g.induced_subgraph(p.first);
        auto sub2 = g.induced_subgraph(p.second);
        for (const Edge& e : straddle) {
            int p1 = set_contains(p.first, e.u) ? e.u : e.v;
            int p2 = p1 == e.u ? e.v : e.u;
            auto lams1 = unique_sink_orientations(sub1.graph, sub1.old_to_new[p1], max_edges);
            if (lams1.empty()) continue;
            auto lams2 = unique_sink_orientations(sub2.graph, sub2.old_to_new[p2], max_edges);
            for (const Orientation& l1 : lams1) {
                for (const Orientation& l2 : lams2) {
                    out.push_back(SplitOrientation{p, e, l1, l2});
                }
            }
        }
    });
    return out;
}

SplitOrientation split_orientation(const Graph& g, const MarkedOrientation& a) {
    validate_marked_orientation(g, a);
    VertexSet v1 = reaching_set(g, a.lambda, a.arrow.tail);
    VertexSet v2 = g.vertices() & ~v1;
    OrderedPartition p{v1, v2};
    auto sub1 = g.induced_subgraph(v1);
    auto sub2 = g.induced_subgraph(v2);
    return SplitOrientation{p, Edge(a.arrow.tail, a.arrow.head),
                            restrict_orientation(g, a.lambda, sub1),
                            restrict_orientation(g, a.lambda, sub2)};
}

MarkedOrientation join_orientation(const Graph& g, const SplitOrientation& b) {
    validate_split_orientation(g, b);
    auto sub1 = g.induced_subgraph(b.partition.first);
    auto sub2 = g.induced_subgraph(b.partition.second);
    Orientation lam;
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        bool u_first = set_contains(b.partition.first, e.u);
        bool v_first = set_contains(b.partition.first, e.v);
        if (u_first && v_first) {
            int j = sub1.graph.edge_index(Edge(sub1.old_to_new[e.u], sub1.old_to_new[e.v]));
            if ((b.lambda1.dir_bits >> j) & 1u) lam.dir_bits |= 1u << i;
        } else if (!u_first && !v_first) {
            int j = sub2.graph.edge_index(Edge(sub2.old_to_new[e.u], sub2.old_to_new[e.v]));
            if ((b.lambda2.dir_bits >> j) & 1u) lam.dir_bits |= 1u << i;
        } else if (v_first) {
            // straddling edges point from the first side to the second
            lam.dir_bits |= 1u << i;
        }
    }
    int p1 = set_contains(b.partition.first, b.bridge.u) ? b.bridge.u : b.bridge.v;
    int p2 = p1 == b.bridge.u ? b.bridge.v : b.bridge.u;
    return MarkedOrientation{OrientedEdge{p1, p2}, lam};
}

}  // namespace chromadisc
