#include "chromadisc/graph.hpp"

#include <algorithm>

namespace chromadisc {

std::vector<int> set_to_vertices(VertexSet s) {
    std::vector<int> out;
    for (int v = 0; s != 0; ++v, s >>= 1) {
        if (s & 1u) out.push_back(v);
    }
    return out;
}

VertexSet vertices_to_set(const std::vector<int>& vs) {
    VertexSet s = 0;
    for (int v : vs) s |= 1u << v;
    return s;
}

Graph::Graph(int n, std::span<const std::pair<int, int>> edge_list) : n_(n) {
    if (n < 0) throw VertexOutOfRangeError(n, 0);
    // Vertex sets are 32-bit masks throughout.
    if (n > 32) throw SizeGuardError("vertex count", n, 32);
    adj_.assign(n_, 0);
    edges_.reserve(edge_list.size());
    for (auto [a, b] : edge_list) {
        if (a < 0 || a >= n_) throw VertexOutOfRangeError(a, n_);
        if (b < 0 || b >= n_) throw VertexOutOfRangeError(b, n_);
        edges_.emplace_back(a, b);  // Edge ctor rejects loops
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const Edge& e : edges_) {
        adj_[e.u] |= 1u << e.v;
        adj_[e.v] |= 1u << e.u;
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw VertexOutOfRangeError(v, n_);
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && set_contains(adj_[u], v);
}

int Graph::edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || !(*it == e)) return -1;
    return static_cast<int>(it - edges_.begin());
}

Graph Graph::delete_edge(const Edge& e) const {
    if (edge_index(e) < 0) throw EdgeNotPresentError(e.u, e.v);
    Graph out;
    out.n_ = n_;
    out.adj_ = adj_;
    out.adj_[e.u] &= ~(1u << e.v);
    out.adj_[e.v] &= ~(1u << e.u);
    out.edges_.reserve(edges_.size() - 1);
    for (const Edge& f : edges_) {
        if (!(f == e)) out.edges_.push_back(f);
    }
    return out;
}

Graph Graph::contract_edge(const Edge& e) const {
    if (edge_index(e) < 0) throw EdgeNotPresentError(e.u, e.v);
    // Send v to u = min endpoint, then compact labels above v down by one.
    auto relabel = [&](int x) {
        if (x == e.v) x = e.u;
        return x > e.v ? x - 1 : x;
    };
    std::vector<std::pair<int, int>> merged;
    merged.reserve(edges_.size());
    for (const Edge& f : edges_) {
        int a = relabel(f.u);
        int b = relabel(f.v);
        if (a != b) merged.emplace_back(a, b);
    }
    return Graph(n_ - 1, merged);
}

InducedSubgraph Graph::induced_subgraph(VertexSet vs) const {
    if (vs == 0) throw EmptyVertexSetError();
    InducedSubgraph out;
    out.old_to_new.assign(n_, -1);
    for (int v = 0; v < n_; ++v) {
        if (set_contains(vs, v)) {
            out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
            out.new_to_old.push_back(v);
        }
    }
    if ((vs & ~full_set(n_)) != 0) {
        throw VertexOutOfRangeError(31 - __builtin_clz(vs), n_);
    }
    std::vector<std::pair<int, int>> internal;
    for (const Edge& f : edges_) {
        if (set_contains(vs, f.u) && set_contains(vs, f.v)) {
            internal.emplace_back(out.old_to_new[f.u], out.old_to_new[f.v]);
        }
    }
    out.graph = Graph(static_cast<int>(out.new_to_old.size()), internal);
    return out;
}

std::vector<Edge> Graph::straddling_edges(const OrderedPartition& p) const {
    std::vector<Edge> out;
    for (const Edge& f : edges_) {
        bool u1 = set_contains(p.first, f.u);
        bool v1 = set_contains(p.first, f.v);
        if (u1 != v1) out.push_back(f);
    }
    return out;
}

std::vector<VertexSet> Graph::component_masks() const {
    std::vector<VertexSet> out;
    VertexSet seen = 0;
    for (int start = 0; start < n_; ++start) {
        if (set_contains(seen, start)) continue;
        VertexSet comp = 1u << start;
        VertexSet frontier = comp;
        while (frontier != 0) {
            VertexSet next = 0;
            for (int v = 0; v < n_; ++v) {
                if (set_contains(frontier, v)) next |= adj_[v];
            }
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

std::vector<std::vector<int>> Graph::connected_components() const {
    std::vector<std::vector<int>> out;
    for (VertexSet comp : component_masks()) out.push_back(set_to_vertices(comp));
    return out;
}

bool Graph::is_connected() const { return component_masks().size() <= 1; }

std::vector<OrderedPartition> ordered_partitions(const Graph& g, int max_n) {
    std::vector<OrderedPartition> out;
    int n = g.vertex_count();
    if (n >= 1 && n <= 31) out.reserve((std::size_t{1} << n) - 2);
    for_each_ordered_partition(g, [&](const OrderedPartition& p) { out.push_back(p); }, max_n);
    return out;
}

}  // namespace chromadisc
