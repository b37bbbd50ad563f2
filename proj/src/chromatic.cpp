#include "chromadisc/chromatic.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <unordered_map>

namespace chromadisc {

namespace {

// Exact-match cache key: n, sorted degree sequence, sorted edge list.
// No isomorphism search; identical labelings only.
std::string memo_key(const Graph& g) {
    std::string key;
    int n = g.vertex_count();
    key.reserve(2 + n + 2 * g.edge_count());
    key.push_back(static_cast<char>(n));
    std::string degrees(n, '\0');
    for (int v = 0; v < n; ++v) degrees[v] = static_cast<char>(g.degree(v));
    std::sort(degrees.begin(), degrees.end());
    key += degrees;
    for (const Edge& e : g.edges()) {
        key.push_back(static_cast<char>(e.u));
        key.push_back(static_cast<char>(e.v));
    }
    return key;
}

std::mutex g_memo_mutex;
std::unordered_map<std::string, Polynomial> g_memo;

bool memo_lookup(const std::string& key, Polynomial& out) {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = g_memo.find(key);
    if (it == g_memo.end()) return false;
    out = it->second;
    return true;
}

void memo_store(const std::string& key, const Polynomial& value) {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    g_memo[key] = value;  // all writers compute the same value
}

Polynomial chromatic_rec(const Graph& g) {
    if (g.edge_count() == 0) return Polynomial::monomial(g.vertex_count());
    std::string key = memo_key(g);
    Polynomial cached;
    if (memo_lookup(key, cached)) return cached;

    Polynomial result;
    auto comps = g.component_masks();
    if (comps.size() > 1) {
        result = Polynomial::constant(BigInt(1));
        for (VertexSet comp : comps) {
            result = result * chromatic_rec(g.induced_subgraph(comp).graph);
        }
    } else {
        const Edge pivot = g.edges().front();
        result = chromatic_rec(g.delete_edge(pivot)) - chromatic_rec(g.contract_edge(pivot));
    }
    memo_store(key, result);
    return result;
}

}  // namespace

Polynomial chromatic_polynomial(const Graph& g, int max_n) {
    if (g.vertex_count() > max_n) {
        throw SizeGuardError("chromatic polynomial vertex count", g.vertex_count(), max_n);
    }
    return chromatic_rec(g);
}

BigInt alpha_from_polynomial(const Graph& g, int max_n) {
    if (g.vertex_count() < 1) {
        throw InvariantViolationError("alpha requires a graph with at least one vertex");
    }
    return chromatic_polynomial(g, max_n).coefficient(1).abs();
}

std::uint64_t count_proper_colorings(const Graph& g, int q, std::uint64_t max_work) {
    if (q < 0) throw InvariantViolationError("palette size must be nonnegative");
    int n = g.vertex_count();
    // Guard q^n before doing the work; also guarantees the count fits u64.
    std::uint64_t work = 1;
    for (int i = 0; i < n && q > 1; ++i) {
        if (work > max_work / static_cast<std::uint64_t>(q)) {
            throw SizeGuardError("coloring assignments q^n", -1, static_cast<long long>(max_work));
        }
        work *= static_cast<std::uint64_t>(q);
    }

    std::vector<int> color(n, 0);
    std::uint64_t count = 0;
    // Assign vertices in label order; reject a color on conflict with any
    // earlier-labeled neighbor.
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            ++count;
            return;
        }
        VertexSet earlier = g.adjacency(v) & (full_set(v));
        for (int c = 1; c <= q; ++c) {
            bool ok = true;
            for (VertexSet s = earlier; s != 0; s &= s - 1) {
                int u = __builtin_ctz(s);
                if (color[u] == c) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                color[v] = c;
                self(self, v + 1);
            }
        }
        color[v] = 0;
    };
    rec(rec, 0);
    return count;
}

std::size_t chromatic_memo_size() {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    return g_memo.size();
}

void clear_chromatic_memo() {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    g_memo.clear();
}

}  // namespace chromadisc
