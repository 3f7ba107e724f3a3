#include "wspm/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace wspm {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// All bridges of the live graph with `skip` ignored (-1 for none).
// Iterative DFS lowpoint; parallel edges handled by tracking the entry edge.
std::vector<EdgeId> bridges_excluding(const CubicGraph& g, EdgeId skip) {
    int n = g.vertex_capacity();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<EdgeId> bridges;
    int timer = 0;

    struct Frame {
        VertexId v;
        EdgeId via;  // edge used to enter v
        size_t next = 0;
    };
    std::vector<Frame> stack;

    for (VertexId s = 0; s < n; ++s) {
        if (!g.vertex_alive(s) || disc[s] != -1) continue;
        disc[s] = low[s] = timer++;
        stack.push_back({s, -1});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& inc = g.incident(f.v);
            if (f.next < inc.size()) {
                EdgeId e = inc[f.next++];
                if (e == skip || e == f.via) continue;
                VertexId w = g.edge(e).other(f.v);
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                VertexId v = f.v;
                EdgeId via = f.via;
                stack.pop_back();
                if (!stack.empty()) {
                    VertexId p = stack.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] > disc[p]) bridges.push_back(via);
                }
            }
        }
    }
    std::sort(bridges.begin(), bridges.end());
    return bridges;
}

}  // namespace

EdgeId find_bridge(const CubicGraph& g) {
    auto b = bridges_excluding(g, -1);
    return b.empty() ? -1 : b.front();
}

bool is_bridgeless(const CubicGraph& g) { return find_bridge(g) == -1; }

bool is_bridge(const CubicGraph& g, EdgeId e) {
    if (!g.edge_alive(e)) throw DeadEdgeError(e);
    return g.component_count({e}) > g.component_count();
}

bool is_2_edge_cut(const CubicGraph& g, EdgeId e1, EdgeId e2) {
    if (!g.edge_alive(e1)) throw DeadEdgeError(e1);
    if (!g.edge_alive(e2)) throw DeadEdgeError(e2);
    if (e1 == e2) return false;
    int base = g.component_count();
    if (g.component_count({e1, e2}) <= base) return false;
    // Inclusion-minimality: neither edge disconnects alone.
    return g.component_count({e1}) == base && g.component_count({e2}) == base;
}

bool is_minimal_3_cut(const CubicGraph& g, EdgeId e1, EdgeId e2, EdgeId e3) {
    for (EdgeId e : {e1, e2, e3})
        if (!g.edge_alive(e)) throw DeadEdgeError(e);
    if (e1 == e2 || e1 == e3 || e2 == e3) return false;
    int base = g.component_count();
    if (g.component_count({e1, e2, e3}) <= base) return false;
    for (EdgeId e : {e1, e2, e3})
        if (g.component_count({e}) > base) return false;
    for (auto [a, b] : {std::pair{e1, e2}, {e1, e3}, {e2, e3}})
        if (g.component_count({a, b}) > base) return false;
    return true;
}

std::vector<CutPair> enumerate_2_edge_cuts(const CubicGraph& g) {
    auto edges = g.live_edges();
    std::vector<CutPair> out;
    for (size_t i = 0; i < edges.size(); ++i) {
        // Partners of edges[i] are exactly the bridges once edges[i] is removed
        // (in a bridgeless component nothing is a bridge on its own).
        if (is_bridge(g, edges[i])) continue;
        for (EdgeId f : bridges_excluding(g, edges[i]))
            if (f > edges[i] && !is_bridge(g, f)) out.push_back({edges[i], f});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CutTriple> enumerate_3_edge_cuts(const CubicGraph& g, int cap) {
    if (g.live_edge_count() > cap) throw TooLargeError(cap);
    auto edges = g.live_edges();
    std::vector<CutTriple> out;
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j)
            for (size_t k = j + 1; k < edges.size(); ++k)
                if (is_minimal_3_cut(g, edges[i], edges[j], edges[k]))
                    out.push_back({edges[i], edges[j], edges[k]});
    return out;
}

int local_edge_connectivity(const CubicGraph& g, VertexId u, VertexId v) {
    if (u == v) throw SameVertexError("local connectivity needs distinct vertices");
    if (!g.vertex_alive(u) || !g.vertex_alive(v)) throw InputError("vertex not live");

    // Unit-capacity undirected max flow by BFS augmentation.
    std::vector<int> flow(g.edge_capacity(), 0);  // +1 along u->v orientation of the edge
    int value = 0;
    while (true) {
        std::vector<EdgeId> via(g.vertex_capacity(), -1);
        std::vector<char> seen(g.vertex_capacity(), 0);
        std::queue<VertexId> q;
        q.push(u);
        seen[u] = 1;
        while (!q.empty() && !seen[v]) {
            VertexId a = q.front();
            q.pop();
            for (EdgeId e : g.incident(a)) {
                VertexId b = g.edge(e).other(a);
                int dir = (a == g.edge(e).u) ? 1 : -1;
                if (seen[b] || flow[e] * dir >= 1) continue;
                seen[b] = 1;
                via[b] = e;
                q.push(b);
            }
        }
        if (!seen[v]) break;
        VertexId a = v;
        while (a != u) {
            EdgeId e = via[a];
            VertexId prev = g.edge(e).other(a);
            flow[e] += (prev == g.edge(e).u) ? 1 : -1;
            a = prev;
        }
        ++value;
    }
    return value;
}

std::vector<std::vector<VertexId>> three_edge_connected_components(const CubicGraph& g) {
    if (!g.is_connected()) throw DisconnectedError("3ECC requires a connected graph");
    auto verts = g.live_vertices();
    Dsu dsu(g.vertex_capacity());
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j) {
            if (dsu.find(verts[i]) == dsu.find(verts[j])) continue;
            if (local_edge_connectivity(g, verts[i], verts[j]) >= 3) dsu.unite(verts[i], verts[j]);
        }
    std::vector<std::vector<VertexId>> classes;
    std::vector<int> index(g.vertex_capacity(), -1);
    for (VertexId v : verts) {
        int root = dsu.find(v);
        if (index[root] == -1) {
            index[root] = static_cast<int>(classes.size());
            classes.emplace_back();
        }
        classes[index[root]].push_back(v);
    }
    return classes;
}

std::vector<std::vector<EdgeId>> edge_equivalence_classes(const CubicGraph& g) {
    if (EdgeId b = find_bridge(g); b != -1) throw HasBridgeError(b);
    Dsu dsu(g.edge_capacity());
    for (const CutPair& p : enumerate_2_edge_cuts(g)) dsu.unite(p[0], p[1]);
    std::vector<std::vector<EdgeId>> classes;
    std::vector<int> index(g.edge_capacity(), -1);
    for (EdgeId e : g.live_edges()) {
        int root = dsu.find(e);
        if (index[root] == -1) {
            index[root] = static_cast<int>(classes.size());
            classes.emplace_back();
        }
        classes[index[root]].push_back(e);
    }
    return classes;
}

}  // namespace wspm
