#include "wspm/graph.hpp"

#include <algorithm>

namespace wspm {

CubicGraph::CubicGraph(int n) {
    if (n <= 0) throw InputError("vertex count must be positive");
    incidence_.resize(n);
    vertex_alive_.assign(n, 1);
    live_vertices_ = n;
}

CubicGraph CubicGraph::build(int n, const std::vector<std::pair<int, int>>& edges) {
    CubicGraph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge endpoint out of range: (" + std::to_string(u) + "," +
                             std::to_string(v) + ")");
        g.add_edge(u, v);
    }
    return g;
}

EdgeId CubicGraph::add_edge(VertexId u, VertexId v) {
    if (u == v) throw InputError("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (!vertex_alive(u) || !vertex_alive(v)) throw InputError("edge endpoint not a live vertex");
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(Edge{u, v, true});
    incidence_[u].push_back(id);
    incidence_[v].push_back(id);
    ++live_edges_;
    return id;
}

void CubicGraph::check_edge_live(EdgeId e) const {
    if (!edge_alive(e)) throw DeadEdgeError(e);
}

void CubicGraph::kill_edge(EdgeId e) {
    check_edge_live(e);
    Edge& ed = edges_[e];
    ed.alive = false;
    auto drop = [&](VertexId w) {
        auto& inc = incidence_[w];
        inc.erase(std::find(inc.begin(), inc.end(), e));
    };
    drop(ed.u);
    drop(ed.v);
    --live_edges_;
}

void CubicGraph::kill_vertex(VertexId v) {
    if (!vertex_alive(v)) return;
    while (!incidence_[v].empty()) kill_edge(incidence_[v].back());
    vertex_alive_[v] = 0;
    --live_vertices_;
}

std::vector<VertexId> CubicGraph::live_vertices() const {
    std::vector<VertexId> out;
    out.reserve(live_vertices_);
    for (VertexId v = 0; v < vertex_capacity(); ++v)
        if (vertex_alive_[v]) out.push_back(v);
    return out;
}

std::vector<EdgeId> CubicGraph::live_edges() const {
    std::vector<EdgeId> out;
    out.reserve(live_edges_);
    for (EdgeId e = 0; e < edge_capacity(); ++e)
        if (edges_[e].alive) out.push_back(e);
    return out;
}

void CubicGraph::require_cubic() const {
    for (VertexId v = 0; v < vertex_capacity(); ++v)
        if (vertex_alive_[v] && degree(v) != 3) throw NotCubicError(v, degree(v));
}

std::vector<int> CubicGraph::component_labels(const std::vector<EdgeId>& removed) const {
    std::vector<char> skip(edge_capacity(), 0);
    for (EdgeId e : removed)
        if (e >= 0 && e < edge_capacity()) skip[e] = 1;

    std::vector<int> label(vertex_capacity(), -1);
    int next = 0;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < vertex_capacity(); ++s) {
        if (!vertex_alive_[s] || label[s] != -1) continue;
        int comp = next++;
        label[s] = comp;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (EdgeId e : incidence_[v]) {
                if (skip[e]) continue;
                VertexId w = edges_[e].other(v);
                if (label[w] == -1) {
                    label[w] = comp;
                    stack.push_back(w);
                }
            }
        }
    }
    return label;
}

int CubicGraph::component_count(const std::vector<EdgeId>& removed) const {
    auto label = component_labels(removed);
    int count = 0;
    for (int l : label) count = std::max(count, l + 1);
    return count;
}

bool is_perfect_matching(const CubicGraph& g, const Matching& m) {
    std::vector<int> covered(g.vertex_capacity(), 0);
    for (EdgeId e : m) {
        if (!g.edge_alive(e)) return false;
        ++covered[g.edge(e).u];
        ++covered[g.edge(e).v];
    }
    for (VertexId v = 0; v < g.vertex_capacity(); ++v)
        if (g.vertex_alive(v) && covered[v] != 1) return false;
    return true;
}

std::pair<std::vector<VertexId>, std::vector<VertexId>> split_live_components(const CubicGraph& g) {
    auto label = g.component_labels();
    int count = 0;
    for (int l : label) count = std::max(count, l + 1);
    if (count != 2) throw ComponentCountMismatchError(count);
    std::pair<std::vector<VertexId>, std::vector<VertexId>> out;
    for (VertexId v = 0; v < g.vertex_capacity(); ++v) {
        if (label[v] == 0) out.first.push_back(v);
        else if (label[v] == 1) out.second.push_back(v);
    }
    return out;
}

}  // namespace wspm
