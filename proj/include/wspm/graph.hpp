#pragma once

#include <set>
#include <utility>
#include <vector>

#include "wspm/errors.hpp"

namespace wspm {

using VertexId = int;
using EdgeId = int;

struct Edge {
    VertexId u = -1;
    VertexId v = -1;
    bool alive = false;

    VertexId other(VertexId w) const { return w == u ? v : u; }
    bool touches(VertexId w) const { return u == w || v == w; }
};

/// Cubic multigraph with a stable edge-ID arena. Edges are never reused:
/// a removed edge keeps its ID in the dead set and stays resolvable.
/// Parallel edges are first class; loops are rejected.
class CubicGraph {
public:
    CubicGraph() = default;
    explicit CubicGraph(int n);

    static CubicGraph build(int n, const std::vector<std::pair<int, int>>& edges);

    EdgeId add_edge(VertexId u, VertexId v);
    void kill_edge(EdgeId e);
    void kill_vertex(VertexId v);

    int vertex_capacity() const { return static_cast<int>(incidence_.size()); }
    int edge_capacity() const { return static_cast<int>(edges_.size()); }
    int live_vertex_count() const { return live_vertices_; }
    int live_edge_count() const { return live_edges_; }

    bool vertex_alive(VertexId v) const { return v >= 0 && v < vertex_capacity() && vertex_alive_[v]; }
    bool edge_alive(EdgeId e) const { return e >= 0 && e < edge_capacity() && edges_[e].alive; }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<EdgeId>& incident(VertexId v) const { return incidence_[v]; }
    int degree(VertexId v) const { return static_cast<int>(incidence_[v].size()); }

    std::vector<VertexId> live_vertices() const;
    std::vector<EdgeId> live_edges() const;

    void require_cubic() const;

    /// Component label per vertex (-1 for dead vertices), ignoring the edges
    /// in `removed`. Labels are dense, assigned in ascending first-vertex order.
    std::vector<int> component_labels(const std::vector<EdgeId>& removed = {}) const;
    int component_count(const std::vector<EdgeId>& removed = {}) const;
    bool is_connected() const { return component_count() <= 1; }

private:
    void check_edge_live(EdgeId e) const;

    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
    std::vector<char> vertex_alive_;
    int live_vertices_ = 0;
    int live_edges_ = 0;
};

using Matching = std::set<EdgeId>;

bool is_perfect_matching(const CubicGraph& g, const Matching& m);

/// The two components of the live graph, as sorted vertex lists.
/// Throws ComponentCountMismatch unless there are exactly two.
std::pair<std::vector<VertexId>, std::vector<VertexId>> split_live_components(const CubicGraph& g);

}  // namespace wspm
