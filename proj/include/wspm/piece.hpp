#pragma once

#include <unordered_map>
#include <vector>

#include "wspm/graph.hpp"

namespace wspm {

/// Frozen snapshot of a vertex-induced piece. Stores a compact local graph
/// plus both directions of the vertex/edge ID translation, so matchings
/// computed on the local graph can be mapped back to global edge IDs.
struct Piece {
    int id = -1;
    CubicGraph graph;                       // compact, locally indexed
    std::vector<VertexId> vertex_global;    // local vertex -> global vertex
    std::vector<EdgeId> edge_global;        // local edge -> global edge
    std::unordered_map<VertexId, VertexId> vertex_local;
    std::unordered_map<EdgeId, EdgeId> edge_local;

    int size() const { return graph.live_vertex_count(); }
    EdgeId to_global_edge(EdgeId local) const { return edge_global[local]; }
    EdgeId to_local_edge(EdgeId global) const;

    Matching to_global(const Matching& local) const;
    Matching to_local(const Matching& global) const;
};

/// Snapshot the subgraph induced by `vertices` (global IDs, any order).
/// Every live edge incident to a listed vertex must stay inside the set.
Piece freeze_piece(const CubicGraph& g, const std::vector<VertexId>& vertices, int id);

}  // namespace wspm
