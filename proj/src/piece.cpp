#include "wspm/piece.hpp"

#include <algorithm>

namespace wspm {

EdgeId Piece::to_local_edge(EdgeId global) const {
    auto it = edge_local.find(global);
    if (it == edge_local.end()) throw DeadEdgeError(global);
    return it->second;
}

Matching Piece::to_global(const Matching& local) const {
    Matching out;
    for (EdgeId e : local) out.insert(edge_global[e]);
    return out;
}

Matching Piece::to_local(const Matching& global) const {
    Matching out;
    for (EdgeId e : global) out.insert(to_local_edge(e));
    return out;
}

Piece freeze_piece(const CubicGraph& g, const std::vector<VertexId>& vertices, int id) {
    Piece p;
    p.id = id;
    p.vertex_global = vertices;
    std::sort(p.vertex_global.begin(), p.vertex_global.end());
    p.graph = CubicGraph(static_cast<int>(p.vertex_global.size()));
    for (int i = 0; i < static_cast<int>(p.vertex_global.size()); ++i)
        p.vertex_local[p.vertex_global[i]] = i;

    // Collect live edges inside the set, each once from its smaller endpoint,
    // in ascending global ID order.
    std::vector<EdgeId> inside;
    for (VertexId v : p.vertex_global)
        for (EdgeId e : g.incident(v)) {
            VertexId w = g.edge(e).other(v);
            if (!p.vertex_local.count(w))
                throw InputError("piece is not vertex-induced: edge " + std::to_string(e) +
                                 " leaves the vertex set");
            if (v < w) inside.push_back(e);
        }
    std::sort(inside.begin(), inside.end());

    for (EdgeId e : inside) {
        const Edge& ed = g.edge(e);
        EdgeId local = p.graph.add_edge(p.vertex_local.at(ed.u), p.vertex_local.at(ed.v));
        p.edge_global.push_back(e);
        p.edge_local[e] = local;
    }
    return p;
}

}  // namespace wspm
