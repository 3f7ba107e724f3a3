#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wspm/graph.hpp"

namespace wspm {

using NodeId = int;
using CactusEdgeId = int;

struct CactusEdge {
    NodeId x = -1;
    NodeId y = -1;
    bool alive = false;
    EdgeId graph_edge = -1;  // the external graph edge this cactus edge stands for
    int cycle = -1;          // cycle ID; every edge of a bridgeless model lies on exactly one

    NodeId other(NodeId n) const { return n == x ? y : x; }
};

/// Cactus of all 2-edge-cuts: nodes are 3-edge-connected components, edges
/// correspond bijectively to external graph edges. 2-cycles allowed, loops not.
/// Two cactus edges form a 2-cut of the model iff they share a cycle ID.
class Cactus {
public:
    NodeId add_node();
    CactusEdgeId add_edge(NodeId x, NodeId y, EdgeId graph_edge, int cycle);
    int fresh_cycle() { return next_cycle_++; }

    void kill_edge(CactusEdgeId e);
    void kill_node(NodeId n);  // must be isolated
    void relabel_cycle(CactusEdgeId e, int cycle) { edges_[e].cycle = cycle; }

    int node_capacity() const { return static_cast<int>(incidence_.size()); }
    int edge_capacity() const { return static_cast<int>(edges_.size()); }
    int live_node_count() const { return live_nodes_; }
    int live_edge_count() const { return live_edges_; }
    bool node_alive(NodeId n) const { return n >= 0 && n < node_capacity() && node_alive_[n]; }
    bool edge_alive(CactusEdgeId e) const { return e >= 0 && e < edge_capacity() && edges_[e].alive; }
    const CactusEdge& edge(CactusEdgeId e) const { return edges_[e]; }
    const std::vector<CactusEdgeId>& incident(NodeId n) const { return incidence_[n]; }
    int degree(NodeId n) const { return static_cast<int>(incidence_[n].size()); }
    std::vector<NodeId> live_nodes() const;
    std::vector<CactusEdgeId> live_edges() const;

    /// Degree-2 nodes in ascending NodeId order.
    std::vector<NodeId> degree2_nodes() const;
    /// Incrementally maintained: lowest live degree-2 node, or -1.
    NodeId lowest_degree2() const { return deg2_.empty() ? -1 : *deg2_.begin(); }

private:
    void note_degree(NodeId n);

    std::vector<CactusEdge> edges_;
    std::vector<std::vector<CactusEdgeId>> incidence_;
    std::vector<char> node_alive_;
    std::set<NodeId> deg2_;
    int live_nodes_ = 0;
    int live_edges_ = 0;
    int next_cycle_ = 0;
};

struct Phi {
    std::vector<NodeId> node_of;                 // VertexId -> NodeId (-1 for dead vertices)
    std::vector<std::vector<VertexId>> preimage;  // NodeId -> sorted vertex list
};

struct CactusModel {
    Cactus cactus;
    Phi phi;
};

struct CutChoice {
    CactusEdgeId a = -1;
    CactusEdgeId b = -1;
    EdgeId e1 = -1;
    EdgeId e2 = -1;
};

struct CactusReduceResult {
    std::vector<NodeId> side1;                // nodes separated with edge `a`'s near endpoint
    std::vector<NodeId> isolated;             // nodes left with no edges (single-node cacti)
    std::optional<CactusEdgeId> new_edge1;    // absent when the new edge was a loop
    std::optional<CactusEdgeId> new_edge2;
};

/// The two cactus edges at a degree-2 node and their external graph edges.
CutChoice pick_cut_at(const Cactus& t, NodeId x);

/// {a,b}-reduction of the cactus. Requires a and b on a common cycle.
/// New edges take over `graph_edge1` (side of a.x) / `graph_edge2`; loops are
/// deleted. Nodes that end up edgeless stay alive as single-node cacti and
/// are reported as `isolated`. O(1) when a and b meet at a degree-2 node,
/// which is how the forward phase always calls it.
CactusReduceResult cactus_reduce(Cactus& t, CactusEdgeId a, CactusEdgeId b,
                                 EdgeId graph_edge1 = -1, EdgeId graph_edge2 = -1);

/// 2-cut equivalence classes of the live edges, near-linear time. Randomized
/// cycle-space hashing over a DFS tree; deterministic for a fixed graph.
/// Throws HasBridge (exact check) on bridged input.
std::vector<std::vector<EdgeId>> fast_two_cut_classes(const CubicGraph& g);

/// Cactus representation of all 2-edge-cuts of a connected bridgeless cubic
/// graph. 3-edge-connected input yields a single node with no edges.
CactusModel build_cactus(const CubicGraph& g);

/// Checks definition conditions both ways against brute-force enumeration,
/// plus the structural cactus invariants. Throws RepresentationGap with the
/// offending cut, or TooLarge past the cap.
void validate_representation(const CubicGraph& g, const Cactus& t, const Phi& phi, int cap = 60);

/// DOT text; node labels list phi preimages.
std::string cactus_to_dot(const Cactus& t, const Phi& phi);

}  // namespace wspm
