#pragma once

#include <array>
#include <vector>

#include "wspm/graph.hpp"

namespace wspm {

/// Brute-force connectivity oracles. Deliberately slow and simple: these are
/// the ground truth the optimized pipeline is checked against, so they share
/// no code with it beyond graph storage.

inline constexpr int kDefaultEnumCap = 60;  // edges; 3-cut counts can explode past this

using CutPair = std::array<EdgeId, 2>;
using CutTriple = std::array<EdgeId, 3>;

bool is_bridge(const CubicGraph& g, EdgeId e);
bool is_bridgeless(const CubicGraph& g);

/// First bridge in EdgeId order, or -1. Linear-time DFS lowpoint scan.
EdgeId find_bridge(const CubicGraph& g);

bool is_2_edge_cut(const CubicGraph& g, EdgeId e1, EdgeId e2);
bool is_minimal_3_cut(const CubicGraph& g, EdgeId e1, EdgeId e2, EdgeId e3);

std::vector<CutPair> enumerate_2_edge_cuts(const CubicGraph& g);
std::vector<CutTriple> enumerate_3_edge_cuts(const CubicGraph& g, int cap = kDefaultEnumCap);

/// Maximum number of edge-disjoint u-v paths (unit-capacity max flow).
int local_edge_connectivity(const CubicGraph& g, VertexId u, VertexId v);

/// Maximal vertex classes with pairwise local connectivity >= 3,
/// ordered by smallest member, each sorted.
std::vector<std::vector<VertexId>> three_edge_connected_components(const CubicGraph& g);

/// Classes of the relation e1 ~ e2 iff e1 == e2 or {e1,e2} is a 2-edge-cut,
/// ordered by smallest member, each sorted. Requires a bridgeless graph.
std::vector<std::vector<EdgeId>> edge_equivalence_classes(const CubicGraph& g);

}  // namespace wspm
