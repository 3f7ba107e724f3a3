#pragma once

#include <functional>
#include <vector>

#include "wspm/cactus.hpp"
#include "wspm/graph.hpp"
#include "wspm/piece.hpp"

namespace wspm {

/// Side-labelling of a 2-edge-cut: e1 = u1v1, e2 = u2v2 with u1,u2 in one
/// component of G - {e1,e2} and v1,v2 in the other.
struct Orientation {
    VertexId u1 = -1, v1 = -1, u2 = -1, v2 = -1;
};

Orientation orient_cut(const CubicGraph& g, EdgeId e1, EdgeId e2);

struct TwoCutResult {
    EdgeId e1p = -1;  // u1u2
    EdgeId e2p = -1;  // v1v2
    Orientation o;
};

/// {e1,e2}-reduction: kill both edges, insert u1u2 and v1v2 with fresh IDs.
/// The checked overload verifies the pair is a 2-edge-cut first.
TwoCutResult two_cut_reduce(CubicGraph& g, EdgeId e1, EdgeId e2);
TwoCutResult two_cut_reduce(CubicGraph& g, EdgeId e1, EdgeId e2, const Orientation& o);

struct ReductionRecord {
    int index = 0;  // 1-based step number
    EdgeId e1 = -1, e2 = -1;    // removed
    EdgeId e1p = -1, e2p = -1;  // created; e1p continues in H_i, e2p goes to G_i
    VertexId u1 = -1, v1 = -1, u2 = -1, v2 = -1;  // u side continues
    int piece = -1;  // index of the separated piece G_i in ReductionPlan::pieces
};

struct ReductionPlan {
    std::vector<ReductionRecord> records;
    std::vector<Piece> pieces;  // G_1..G_k, then H_k last
    int final_piece = -1;       // index of H_k
    int original_n = 0;
    long long op_count = 0;

    int k() const { return static_cast<int>(records.size()); }
};

struct ForwardHooks {
    /// Called after each reduction step with the continuing graph and cactus.
    std::function<void(const CubicGraph&, const Cactus&, const Phi&, const ReductionRecord&)>
        after_step;
};

/// Part 1 of the algorithm: repeatedly reduce at the lowest degree-2 cactus
/// node until the cactus is edgeless, recording each step and freezing each
/// separated piece. All pieces, including the final H_k, are 3-edge-connected.
ReductionPlan forward_phase(CubicGraph g, Cactus t, const Phi& phi,
                            const ForwardHooks& hooks = {});

}  // namespace wspm
