#include "wspm/reduction.hpp"

#include "wspm/oracles.hpp"

namespace wspm {

Orientation orient_cut(const CubicGraph& g, EdgeId e1, EdgeId e2) {
    if (!is_2_edge_cut(g, e1, e2))
        throw NotTwoCutError("{" + std::to_string(e1) + "," + std::to_string(e2) +
                             "} is not a 2-edge-cut");
    auto label = g.component_labels({e1, e2});
    Orientation o;
    o.u1 = g.edge(e1).u;
    o.v1 = g.edge(e1).v;
    int u_side = label[o.u1];
    if (label[g.edge(e2).u] == u_side) {
        o.u2 = g.edge(e2).u;
        o.v2 = g.edge(e2).v;
    } else {
        o.u2 = g.edge(e2).v;
        o.v2 = g.edge(e2).u;
    }
    return o;
}

TwoCutResult two_cut_reduce(CubicGraph& g, EdgeId e1, EdgeId e2) {
    return two_cut_reduce(g, e1, e2, orient_cut(g, e1, e2));
}

TwoCutResult two_cut_reduce(CubicGraph& g, EdgeId e1, EdgeId e2, const Orientation& o) {
    // A shared endpoint on either side would mean its third edge is a bridge,
    // impossible in bridgeless input; fail loudly rather than create a loop.
    if (o.u1 == o.u2 || o.v1 == o.v2)
        throw LoopWouldFormError("cut edges share a vertex; input has a bridge");
    g.kill_edge(e1);
    g.kill_edge(e2);
    TwoCutResult r;
    r.o = o;
    r.e1p = g.add_edge(o.u1, o.u2);
    r.e2p = g.add_edge(o.v1, o.v2);
    return r;
}

ReductionPlan forward_phase(CubicGraph g, Cactus t, const Phi& phi, const ForwardHooks& hooks) {
    ReductionPlan plan;
    plan.original_n = g.live_vertex_count();
    long long ops = 0;
    int step = 1;

    while (t.live_edge_count() > 0) {
        ++ops;
        NodeId x = t.lowest_degree2();
        if (x == -1) throw NotCactusError("nonempty cactus without a degree-2 node");

        CutChoice choice = pick_cut_at(t, x);

        // Orient from phi: the piece side is phi^{-1}(x), no traversal needed.
        Orientation o;
        auto split = [&](EdgeId e, VertexId& u, VertexId& v) {
            const Edge& ed = g.edge(e);
            if (phi.node_of[ed.u] == x) {
                v = ed.u;
                u = ed.v;
            } else {
                v = ed.v;
                u = ed.u;
            }
        };
        split(choice.e1, o.u1, o.v1);
        split(choice.e2, o.u2, o.v2);

        TwoCutResult red = two_cut_reduce(g, choice.e1, choice.e2, o);
        ops += 4;

        Piece piece = freeze_piece(g, phi.preimage[x], static_cast<int>(plan.pieces.size()));
        ops += piece.size();
        for (VertexId v : phi.preimage[x]) g.kill_vertex(v);

        // Mirror the reduction on the cactus; the continuing side's new cactus
        // edge stands for e1'.
        cactus_reduce(t, choice.a, choice.b, -1, red.e1p);
        t.kill_node(x);  // x's piece left the graph; its edgeless cactus goes with it
        ops += 2;

        ReductionRecord rec{step,  choice.e1, choice.e2, red.e1p, red.e2p,
                            o.u1,  o.v1,      o.u2,      o.v2,    piece.id};
        plan.pieces.push_back(std::move(piece));
        plan.records.push_back(rec);
        if (hooks.after_step) hooks.after_step(g, t, phi, rec);
        ++step;
    }

    Piece hk = freeze_piece(g, g.live_vertices(), static_cast<int>(plan.pieces.size()));
    ops += hk.size();
    plan.final_piece = hk.id;
    plan.pieces.push_back(std::move(hk));
    plan.op_count = ops;

    long long total = 0;
    for (const Piece& p : plan.pieces) total += p.size();
    if (total != plan.original_n)
        throw NotCactusError("piece accounting broke: pieces cover " + std::to_string(total) +
                             " of " + std::to_string(plan.original_n) + " vertices");
    return plan;
}

}  // namespace wspm
