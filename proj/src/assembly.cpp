#include "wspm/assembly.hpp"

#include "wspm/oracles.hpp"
#include "wspm/verify.hpp"

namespace wspm {

GlueCase classify_glue(const Matching& m1, const Matching& m2, const ReductionRecord& r) {
    bool in1 = m1.count(r.e1p) > 0;
    bool in2 = m2.count(r.e2p) > 0;
    if (in1 != in2)
        throw AgreementViolatedError("matchings disagree on e1'=" + std::to_string(r.e1p) +
                                     " / e2'=" + std::to_string(r.e2p));
    return in1 ? GlueCase::BothContain : GlueCase::BothAvoid;
}

Matching glue(const Matching& m1, const Matching& m2, const ReductionRecord& r) {
    GlueCase c = classify_glue(m1, m2, r);
    Matching out = m1;
    out.insert(m2.begin(), m2.end());
    if (c == GlueCase::BothContain) {
        out.erase(r.e1p);
        out.erase(r.e2p);
        out.insert(r.e1);
        out.insert(r.e2);
    }
    return out;
}

Matching backward_phase(const ReductionPlan& plan, Matching seed, const SolveOptions& opts,
                        const BackwardHooks& hooks) {
    Matching m = std::move(seed);
    for (auto it = plan.records.rbegin(); it != plan.records.rend(); ++it) {
        const ReductionRecord& r = *it;
        const Piece& piece = plan.pieces[r.piece];
        EdgeId local = piece.to_local_edge(r.e2p);
        Matching piece_m = m.count(r.e1p) ? wspm_with_edge(piece.graph, local, opts)
                                          : wspm_without_edge(piece.graph, local, opts);
        Matching piece_global = piece.to_global(piece_m);
        Matching next = glue(m, piece_global, r);
        if (hooks.after_glue) hooks.after_glue(r, m, piece_global, next);
        m = std::move(next);
    }
    return m;
}

namespace {

Matching wspm_connected(const CubicGraph& g, const WspmOptions& opts) {
    if (EdgeId b = find_bridge(g); b != -1) throw HasBridgeError(b);
    CactusModel model = build_cactus(g);
    ReductionPlan plan = forward_phase(g, std::move(model.cactus), model.phi, opts.forward);
    const Piece& hk = plan.pieces[plan.final_piece];
    Matching seed = hk.to_global(wspm_any(hk.graph, opts.solve));
    return backward_phase(plan, std::move(seed), opts.solve, opts.backward);
}

}  // namespace

Matching wspm(const CubicGraph& g, const WspmOptions& opts) {
    g.require_cubic();
    if (g.live_vertex_count() == 0) throw InputError("empty graph");

    Matching result;
    auto label = g.component_labels();
    int components = 0;
    for (int l : label) components = std::max(components, l + 1);
    if (components == 1) {
        result = wspm_connected(g, opts);
    } else {
        for (int c = 0; c < components; ++c) {
            std::vector<VertexId> verts;
            for (VertexId v = 0; v < g.vertex_capacity(); ++v)
                if (label[v] == c) verts.push_back(v);
            Piece comp = freeze_piece(g, verts, c);
            Matching local = wspm_connected(comp.graph, opts);
            Matching global = comp.to_global(local);
            result.insert(global.begin(), global.end());
        }
    }

    if (opts.verify) {
        VerifyReport report = verify_wspm(g, result);
        if (!report.skipped && !report.valid())
            throw Error("internal: produced matching failed verification:\n" + report.describe());
    }
    return result;
}

}  // namespace wspm
