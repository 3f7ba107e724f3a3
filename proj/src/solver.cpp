#include "wspm/solver.hpp"

#include <algorithm>

#include "wspm/cactus.hpp"
#include "wspm/oracles.hpp"

namespace wspm {

namespace {

struct Search {
    const CubicGraph& g;
    std::vector<std::vector<int>> cuts_of_edge;  // edge -> indices of 3-cuts containing it
    std::vector<int> cut_count;                  // matching edges per 3-cut so far
    std::vector<char> covered;
    std::vector<EdgeId> chosen;
    long long budget;

    explicit Search(const CubicGraph& graph, const SolveOptions& opts)
        : g(graph),
          cuts_of_edge(graph.edge_capacity()),
          covered(graph.vertex_capacity(), 0),
          budget(opts.budget) {
        if (g.live_edge_count() <= opts.enum_cap) {
            auto cuts = enumerate_3_edge_cuts(g, opts.enum_cap);
            cut_count.assign(cuts.size(), 0);
            for (size_t i = 0; i < cuts.size(); ++i)
                for (EdgeId e : cuts[i]) cuts_of_edge[e].push_back(static_cast<int>(i));
        }
    }

    bool take(EdgeId e) {
        for (int c : cuts_of_edge[e])
            if (cut_count[c] == 1) return false;  // would meet a 3-cut twice
        for (int c : cuts_of_edge[e]) ++cut_count[c];
        covered[g.edge(e).u] = covered[g.edge(e).v] = 1;
        chosen.push_back(e);
        return true;
    }

    void untake(EdgeId e) {
        chosen.pop_back();
        covered[g.edge(e).u] = covered[g.edge(e).v] = 0;
        for (int c : cuts_of_edge[e]) --cut_count[c];
    }

    bool run(VertexId from) {
        if (--budget < 0) throw BudgetExceededError("solver budget exhausted");
        VertexId v = from;
        while (v < g.vertex_capacity() && (!g.vertex_alive(v) || covered[v])) ++v;
        if (v >= g.vertex_capacity()) return true;

        std::vector<EdgeId> options(g.incident(v).begin(), g.incident(v).end());
        std::sort(options.begin(), options.end());
        for (EdgeId e : options) {
            if (covered[g.edge(e).other(v)]) continue;
            if (!take(e)) continue;
            if (run(v + 1)) return true;
            untake(e);
        }
        return false;
    }
};

void require_3ec_cubic_piece(const CubicGraph& g) {
    g.require_cubic();
    if (g.live_vertex_count() % 2 != 0) throw InputError("odd vertex count has no perfect matching");
    // Bridgeless with only singleton 2-cut classes == 3-edge-connected.
    for (const auto& cls : fast_two_cut_classes(g))
        if (cls.size() >= 2)
            throw InputError("piece is not 3-edge-connected: {" + std::to_string(cls[0]) + "," +
                             std::to_string(cls[1]) + "} is a 2-edge-cut");
}

}  // namespace

Matching ExactBacktrackingBackend::solve(const CubicGraph& g, ConstraintKind kind, EdgeId e,
                                         const SolveOptions& opts) const {
    require_3ec_cubic_piece(g);
    if (kind != ConstraintKind::Any && !g.edge_alive(e)) throw DeadEdgeError(e);

    if (kind == ConstraintKind::MustAvoid) {
        // Force a neighbouring edge instead; its endpoint is then covered.
        VertexId u = std::min(g.edge(e).u, g.edge(e).v);
        EdgeId substitute = -1;
        for (EdgeId f : g.incident(u))
            if (f != e && (substitute == -1 || f < substitute)) substitute = f;
        return solve(g, ConstraintKind::MustContain, substitute, opts);
    }

    Search s(g, opts);
    if (kind == ConstraintKind::MustContain && !s.take(e))
        throw NoWspmError("prescribed edge " + std::to_string(e) + " meets no well-spread matching");
    if (!s.run(0))
        throw NoWspmError("no well-spread perfect matching found; this signals a bug or bad input");
    return Matching(s.chosen.begin(), s.chosen.end());
}

const SolverBackend& solver_backend(const std::string& name) {
    static const ExactBacktrackingBackend exact;
    if (name == "exact") return exact;
    throw BadParamsError("unknown solver backend '" + name + "'");
}

Matching wspm_any(const CubicGraph& g, const SolveOptions& opts) {
    return solver_backend("exact").solve(g, ConstraintKind::Any, -1, opts);
}

Matching wspm_with_edge(const CubicGraph& g, EdgeId e, const SolveOptions& opts) {
    return solver_backend("exact").solve(g, ConstraintKind::MustContain, e, opts);
}

Matching wspm_without_edge(const CubicGraph& g, EdgeId e, const SolveOptions& opts) {
    return solver_backend("exact").solve(g, ConstraintKind::MustAvoid, e, opts);
}

}  // namespace wspm
