#include "wspm/cactus.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

#include "wspm/oracles.hpp"

namespace wspm {

NodeId Cactus::add_node() {
    NodeId n = node_capacity();
    incidence_.emplace_back();
    node_alive_.push_back(1);
    ++live_nodes_;
    return n;
}

CactusEdgeId Cactus::add_edge(NodeId x, NodeId y, EdgeId graph_edge, int cycle) {
    if (x == y) throw InputError("loop cactus edge at node " + std::to_string(x));
    if (!node_alive(x) || !node_alive(y)) throw InputError("cactus edge endpoint not live");
    CactusEdgeId id = edge_capacity();
    edges_.push_back(CactusEdge{x, y, true, graph_edge, cycle});
    incidence_[x].push_back(id);
    incidence_[y].push_back(id);
    next_cycle_ = std::max(next_cycle_, cycle + 1);
    ++live_edges_;
    note_degree(x);
    note_degree(y);
    return id;
}

void Cactus::kill_edge(CactusEdgeId e) {
    if (!edge_alive(e)) throw DeadEdgeError(e);
    CactusEdge& ed = edges_[e];
    ed.alive = false;
    for (NodeId n : {ed.x, ed.y}) {
        auto& inc = incidence_[n];
        inc.erase(std::find(inc.begin(), inc.end(), e));
        note_degree(n);
    }
    --live_edges_;
}

void Cactus::kill_node(NodeId n) {
    if (!node_alive(n)) return;
    if (!incidence_[n].empty()) throw InputError("killing non-isolated cactus node");
    node_alive_[n] = 0;
    deg2_.erase(n);
    --live_nodes_;
}

void Cactus::note_degree(NodeId n) {
    if (node_alive_[n] && degree(n) == 2) deg2_.insert(n);
    else deg2_.erase(n);
}

std::vector<NodeId> Cactus::live_nodes() const {
    std::vector<NodeId> out;
    for (NodeId n = 0; n < node_capacity(); ++n)
        if (node_alive_[n]) out.push_back(n);
    return out;
}

std::vector<CactusEdgeId> Cactus::live_edges() const {
    std::vector<CactusEdgeId> out;
    for (CactusEdgeId e = 0; e < edge_capacity(); ++e)
        if (edges_[e].alive) out.push_back(e);
    return out;
}

std::vector<NodeId> Cactus::degree2_nodes() const {
    return {deg2_.begin(), deg2_.end()};
}

CutChoice pick_cut_at(const Cactus& t, NodeId x) {
    if (!t.node_alive(x) || t.degree(x) != 2)
        throw NotDegree2Error("node " + std::to_string(x) + " does not have cactus degree 2");
    CactusEdgeId a = t.incident(x)[0];
    CactusEdgeId b = t.incident(x)[1];
    if (a > b) std::swap(a, b);
    return CutChoice{a, b, t.edge(a).graph_edge, t.edge(b).graph_edge};
}

CactusReduceResult cactus_reduce(Cactus& t, CactusEdgeId a, CactusEdgeId b, EdgeId graph_edge1,
                                 EdgeId graph_edge2) {
    if (!t.edge_alive(a)) throw DeadEdgeError(a);
    if (!t.edge_alive(b)) throw DeadEdgeError(b);
    if (a == b) throw NotCactusCutError("need two distinct cactus edges");
    const CactusEdge ea = t.edge(a);
    const CactusEdge eb = t.edge(b);
    if (ea.cycle < 0 || ea.cycle != eb.cycle)
        throw NotCactusCutError("cactus edges " + std::to_string(a) + " and " + std::to_string(b) +
                                " share no cycle");
    int cycle = ea.cycle;

    CactusReduceResult res;
    NodeId p1, p2, q1, q2;

    // Degree-2 meeting point: side1 is that single node, O(1).
    NodeId shared = -1;
    if ((ea.x == eb.x || ea.x == eb.y) && t.degree(ea.x) == 2) shared = ea.x;
    else if ((ea.y == eb.x || ea.y == eb.y) && t.degree(ea.y) == 2) shared = ea.y;

    if (shared != -1) {
        p1 = p2 = shared;
        q1 = ea.other(shared);
        q2 = eb.other(shared);
        res.side1 = {shared};
    } else {
        // Generic split: BFS the side containing ea.x with a and b removed.
        std::vector<char> in_side(t.node_capacity(), 0);
        std::vector<NodeId> stack{ea.x};
        in_side[ea.x] = 1;
        while (!stack.empty()) {
            NodeId n = stack.back();
            stack.pop_back();
            res.side1.push_back(n);
            for (CactusEdgeId e : t.incident(n)) {
                if (e == a || e == b) continue;
                NodeId w = t.edge(e).other(n);
                if (!in_side[w]) {
                    in_side[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        if (in_side[ea.y]) throw NotCactusCutError("removing the pair does not split the cactus");
        p1 = ea.x;
        q1 = ea.y;
        if (in_side[eb.x] == in_side[eb.y])
            throw NotCactusCutError("second edge does not cross the split");
        p2 = in_side[eb.x] ? eb.x : eb.y;
        q2 = t.edge(b).other(p2);
        std::sort(res.side1.begin(), res.side1.end());
    }

    t.kill_edge(a);
    t.kill_edge(b);

    if (p1 != p2) {
        // Residual side1 part of the old cycle closes up with the new edge.
        int fresh = t.fresh_cycle();
        for (NodeId n : res.side1)
            for (CactusEdgeId e : t.incident(n))
                if (t.edge(e).cycle == cycle) t.relabel_cycle(e, fresh);
        res.new_edge1 = t.add_edge(p1, p2, graph_edge1, fresh);
    }
    if (q1 != q2) res.new_edge2 = t.add_edge(q1, q2, graph_edge2, cycle);

    // Nodes that lost their last edge become single-node edgeless cacti; they
    // stay alive (the caller decides their fate) but are reported.
    for (NodeId n : {p1, p2, q1, q2})
        if (t.node_alive(n) && t.degree(n) == 0) res.isolated.push_back(n);
    std::sort(res.isolated.begin(), res.isolated.end());
    res.isolated.erase(std::unique(res.isolated.begin(), res.isolated.end()), res.isolated.end());
    return res;
}

std::vector<std::vector<EdgeId>> fast_two_cut_classes(const CubicGraph& g) {
    if (EdgeId br = find_bridge(g); br != -1) throw HasBridgeError(br);

    int n = g.vertex_capacity();
    std::vector<EdgeId> parent_edge(n, -1);
    std::vector<char> visited(n, 0), is_tree(g.edge_capacity(), 0);
    std::vector<VertexId> order;
    order.reserve(n);

    for (VertexId s = 0; s < n; ++s) {
        if (!g.vertex_alive(s) || visited[s]) continue;
        visited[s] = 1;
        std::vector<VertexId> stack{s};
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (EdgeId e : g.incident(v)) {
                VertexId w = g.edge(e).other(v);
                if (!visited[w]) {
                    visited[w] = 1;
                    parent_edge[w] = e;
                    is_tree[e] = 1;
                    stack.push_back(w);
                }
            }
        }
    }

    // Cycle-space hashing: non-tree edges get random labels, a tree edge gets
    // the XOR of the non-tree labels whose fundamental cycle covers it. Two
    // edges form a 2-cut iff their labels coincide (w.h.p.).
    std::mt19937_64 rng(0x5bd1e995c2b2ae35ULL);
    std::vector<std::uint64_t> label(g.edge_capacity(), 0), acc(n, 0);
    for (EdgeId e : g.live_edges()) {
        if (is_tree[e]) continue;
        std::uint64_t r = 0;
        while (r == 0) r = rng();
        label[e] = r;
        acc[g.edge(e).u] ^= r;
        acc[g.edge(e).v] ^= r;
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        VertexId v = *it;
        EdgeId pe = parent_edge[v];
        if (pe == -1) continue;
        label[pe] = acc[v];
        acc[g.edge(pe).other(v)] ^= acc[v];
    }

    std::unordered_map<std::uint64_t, int> index;
    std::vector<std::vector<EdgeId>> classes;
    for (EdgeId e : g.live_edges()) {
        auto [it, fresh] = index.try_emplace(label[e], static_cast<int>(classes.size()));
        if (fresh) classes.emplace_back();
        classes[it->second].push_back(e);
    }
    return classes;
}

CactusModel build_cactus(const CubicGraph& g) {
    g.require_cubic();
    if (!g.is_connected()) throw DisconnectedError("cactus construction needs a connected graph");

    auto classes = fast_two_cut_classes(g);  // also rejects bridges
    std::vector<std::vector<EdgeId>> cut_classes;
    std::vector<int> class_of(g.edge_capacity(), -1);
    for (auto& c : classes)
        if (c.size() >= 2) {
            for (EdgeId e : c) class_of[e] = static_cast<int>(cut_classes.size());
            cut_classes.push_back(c);
        }

    // 3ECC vertex classes: common refinement of the component partitions
    // obtained by deleting each 2-cut class in turn.
    int n = g.vertex_capacity();
    std::vector<int> vlabel(n, 0);
    for (const auto& cls : cut_classes) {
        auto comp = g.component_labels(cls);
        std::map<std::pair<int, int>, int> renum;
        for (VertexId v = 0; v < n; ++v) {
            if (!g.vertex_alive(v)) {
                vlabel[v] = -1;
                continue;
            }
            auto [it, fresh] = renum.try_emplace({vlabel[v], comp[v]}, static_cast<int>(renum.size()));
            vlabel[v] = it->second;
        }
    }

    CactusModel model;
    Phi& phi = model.phi;
    phi.node_of.assign(n, -1);
    std::unordered_map<int, NodeId> node_of_label;
    for (VertexId v = 0; v < n; ++v) {
        if (!g.vertex_alive(v)) continue;
        auto [it, fresh] = node_of_label.try_emplace(vlabel[v], -1);
        if (fresh) {
            it->second = model.cactus.add_node();
            phi.preimage.emplace_back();
        }
        phi.node_of[v] = it->second;
        phi.preimage[it->second].push_back(v);
    }

    std::vector<int> cycle_of_class(cut_classes.size());
    for (size_t i = 0; i < cut_classes.size(); ++i) cycle_of_class[i] = model.cactus.fresh_cycle();

    for (EdgeId e : g.live_edges()) {
        NodeId nu = phi.node_of[g.edge(e).u];
        NodeId nv = phi.node_of[g.edge(e).v];
        if (nu == nv) {
            if (class_of[e] != -1)
                throw NotCactusError("2-cut edge " + std::to_string(e) + " internal to a node");
            continue;
        }
        if (class_of[e] == -1)
            throw NotCactusError("external edge " + std::to_string(e) + " lies in no 2-cut");
        model.cactus.add_edge(nu, nv, e, cycle_of_class[class_of[e]]);
    }

    // Structural sanity of the construction; a failure here is a bug.
    const Cactus& t = model.cactus;
    if (t.live_edge_count() > 2 * (t.live_node_count() - 1))
        throw NotCactusError("cactus size bound violated");
    std::unordered_map<int, std::vector<CactusEdgeId>> by_cycle;
    for (CactusEdgeId e : t.live_edges()) by_cycle[t.edge(e).cycle].push_back(e);
    for (auto& [cycle, edges] : by_cycle) {
        std::unordered_map<NodeId, int> deg;
        for (CactusEdgeId e : edges) {
            ++deg[t.edge(e).x];
            ++deg[t.edge(e).y];
        }
        if (deg.size() != edges.size()) throw NotCactusError("cycle edge/node count mismatch");
        for (auto& [node, d] : deg)
            if (d != 2) throw NotCactusError("cycle is not 2-regular at node " + std::to_string(node));
    }
    return model;
}

namespace {

std::vector<NodeId> cactus_side(const Cactus& t, CactusEdgeId a, CactusEdgeId b, NodeId start) {
    std::vector<char> seen(t.node_capacity(), 0);
    std::vector<NodeId> side, stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
        NodeId n = stack.back();
        stack.pop_back();
        side.push_back(n);
        for (CactusEdgeId e : t.incident(n)) {
            if (e == a || e == b) continue;
            NodeId w = t.edge(e).other(n);
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return side;
}

}  // namespace

void validate_representation(const CubicGraph& g, const Cactus& t, const Phi& phi, int cap) {
    auto gap = [](const std::string& detail) { throw RepresentationGapError(detail); };

    // phi is a total map onto live nodes with nonempty preimages.
    std::vector<int> count(t.node_capacity(), 0);
    for (VertexId v : g.live_vertices()) {
        NodeId x = phi.node_of.size() > static_cast<size_t>(v) ? phi.node_of[v] : -1;
        if (!t.node_alive(x)) gap("vertex " + std::to_string(v) + " maps to no live node");
        ++count[x];
    }
    for (NodeId x : t.live_nodes())
        if (count[x] == 0) gap("empty cactus node " + std::to_string(x));

    if (t.live_node_count() > 1 &&
        t.live_edge_count() > 2 * (t.live_node_count() - 1))
        gap("cactus size bound |E| <= 2(|V|-1) violated");

    // Bijection cactus edges <-> external graph edges.
    std::vector<CactusEdgeId> of_graph_edge(g.edge_capacity(), -1);
    for (CactusEdgeId ce : t.live_edges()) {
        const CactusEdge& ed = t.edge(ce);
        if (ed.cycle < 0) gap("cactus edge " + std::to_string(ce) + " lies on no cycle (bridge in model)");
        EdgeId e = ed.graph_edge;
        if (!g.edge_alive(e)) gap("cactus edge " + std::to_string(ce) + " maps to dead graph edge");
        NodeId nu = phi.node_of[g.edge(e).u];
        NodeId nv = phi.node_of[g.edge(e).v];
        if (!((nu == ed.x && nv == ed.y) || (nu == ed.y && nv == ed.x)))
            gap("cactus edge " + std::to_string(ce) + " endpoints disagree with phi");
        if (of_graph_edge[e] != -1) gap("graph edge " + std::to_string(e) + " covered twice");
        of_graph_edge[e] = ce;
    }
    for (EdgeId e : g.live_edges())
        if (phi.node_of[g.edge(e).u] != phi.node_of[g.edge(e).v] && of_graph_edge[e] == -1)
            gap("external graph edge " + std::to_string(e) + " has no cactus edge");

    // Cycles are genuine cycles.
    std::unordered_map<int, std::vector<CactusEdgeId>> by_cycle;
    for (CactusEdgeId e : t.live_edges()) by_cycle[t.edge(e).cycle].push_back(e);
    for (auto& [cycle, edges] : by_cycle) {
        std::unordered_map<NodeId, int> deg;
        for (CactusEdgeId e : edges) {
            ++deg[t.edge(e).x];
            ++deg[t.edge(e).y];
        }
        if (deg.size() != edges.size()) gap("cycle " + std::to_string(cycle) + " is not a closed cycle");
        for (auto& [node, d] : deg)
            if (d != 2) gap("cycle " + std::to_string(cycle) + " not 2-regular");
    }

    // Condition 1: every minimum cut of T (same-cycle edge pair) pulls back to
    // a 2-edge-cut of G whose crossing edges are exactly the pair's images.
    for (auto& [cycle, edges] : by_cycle)
        for (size_t i = 0; i < edges.size(); ++i)
            for (size_t j = i + 1; j < edges.size(); ++j) {
                CactusEdgeId a = edges[i], b = edges[j];
                auto side = cactus_side(t, a, b, t.edge(a).x);
                std::vector<char> in_side_v(g.vertex_capacity(), 0);
                for (NodeId nn : side)
                    for (VertexId v : phi.preimage[nn]) in_side_v[v] = 1;
                std::vector<EdgeId> crossing;
                for (EdgeId e : g.live_edges())
                    if (in_side_v[g.edge(e).u] != in_side_v[g.edge(e).v]) crossing.push_back(e);
                std::vector<EdgeId> expected{t.edge(a).graph_edge, t.edge(b).graph_edge};
                std::sort(expected.begin(), expected.end());
                if (crossing != expected)
                    gap("cactus cut {" + std::to_string(a) + "," + std::to_string(b) +
                        "} does not pull back to its 2-edge-cut");
                if (!is_2_edge_cut(g, expected[0], expected[1]))
                    gap("pullback of cactus cut {" + std::to_string(a) + "," + std::to_string(b) +
                        "} is not a 2-edge-cut of G");
            }

    // Condition 2: every 2-edge-cut of G appears as a same-cycle pair.
    if (g.live_edge_count() > cap) throw TooLargeError(cap);
    auto cuts = enumerate_2_edge_cuts(g);
    if (t.live_edge_count() == 0 && !cuts.empty())
        gap("edgeless model but G has 2-edge-cut {" + std::to_string(cuts[0][0]) + "," +
            std::to_string(cuts[0][1]) + "}");
    for (const CutPair& c : cuts) {
        CactusEdgeId a = of_graph_edge[c[0]];
        CactusEdgeId b = of_graph_edge[c[1]];
        if (a == -1 || b == -1 || t.edge(a).cycle != t.edge(b).cycle)
            gap("2-edge-cut {" + std::to_string(c[0]) + "," + std::to_string(c[1]) +
                "} is not represented");
    }
}

std::string cactus_to_dot(const Cactus& t, const Phi& phi) {
    std::ostringstream out;
    out << "graph cactus {\n";
    for (NodeId n : t.live_nodes()) {
        out << "  n" << n << " [label=\"" << n << ": {";
        bool first = true;
        if (static_cast<size_t>(n) < phi.preimage.size())
            for (VertexId v : phi.preimage[n]) {
                if (!first) out << ",";
                out << v;
                first = false;
            }
        out << "}\"];\n";
    }
    for (CactusEdgeId e : t.live_edges())
        out << "  n" << t.edge(e).x << " -- n" << t.edge(e).y << " [label=\"e" << t.edge(e).graph_edge
            << "/c" << t.edge(e).cycle << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace wspm
