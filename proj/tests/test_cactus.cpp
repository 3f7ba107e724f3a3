#include <algorithm>
#include <set>

#include "doctest.h"
#include "wspm/cactus.hpp"
#include "wspm/families.hpp"
#include "wspm/oracles.hpp"

using namespace wspm;

TEST_CASE("build_cactus on K4 is a single node without edges") {
    CubicGraph g = make_k4();
    CactusModel m = build_cactus(g);
    CHECK(m.cactus.live_node_count() == 1);
    CHECK(m.cactus.live_edge_count() == 0);
    CHECK(m.phi.preimage[0] == std::vector<VertexId>{0, 1, 2, 3});
    CHECK_NOTHROW(validate_representation(g, m.cactus, m.phi));
}

TEST_CASE("build_cactus on H8 is a 2-cycle of two nodes") {
    CubicGraph g = make_h8();
    CactusModel m = build_cactus(g);
    CHECK(m.cactus.live_node_count() == 2);
    CHECK(m.cactus.live_edge_count() == 2);
    auto edges = m.cactus.live_edges();
    CHECK(m.cactus.edge(edges[0]).cycle == m.cactus.edge(edges[1]).cycle);
    std::set<EdgeId> external{m.cactus.edge(edges[0]).graph_edge,
                              m.cactus.edge(edges[1]).graph_edge};
    CHECK(external == std::set<EdgeId>{10, 11});
    CHECK_NOTHROW(validate_representation(g, m.cactus, m.phi));
}

TEST_CASE("build_cactus on necklace(3) is a 3-cycle") {
    CubicGraph g = make_necklace(3);
    CactusModel m = build_cactus(g);
    CHECK(m.cactus.live_node_count() == 3);
    CHECK(m.cactus.live_edge_count() == 3);
    std::set<int> cycles;
    for (CactusEdgeId e : m.cactus.live_edges()) cycles.insert(m.cactus.edge(e).cycle);
    CHECK(cycles.size() == 1);
    CHECK_NOTHROW(validate_representation(g, m.cactus, m.phi));
}

TEST_CASE("build_cactus rejects bridges and disconnection") {
    CubicGraph disconnected(8);
    for (int base : {0, 4}) {
        disconnected.add_edge(base + 0, base + 1);
        disconnected.add_edge(base + 0, base + 1);
        disconnected.add_edge(base + 2, base + 3);
        disconnected.add_edge(base + 2, base + 3);
        disconnected.add_edge(base + 0, base + 2);  // not cubic; just connectivity test
    }
    CHECK_THROWS_AS(build_cactus(disconnected), Error);
}

TEST_CASE("validate_representation flags a corrupted model") {
    CubicGraph g = make_h8();
    CactusModel m = build_cactus(g);
    // Replace the 2-cycle by a single edge: the lone cactus edge is a bridge
    // of the model, not a min cut.
    auto edges = m.cactus.live_edges();
    m.cactus.kill_edge(edges[1]);
    CHECK_THROWS_AS(validate_representation(g, m.cactus, m.phi), RepresentationGapError);
}

TEST_CASE("validate_representation respects the enumeration cap") {
    CubicGraph g = make_necklace(12);  // 72 edges > 60
    CactusModel m = build_cactus(g);
    CHECK_THROWS_AS(validate_representation(g, m.cactus, m.phi), TooLargeError);
    CHECK_NOTHROW(validate_representation(g, m.cactus, m.phi, 100));
}

TEST_CASE("degree2_nodes") {
    CubicGraph h8 = make_h8();
    CactusModel m = build_cactus(h8);
    CHECK(m.cactus.degree2_nodes() == std::vector<NodeId>{0, 1});
    CHECK(m.cactus.lowest_degree2() == 0);

    CactusModel neck = build_cactus(make_necklace(3));
    CHECK(neck.cactus.degree2_nodes() == std::vector<NodeId>{0, 1, 2});

    CactusModel k4 = build_cactus(make_k4());
    CHECK(k4.cactus.degree2_nodes().empty());
    CHECK(k4.cactus.lowest_degree2() == -1);
}

TEST_CASE("pick_cut_at returns the external edges of a degree-2 node") {
    CubicGraph g = make_h8();
    CactusModel m = build_cactus(g);
    CutChoice c = pick_cut_at(m.cactus, 0);
    CHECK(c.a < c.b);
    std::set<EdgeId> picked{c.e1, c.e2};
    CHECK(picked == std::set<EdgeId>{10, 11});
    CHECK(is_2_edge_cut(g, c.e1, c.e2));

    CactusModel k4 = build_cactus(make_k4());
    CHECK_THROWS_AS(pick_cut_at(k4.cactus, 0), NotDegree2Error);
}

TEST_CASE("cactus_reduce on the H8 2-cycle isolates both nodes") {
    CactusModel m = build_cactus(make_h8());
    CutChoice c = pick_cut_at(m.cactus, 0);
    CactusReduceResult r = cactus_reduce(m.cactus, c.a, c.b);
    CHECK_FALSE(r.new_edge1.has_value());  // both replacement edges were loops
    CHECK_FALSE(r.new_edge2.has_value());
    CHECK(r.isolated == std::vector<NodeId>{0, 1});
    CHECK(m.cactus.live_edge_count() == 0);
    // Both survive as single-node edgeless cacti, one per 3EC piece.
    CHECK(m.cactus.live_node_count() == 2);
    CHECK(m.cactus.degree(0) == 0);
    CHECK(m.cactus.degree(1) == 0);
}

TEST_CASE("cactus_reduce on necklace(3) leaves a 2-cycle") {
    CactusModel m = build_cactus(make_necklace(3));
    CutChoice c = pick_cut_at(m.cactus, 0);
    CactusReduceResult r = cactus_reduce(m.cactus, c.a, c.b, -1, 99);
    CHECK(r.side1 == std::vector<NodeId>{0});
    CHECK(r.isolated == std::vector<NodeId>{0});  // T1 = single node, still alive
    CHECK(m.cactus.degree(0) == 0);
    CHECK(m.cactus.live_node_count() == 3);
    CHECK(m.cactus.live_edge_count() == 2);
    REQUIRE(r.new_edge2.has_value());
    CHECK(m.cactus.edge(*r.new_edge2).graph_edge == 99);
    // The surviving pair still forms a 2-cycle: same cycle id.
    auto edges = m.cactus.live_edges();
    CHECK(m.cactus.edge(edges[0]).cycle == m.cactus.edge(edges[1]).cycle);
    // Size bound holds after the update.
    CHECK(m.cactus.live_edge_count() <= 2 * (m.cactus.live_node_count() - 1));
}

TEST_CASE("cactus_reduce rejects edges on different cycles") {
    Cactus t;
    NodeId a = t.add_node(), b = t.add_node(), c = t.add_node();
    CactusEdgeId e1 = t.add_edge(a, b, 0, t.fresh_cycle());
    CactusEdgeId e2 = t.add_edge(b, c, 1, t.fresh_cycle());
    CHECK_THROWS_AS(cactus_reduce(t, e1, e2), NotCactusCutError);
    CHECK_THROWS_AS(cactus_reduce(t, e1, e1), NotCactusCutError);
}

TEST_CASE("cactus_reduce splits a big cycle and relabels the residual side") {
    // 4-cycle a-b-c-d; cut the two edges at a: side1 = {a}, rest closes into
    // a path b-c-d plus a new edge b-d, i.e. a 3-cycle.
    Cactus t;
    NodeId a = t.add_node(), b = t.add_node(), c = t.add_node(), d = t.add_node();
    int cyc = t.fresh_cycle();
    CactusEdgeId ab = t.add_edge(a, b, 0, cyc);
    t.add_edge(b, c, 1, cyc);
    t.add_edge(c, d, 2, cyc);
    CactusEdgeId da = t.add_edge(d, a, 3, cyc);
    CactusReduceResult r = cactus_reduce(t, ab, da, 7, 8);
    CHECK(r.side1 == std::vector<NodeId>{a});
    CHECK_FALSE(r.new_edge1.has_value());
    REQUIRE(r.new_edge2.has_value());
    CHECK(r.isolated == std::vector<NodeId>{a});
    CHECK(t.degree(a) == 0);
    CHECK(t.live_node_count() == 4);
    CHECK(t.live_edge_count() == 3);
    std::set<int> cycles;
    for (CactusEdgeId e : t.live_edges()) cycles.insert(t.edge(e).cycle);
    CHECK(cycles.size() == 1);  // survivors form one closed cycle again
}

TEST_CASE("fast_two_cut_classes matches the brute-force classes") {
    std::vector<CubicGraph> corpus{make_theta(),       make_k4(), make_k33(), make_petersen(),
                                   make_h8(),          make_necklace(3), make_necklace(5)};
    for (std::uint64_t s = 0; s < 10; ++s) corpus.push_back(make_random_cubic(12, s));
    for (const CubicGraph& g : corpus) {
        auto fast = fast_two_cut_classes(g);
        auto slow = edge_equivalence_classes(g);
        for (auto& c : fast) std::sort(c.begin(), c.end());
        std::sort(fast.begin(), fast.end());
        std::sort(slow.begin(), slow.end());
        CHECK(fast == slow);
    }
}

TEST_CASE("observation 1 size bound on built cacti") {
    for (int k : {2, 3, 4, 8}) {
        CactusModel m = build_cactus(make_necklace(k));
        CHECK(m.cactus.live_edge_count() <= 2 * (m.cactus.live_node_count() - 1));
    }
}

TEST_CASE("cactus_to_dot lists nodes and external edges") {
    CactusModel m = build_cactus(make_h8());
    std::string dot = cactus_to_dot(m.cactus, m.phi);
    CHECK(dot.find("graph cactus") != std::string::npos);
    CHECK(dot.find("e10") != std::string::npos);
    CHECK(dot.find("e11") != std::string::npos);
}
