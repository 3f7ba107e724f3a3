#include <set>

#include "doctest.h"
#include "wspm/families.hpp"
#include "wspm/solver.hpp"
#include "wspm/verify.hpp"

using namespace wspm;

TEST_CASE("wspm_any on theta is a single edge") {
    Matching m = wspm_any(make_theta());
    CHECK(m.size() == 1);
    CHECK(verify_wspm(make_theta(), m).valid());
}

TEST_CASE("wspm_any on K4 is one of the three perfect matchings") {
    Matching m = wspm_any(make_k4());
    std::set<Matching> pms{{0, 5}, {1, 4}, {2, 3}};
    CHECK(pms.count(m) == 1);
    CHECK(verify_wspm(make_k4(), m).valid());
}

TEST_CASE("wspm_any on petersen and k33 verifies") {
    for (auto g : {make_petersen(), make_k33()}) {
        Matching m = wspm_any(g);
        CHECK(verify_wspm(g, m).valid());
    }
}

TEST_CASE("wspm_with_edge honors the prescription") {
    CHECK(wspm_with_edge(make_theta(), 1) == Matching{1});
    CHECK(wspm_with_edge(make_k4(), 0) == Matching{0, 5});  // unique PM containing (0,1)
    CubicGraph pet = make_petersen();
    for (EdgeId e : pet.live_edges()) {
        Matching m = wspm_with_edge(pet, e);
        CHECK(m.count(e) == 1);
        CHECK(verify_wspm(pet, m).valid());
    }
}

TEST_CASE("wspm_without_edge avoids the edge") {
    Matching theta_m = wspm_without_edge(make_theta(), 0);
    CHECK(theta_m.count(0) == 0);
    CHECK(verify_wspm(make_theta(), theta_m).valid());

    Matching k4_m = wspm_without_edge(make_k4(), 0);
    CHECK((k4_m == Matching{1, 4} || k4_m == Matching{2, 3}));
}

TEST_CASE("prescribed variants work on a parallel-edge piece") {
    // BLOCK plus the edge (0,1) closing it: a K4 with edge ids relabelled;
    // then a doubled (2,3) variant exercises parallel edges.
    CubicGraph g = make_block();
    g.add_edge(0, 1);  // EdgeId 5
    for (EdgeId e : g.live_edges()) {
        Matching with = wspm_with_edge(g, e);
        CHECK(with.count(e) == 1);
        CHECK(verify_wspm(g, with).valid());
        Matching without = wspm_without_edge(g, e);
        CHECK(without.count(e) == 0);
        CHECK(verify_wspm(g, without).valid());
    }
}

TEST_CASE("solver output is deterministic") {
    CHECK(wspm_any(make_petersen()) == wspm_any(make_petersen()));
    CHECK(wspm_with_edge(make_k33(), 4) == wspm_with_edge(make_k33(), 4));
}

TEST_CASE("solver rejects pieces that are not 3-edge-connected cubic") {
    CHECK_THROWS_AS(wspm_any(make_h8()), Error);      // has a 2-cut
    CHECK_THROWS_AS(wspm_any(make_block()), Error);   // not cubic
}

TEST_CASE("budget exhaustion is distinct from NoWSPM") {
    SolveOptions opts;
    opts.budget = 1;
    CHECK_THROWS_AS(wspm_any(make_petersen(), opts), BudgetExceededError);
}

TEST_CASE("backend registry") {
    CHECK(solver_backend("exact").name() == "exact");
    CHECK_THROWS_AS(solver_backend("gs25"), BadParamsError);
}

TEST_CASE("well-spreadness on every edge of small 3EC graphs") {
    for (auto g : {make_theta(), make_k4(), make_k33(), make_petersen()}) {
        for (EdgeId e : g.live_edges()) {
            CHECK(verify_wspm(g, wspm_with_edge(g, e)).valid());
            CHECK(verify_wspm(g, wspm_without_edge(g, e)).valid());
        }
    }
}
