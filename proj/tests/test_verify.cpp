#include "doctest.h"
#include "wspm/assembly.hpp"
#include "wspm/families.hpp"
#include "wspm/verify.hpp"

using namespace wspm;

TEST_CASE("verify accepts a single theta edge") {
    VerifyReport r = verify_wspm(make_theta(), {0});
    CHECK(r.perfect);
    CHECK(r.valid());
}

TEST_CASE("verify flags an imperfect matching") {
    VerifyReport r = verify_wspm(make_k4(), {0});
    CHECK_FALSE(r.perfect);
    CHECK_FALSE(r.valid());
    CHECK(r.describe().find("perfect") != std::string::npos);
}

TEST_CASE("verify flags a 2-cut parity violation") {
    // {e1=(0,4), (2,3)_A, (6,7)_B} covers six vertices and meets the 2-cut
    // {10,11} exactly once — parity forbids that for perfect matchings,
    // and the verifier reports both defects independently.
    VerifyReport r = verify_wspm(make_h8(), {10, 4, 9});
    CHECK_FALSE(r.perfect);
    REQUIRE(r.parity_violations.size() == 1);
    CHECK(r.parity_violations[0].first == CutPair{10, 11});
    CHECK(r.parity_violations[0].second == 1);
}

TEST_CASE("verify flags |M ∩ C| = 3") {
    VerifyReport r = verify_wspm(make_theta(), {0, 1, 2});
    CHECK_FALSE(r.valid());
    REQUIRE_FALSE(r.violations.empty());
    CHECK(r.violations[0].first == CutTriple{0, 1, 2});
    CHECK(r.violations[0].second == 3);
}

TEST_CASE("verify accepts the glued H8 matching") {
    CHECK(verify_wspm(make_h8(), {4, 9, 10, 11}).valid());
    CHECK(verify_wspm(make_h8(), wspm::wspm(make_h8())).valid());
}

TEST_CASE("verify reports skipped past the cap, never silently passes") {
    VerifyReport r = verify_wspm(make_k4(), {0, 5}, /*cap=*/5);  // K4 has 6 edges
    CHECK(r.skipped);
    CHECK_FALSE(r.valid());
    CHECK(r.perfect);
}

TEST_CASE("enumerate_perfect_matchings") {
    CHECK(enumerate_perfect_matchings(make_theta()).size() == 3);
    CHECK(enumerate_perfect_matchings(make_k4()).size() == 3);
    CHECK(enumerate_perfect_matchings(make_petersen()).size() == 6);
    // H8: 2x2 per-side combinations avoiding the cut, plus the one using it.
    CHECK(enumerate_perfect_matchings(make_h8()).size() == 5);
    CHECK_THROWS_AS(enumerate_perfect_matchings(make_necklace(6), 20), TooLargeError);
}

TEST_CASE("count_wspms spot values") {
    CHECK(count_wspms(make_theta()) == 3);
    CHECK(count_wspms(make_k4()) == 3);
    CHECK(count_wspms(make_petersen()) == 6);
    CHECK(count_wspms(make_h8()) == 5);
    CHECK(count_wspms(make_k33()) >= 1);
}
