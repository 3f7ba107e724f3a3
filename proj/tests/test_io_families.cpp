#include <sstream>

#include "doctest.h"
#include "wspm/bench.hpp"
#include "wspm/families.hpp"
#include "wspm/io.hpp"
#include "wspm/oracles.hpp"

using namespace wspm;

namespace {

std::string dump(const CubicGraph& g) {
    std::ostringstream out;
    store_graph(g, out);
    return out.str();
}

}  // namespace

TEST_CASE("store/load identity on petersen") {
    std::string text = dump(make_petersen());
    std::istringstream in(text);
    CubicGraph g = load_graph(in);
    CHECK(dump(g) == text);  // bit-exact round trip
}

TEST_CASE("round trip preserves parallel edges") {
    std::string text = dump(make_theta());
    std::istringstream in(text);
    CHECK(load_graph(in).live_edge_count() == 3);
}

TEST_CASE("load_graph rejects malformed input with line numbers") {
    auto expect_parse_error = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            load_graph(in);
            FAIL("expected ParseError for: ", text);
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_parse_error("", 0);                    // missing header
    expect_parse_error("2\n", 1);                 // header needs two fields
    expect_parse_error("2 1\na b\n", 2);          // non-numeric edge line
    expect_parse_error("2 1\n0 1 junk\n", 2);     // trailing garbage
    expect_parse_error("2 2\n0 1\n", 3);          // missing edge line (reported where expected)
    expect_parse_error("2 1\n0 2\n", 2);          // endpoint out of range
    expect_parse_error("2 1\n0 0\n", 2);          // loop
    expect_parse_error("0 0\n", 1);               // empty graph
}

TEST_CASE("matching file round trip and errors") {
    CubicGraph g = make_k4();
    std::ostringstream out;
    store_matching({0, 5}, out);
    CHECK(out.str() == "0\n5\n");
    std::istringstream in(out.str());
    CHECK(load_matching(in, g) == Matching{0, 5});

    std::istringstream unknown("17\n");
    CHECK_THROWS_AS(load_matching(unknown, g), ParseError);
    g.kill_edge(0);
    std::istringstream dead("0\n");
    CHECK_THROWS_AS(load_matching(dead, g), ParseError);
}

TEST_CASE("family generators produce the documented shapes") {
    CubicGraph theta = make_theta();
    CHECK(theta.live_vertex_count() == 2);
    CHECK(theta.live_edge_count() == 3);

    CubicGraph neck = make_necklace(3);
    CHECK(neck.live_vertex_count() == 12);
    CHECK(neck.live_edge_count() == 18);

    CubicGraph block = make_block();
    CHECK(block.degree(0) == 2);
    CHECK(block.degree(1) == 2);
    CHECK(block.degree(2) == 3);
}

TEST_CASE("every cubic family member is bridgeless cubic") {
    for (const char* spec : {"theta", "k4", "k33", "petersen", "h8", "necklace:2",
                             "necklace:7", "random:10:7", "random:14:1"}) {
        CubicGraph g = gen_family(spec);
        CHECK_NOTHROW(g.require_cubic());
        CHECK(g.is_connected());
        CHECK(is_bridgeless(g));
    }
}

TEST_CASE("random generation is deterministic per seed") {
    CHECK(dump(make_random_cubic(12, 42)) == dump(make_random_cubic(12, 42)));
    CHECK(dump(make_random_cubic(12, 42)) != dump(make_random_cubic(12, 43)));
}

TEST_CASE("generator parameter validation") {
    CHECK_THROWS_AS(make_necklace(1), BadParamsError);
    CHECK_THROWS_AS(make_random_cubic(7, 0), BadParamsError);
    CHECK_THROWS_AS(make_random_cubic(2, 0), BadParamsError);
    CHECK_THROWS_AS(gen_family("necklace"), BadParamsError);        // missing arg
    CHECK_THROWS_AS(gen_family("necklace:x"), BadParamsError);      // bad arg
    CHECK_THROWS_AS(gen_family("nonesuch"), BadParamsError);
    CHECK_THROWS_AS(gen_family(""), BadParamsError);
}

TEST_CASE("run_bench shapes and parameter checks") {
    auto records = run_bench(2, 8);
    REQUIRE(records.size() == 3);  // k = 2, 4, 8
    for (const BenchRecord& r : records) {
        CHECK(r.n == 4 * r.k);
        CHECK(r.piece_count == r.k);
        CHECK(r.ops > 0);
    }
    CHECK(run_bench(4, 2).empty());
    CHECK_THROWS_AS(run_bench(1, 8), BadParamsError);
}

TEST_CASE("bench csv includes per-vertex ops") {
    std::ostringstream out;
    write_bench_csv(run_bench(2, 2), out);
    CHECK(out.str().find("ops_per_vertex") != std::string::npos);
    CHECK(out.str().find("2,8,") == out.str().find('\n') + 1);
}
