#include "wspm/families.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

#include "wspm/oracles.hpp"

namespace wspm {

CubicGraph make_theta() { return CubicGraph::build(2, {{0, 1}, {0, 1}, {0, 1}}); }

CubicGraph make_k4() {
    return CubicGraph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

CubicGraph make_k33() {
    return CubicGraph::build(
        6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

CubicGraph make_petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});        // outer cycle
    for (int i = 0; i < 5; ++i) edges.push_back({i, i + 5});              // spokes
    for (int i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5});  // pentagram
    return CubicGraph::build(10, edges);
}

namespace {

// K4 minus edge (0,1), shifted by `base`; vertices base+0 and base+1 end up
// with degree 2.
void add_block(std::vector<std::pair<int, int>>& edges, int base) {
    edges.push_back({base + 0, base + 2});
    edges.push_back({base + 0, base + 3});
    edges.push_back({base + 1, base + 2});
    edges.push_back({base + 1, base + 3});
    edges.push_back({base + 2, base + 3});
}

}  // namespace

CubicGraph make_block() {
    std::vector<std::pair<int, int>> edges;
    add_block(edges, 0);
    return CubicGraph::build(4, edges);
}

CubicGraph make_h8() {
    std::vector<std::pair<int, int>> edges;
    add_block(edges, 0);
    add_block(edges, 4);
    edges.push_back({0, 4});
    edges.push_back({1, 5});
    return CubicGraph::build(8, edges);
}

CubicGraph make_necklace(int k) {
    if (k < 2) throw BadParamsError("necklace needs k >= 2 blocks");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) add_block(edges, 4 * i);
    for (int i = 0; i < k; ++i) edges.push_back({4 * i + 1, 4 * ((i + 1) % k)});
    return CubicGraph::build(4 * k, edges);
}

CubicGraph make_random_cubic(int n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0) throw BadParamsError("random cubic graphs need even n >= 4");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(3 * n);
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < 3; ++i) stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);

        bool loop = false;
        std::vector<std::pair<int, int>> edges;
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            if (stubs[i] == stubs[i + 1]) {
                loop = true;
                break;
            }
            edges.push_back({stubs[i], stubs[i + 1]});
        }
        if (loop) continue;
        std::sort(edges.begin(), edges.end());

        CubicGraph g = CubicGraph::build(n, edges);
        if (!g.is_connected() || !is_bridgeless(g)) continue;
        return g;
    }
    throw BadParamsError("rejection sampling failed to find a bridgeless cubic graph");
}

CubicGraph gen_family(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw BadParamsError("empty family spec");

    const std::string& name = parts[0];
    auto arg = [&](size_t i) -> long long {
        if (parts.size() <= i) throw BadParamsError("family '" + name + "' needs more parameters");
        try {
            return std::stoll(parts[i]);
        } catch (const std::exception&) {
            throw BadParamsError("bad parameter '" + parts[i] + "' for family '" + name + "'");
        }
    };

    if (name == "theta") return make_theta();
    if (name == "k4") return make_k4();
    if (name == "k33") return make_k33();
    if (name == "petersen") return make_petersen();
    if (name == "block") return make_block();
    if (name == "h8") return make_h8();
    if (name == "necklace") return make_necklace(static_cast<int>(arg(1)));
    if (name == "random")
        return make_random_cubic(static_cast<int>(arg(1)),
                                 parts.size() > 2 ? static_cast<std::uint64_t>(arg(2)) : 0);
    throw BadParamsError("unknown family '" + name + "'");
}

}  // namespace wspm
