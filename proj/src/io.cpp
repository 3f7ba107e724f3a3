#include "wspm/io.hpp"

#include <fstream>
#include <sstream>

namespace wspm {

namespace {

// Whole-line integer parse; rejects trailing garbage.
bool parse_ints(const std::string& line, std::vector<long long>& out) {
    out.clear();
    std::istringstream ss(line);
    long long v;
    while (ss >> v) out.push_back(v);
    std::string rest;
    ss.clear();
    return !(ss >> rest);
}

}  // namespace

CubicGraph load_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::vector<long long> nums;

    if (!std::getline(in, line)) throw ParseError(0, "missing header line");
    ++lineno;
    if (!parse_ints(line, nums) || nums.size() != 2)
        throw ParseError(lineno, "expected header 'n m'");
    long long n = nums[0], m = nums[1];
    if (n <= 0) throw ParseError(lineno, "vertex count must be positive");
    if (m < 0) throw ParseError(lineno, "negative edge count");

    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < m; ++i) {
        if (!std::getline(in, line)) throw ParseError(lineno + 1, "missing edge line");
        ++lineno;
        if (!parse_ints(line, nums) || nums.size() != 2)
            throw ParseError(lineno, "expected edge line 'u v'");
        if (nums[0] < 0 || nums[0] >= n || nums[1] < 0 || nums[1] >= n)
            throw ParseError(lineno, "endpoint out of range");
        edges.push_back({static_cast<int>(nums[0]), static_cast<int>(nums[1])});
    }
    try {
        return CubicGraph::build(static_cast<int>(n), edges);
    } catch (const InputError& err) {
        throw ParseError(lineno, err.what());
    }
}

CubicGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return load_graph(in);
}

void store_graph(const CubicGraph& g, std::ostream& out) {
    out << g.vertex_capacity() << " " << g.live_edge_count() << "\n";
    for (EdgeId e : g.live_edges()) out << g.edge(e).u << " " << g.edge(e).v << "\n";
}

Matching load_matching(std::istream& in, const CubicGraph& g) {
    Matching m;
    std::string line;
    int lineno = 0;
    std::vector<long long> nums;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (!parse_ints(line, nums) || nums.size() != 1)
            throw ParseError(lineno, "expected one EdgeId per line");
        if (nums[0] < 0 || nums[0] >= g.edge_capacity() || !g.edge_alive(static_cast<EdgeId>(nums[0])))
            throw ParseError(lineno, "unknown or dead EdgeId " + std::to_string(nums[0]));
        m.insert(static_cast<EdgeId>(nums[0]));
    }
    return m;
}

Matching load_matching_file(const std::string& path, const CubicGraph& g) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return load_matching(in, g);
}

void store_matching(const Matching& m, std::ostream& out) {
    for (EdgeId e : m) out << e << "\n";
}

}  // namespace wspm
