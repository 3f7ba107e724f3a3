#include "wspm/verify.hpp"

#include <algorithm>
#include <sstream>

namespace wspm {

std::string VerifyReport::describe() const {
    std::ostringstream out;
    if (valid()) {
        out << "valid well-spread perfect matching\n";
        return out.str();
    }
    if (skipped) out << "verification skipped: enumeration cap exceeded\n";
    if (!perfect) out << "not a perfect matching\n";
    for (const auto& [cut, size] : violations)
        out << "3-edge-cut {" << cut[0] << "," << cut[1] << "," << cut[2] << "} met " << size
            << " times (want 1)\n";
    for (const auto& [cut, size] : parity_violations)
        out << "2-edge-cut {" << cut[0] << "," << cut[1] << "} met " << size
            << " times (want 0 or 2)\n";
    return out.str();
}

VerifyReport verify_wspm(const CubicGraph& g, const Matching& m, int cap) {
    VerifyReport report;
    report.perfect = is_perfect_matching(g, m);

    auto in_m = [&](EdgeId e) { return m.count(e) > 0; };
    if (g.live_edge_count() > cap) {
        report.skipped = true;
        return report;
    }
    for (const CutTriple& c : enumerate_3_edge_cuts(g, cap)) {
        int hit = static_cast<int>(in_m(c[0])) + in_m(c[1]) + in_m(c[2]);
        if (hit != 1) report.violations.push_back({c, hit});
    }
    for (const CutPair& c : enumerate_2_edge_cuts(g)) {
        int hit = static_cast<int>(in_m(c[0])) + in_m(c[1]);
        if (hit % 2 != 0) report.parity_violations.push_back({c, hit});
    }
    return report;
}

namespace {

void enumerate_pms(const CubicGraph& g, VertexId from, std::vector<char>& covered,
                   std::vector<EdgeId>& chosen, std::vector<Matching>& out) {
    VertexId v = from;
    while (v < g.vertex_capacity() && (!g.vertex_alive(v) || covered[v])) ++v;
    if (v >= g.vertex_capacity()) {
        out.emplace_back(chosen.begin(), chosen.end());
        return;
    }
    std::vector<EdgeId> options(g.incident(v).begin(), g.incident(v).end());
    std::sort(options.begin(), options.end());
    for (EdgeId e : options) {
        VertexId w = g.edge(e).other(v);
        if (covered[w]) continue;
        covered[v] = covered[w] = 1;
        chosen.push_back(e);
        enumerate_pms(g, v + 1, covered, chosen, out);
        chosen.pop_back();
        covered[v] = covered[w] = 0;
    }
}

}  // namespace

std::vector<Matching> enumerate_perfect_matchings(const CubicGraph& g, int max_vertices) {
    if (g.live_vertex_count() > max_vertices) throw TooLargeError(max_vertices);
    std::vector<char> covered(g.vertex_capacity(), 0);
    std::vector<EdgeId> chosen;
    std::vector<Matching> out;
    enumerate_pms(g, 0, covered, chosen, out);
    return out;
}

long long count_wspms(const CubicGraph& g, int max_vertices, int cap) {
    long long count = 0;
    for (const Matching& m : enumerate_perfect_matchings(g, max_vertices))
        if (verify_wspm(g, m, cap).valid()) ++count;
    return count;
}

}  // namespace wspm
