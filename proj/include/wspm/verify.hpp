#pragma once

#include <string>
#include <vector>

#include "wspm/graph.hpp"
#include "wspm/oracles.hpp"

namespace wspm {

/// Verdict of the brute-force well-spreadness check. Built exclusively on the
/// cut oracles; shares nothing with the solving pipeline beyond graph storage.
struct VerifyReport {
    bool perfect = false;
    std::vector<std::pair<CutTriple, int>> violations;        // |M ∩ C| != 1
    std::vector<std::pair<CutPair, int>> parity_violations;   // odd |M ∩ {e1,e2}|
    bool skipped = false;  // enumeration cap exceeded; verdict unavailable

    bool valid() const {
        return perfect && violations.empty() && parity_violations.empty() && !skipped;
    }
    std::string describe() const;
};

VerifyReport verify_wspm(const CubicGraph& g, const Matching& m, int cap = kDefaultEnumCap);

/// Number of perfect matchings that pass verify_wspm, by exhaustive
/// enumeration. Desk scale only.
long long count_wspms(const CubicGraph& g, int max_vertices = 20, int cap = kDefaultEnumCap);

/// All perfect matchings of the live graph, lexicographic by edge set.
std::vector<Matching> enumerate_perfect_matchings(const CubicGraph& g, int max_vertices = 20);

}  // namespace wspm
