#pragma once

#include <iosfwd>
#include <string>

#include "wspm/graph.hpp"

namespace wspm {

/// Canonical edge-list text format: first line "n m", then m lines "u v"
/// (0-based). Edge line i defines EdgeId i; parallel edges repeat.
CubicGraph load_graph(std::istream& in);
CubicGraph load_graph_file(const std::string& path);
void store_graph(const CubicGraph& g, std::ostream& out);

/// Matching format: one EdgeId per line, ascending.
Matching load_matching(std::istream& in, const CubicGraph& g);
Matching load_matching_file(const std::string& path, const CubicGraph& g);
void store_matching(const Matching& m, std::ostream& out);

}  // namespace wspm
