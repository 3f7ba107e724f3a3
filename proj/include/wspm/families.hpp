#pragma once

#include <cstdint>
#include <string>

#include "wspm/graph.hpp"

namespace wspm {

/// Canonical test graphs. All are bridgeless cubic except BLOCK (K4 minus an
/// edge; its two degree-2 vertices are the attachment points used by H8 and
/// the necklaces).
CubicGraph make_theta();
CubicGraph make_k4();
CubicGraph make_k33();
CubicGraph make_petersen();
CubicGraph make_block();
CubicGraph make_h8();
CubicGraph make_necklace(int k);  // k >= 2 blocks in a ring

/// Rejection-sampled bridgeless cubic multigraph on n vertices (pairing
/// model; loops, bridges and disconnection rejected). Deterministic per seed.
/// Not a uniform sampler.
CubicGraph make_random_cubic(int n, std::uint64_t seed);

/// Parse family specs like "theta", "necklace:5", "random:10:7".
CubicGraph gen_family(const std::string& spec);

}  // namespace wspm
