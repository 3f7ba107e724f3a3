#pragma once

#include <memory>
#include <string>

#include "wspm/graph.hpp"

namespace wspm {

enum class ConstraintKind { Any, MustContain, MustAvoid };

struct SolveOptions {
    long long budget = 50'000'000;  // node expansions before BudgetExceeded
    int enum_cap = 60;              // skip 3-cut precomputation past this many edges
};

/// Strategy interface for WSPM computation on 3-edge-connected cubic pieces.
/// Every backend's output must contain exactly one edge of each minimal
/// 3-edge-cut and satisfy the constraint.
class SolverBackend {
public:
    virtual ~SolverBackend() = default;
    virtual std::string name() const = 0;
    virtual Matching solve(const CubicGraph& g, ConstraintKind kind, EdgeId e,
                           const SolveOptions& opts) const = 0;
};

/// Exact backtracking: branch on the lowest uncovered vertex's incident edges
/// in EdgeId order, prune a branch as soon as some precomputed minimal 3-cut
/// would be met twice. Output is deterministic (first matching found).
class ExactBacktrackingBackend final : public SolverBackend {
public:
    std::string name() const override { return "exact"; }
    Matching solve(const CubicGraph& g, ConstraintKind kind, EdgeId e,
                   const SolveOptions& opts) const override;
};

/// Registry lookup by CLI name; throws BadParams on unknown backends.
const SolverBackend& solver_backend(const std::string& name);

Matching wspm_any(const CubicGraph& g, const SolveOptions& opts = {});
Matching wspm_with_edge(const CubicGraph& g, EdgeId e, const SolveOptions& opts = {});
/// Picks a neighbouring edge e' at an endpoint of e and forces e' in; since
/// that endpoint is then covered, e stays out.
Matching wspm_without_edge(const CubicGraph& g, EdgeId e, const SolveOptions& opts = {});

}  // namespace wspm
