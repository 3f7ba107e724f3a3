#pragma once

#include <functional>

#include "wspm/reduction.hpp"
#include "wspm/solver.hpp"

namespace wspm {

enum class GlueCase { BothAvoid, BothContain };

/// Which gluing formula applies; throws AgreementViolated when the two
/// matchings disagree on e1'/e2' membership.
GlueCase classify_glue(const Matching& m1, const Matching& m2, const ReductionRecord& r);

/// BothAvoid:   M1 ∪ M2
/// BothContain: (M1 \ {e1'}) ∪ (M2 \ {e2'}) ∪ {e1, e2}
/// M1 and M2 live in disjoint edge-ID sets, so this is O(1) set surgery.
Matching glue(const Matching& m1, const Matching& m2, const ReductionRecord& r);

struct BackwardHooks {
    /// Called per record with the running matching before the glue, the piece
    /// matching (global IDs), and the result.
    std::function<void(const ReductionRecord&, const Matching& before, const Matching& piece_m,
                       const Matching& after)>
        after_glue;
};

/// Part 2 of the algorithm: walk the records in reverse, solve each separated
/// piece with the prescribed-edge variant chosen by e1' ∈ M, and glue.
Matching backward_phase(const ReductionPlan& plan, Matching seed, const SolveOptions& opts = {},
                        const BackwardHooks& hooks = {});

struct WspmOptions {
    bool verify = false;  // run the brute-force verifier on the result
    SolveOptions solve;
    ForwardHooks forward;
    BackwardHooks backward;
};

/// Well-spread perfect matching of a bridgeless cubic graph. A disconnected
/// input is solved per component and the matchings concatenated.
Matching wspm(const CubicGraph& g, const WspmOptions& opts = {});

}  // namespace wspm
