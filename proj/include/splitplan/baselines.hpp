#pragma once

#include <cstdint>
#include <string_view>

#include "splitplan/cost_model.hpp"
#include "splitplan/problem.hpp"

namespace splitplan {

/// Competing split strategies used for side-by-side comparison.
enum class BaselineKind {
    lbo, // latency-based: argmin f1 over proper splits
    ebo, // energy-based: argmin f2 over proper splits
    cos, // everything on the client
    coc, // everything on the server
    rs,  // seeded uniform random split
};

std::string_view to_string(BaselineKind kind);

struct BaselineResult {
    BaselineKind kind = BaselineKind::lbo;
    int l1 = 0;
    ObjectiveVector objectives;
    CostBreakdown breakdown;
    /// COS and COC place zero layers on one side, which sits outside the
    /// proper split set (constraints 3-4); flagged false for those two.
    bool within_split_set = true;
};

/// Runs one baseline. LBO/EBO enumerate the split range and break ties toward
/// the smaller l1. COS zeroes every transfer and server term; COC zeroes the
/// client terms and uploads the raw input tensor instead of an intermediate.
/// RS draws l1 uniformly from [1, L-1] using the seed.
BaselineResult run_baseline(BaselineKind kind, const ProblemInstance& instance,
                            std::uint64_t seed = 0);

} // namespace splitplan
