#pragma once

#include <vector>

#include "splitplan/problem.hpp"
#include "splitplan/topsis.hpp"

namespace splitplan {

struct SweepEntry {
    SplitCandidate candidate;
    ObjectiveVector objectives;
    bool feasible = false;
};

/// Every proper split in order: one entry per l1 in [1, L-1].
std::vector<SweepEntry> enumerate_splits(const ProblemInstance& instance);

struct TrueSelection {
    /// Exact Pareto set over the feasible splits, ascending l1.
    std::vector<SweepEntry> pareto;
    SplitCandidate choice;
    ObjectiveVector choice_objectives;
};

/// Ground truth by brute force: the split space has at most L-1 points, so
/// the Pareto set falls out of pairwise dominance and the decision stage runs
/// on it exactly. Throws NoFeasibleSolution when no split is feasible.
TrueSelection true_selection(const ProblemInstance& instance,
                             Normalization normalization = Normalization::vector);

} // namespace splitplan
