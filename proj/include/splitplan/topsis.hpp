#pragma once

#include <cstddef>
#include <vector>

#include "splitplan/nsga2.hpp"
#include "splitplan/problem.hpp"

namespace splitplan {

enum class Normalization {
    vector, // divide each column by its Euclidean norm (default)
    minmax, // map each column onto [0, 1]
};

/// Column-normalize a row-major matrix. All entries must be finite and >= 0
/// (InvalidMatrix otherwise); a degenerate column (all zeros, or constant for
/// minmax) becomes all zeros.
std::vector<std::vector<double>> normalize_columns(const std::vector<std::vector<double>>& matrix,
                                                   Normalization normalization = Normalization::vector);

/// The full decision-analysis trail for one ranking: raw matrix, its
/// normalized form, the feasibility mask, per-column ideal over the feasible
/// rows, each feasible row's Euclidean distance to the ideal point, and the
/// winning row. Infeasible rows carry distance = +inf.
struct DecisionAnalysis {
    std::vector<std::vector<double>> raw;
    std::vector<std::vector<double>> normalized;
    std::vector<bool> feasible;
    std::vector<double> ideal;
    std::vector<double> distance;
    std::size_t best_row = 0;
    std::size_t feasible_rows = 0;
};

/// Rank rows of a cost-criteria matrix: normalize every row, drop infeasible
/// ones, take per-column minima as the ideal point and pick the feasible row
/// closest to it. Ties go to the lowest row index. Throws NoFeasibleSolution
/// when the mask leaves no rows.
DecisionAnalysis rank_rows(const std::vector<std::vector<double>>& matrix,
                           const std::vector<bool>& feasible_mask,
                           Normalization normalization = Normalization::vector);

/// The decision stage of the pipeline: build the decision matrix from a
/// Pareto set, rank it against the instance's constraints and return the
/// winning individual. Distance ties break toward the smaller l1.
Individual select_best(const ParetoSet& pareto, const ProblemInstance& instance,
                       Normalization normalization = Normalization::vector);

/// select_best plus the analysis trail, for reporting.
std::pair<Individual, DecisionAnalysis> select_best_traced(
    const ParetoSet& pareto, const ProblemInstance& instance,
    Normalization normalization = Normalization::vector);

} // namespace splitplan
