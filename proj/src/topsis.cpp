#include "splitplan/topsis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace splitplan {

namespace {

void check_entries(const std::vector<std::vector<double>>& matrix) {
    if (matrix.empty()) throw InvalidMatrix("decision matrix has no rows");
    const std::size_t cols = matrix.front().size();
    if (cols == 0) throw InvalidMatrix("decision matrix has no columns");
    for (const auto& row : matrix) {
        if (row.size() != cols) throw InvalidMatrix("ragged decision matrix");
        for (double v : row) {
            if (!std::isfinite(v)) throw InvalidMatrix("non-finite decision matrix entry");
            if (v < 0.0) throw InvalidMatrix("negative decision matrix entry");
        }
    }
}

} // namespace

std::vector<std::vector<double>> normalize_columns(const std::vector<std::vector<double>>& matrix,
                                                   Normalization normalization) {
    check_entries(matrix);
    const std::size_t rows = matrix.size();
    const std::size_t cols = matrix.front().size();

    auto out = matrix;
    for (std::size_t j = 0; j < cols; ++j) {
        if (normalization == Normalization::vector) {
            double sum_sq = 0.0;
            for (std::size_t i = 0; i < rows; ++i) sum_sq += matrix[i][j] * matrix[i][j];
            const double norm = std::sqrt(sum_sq);
            if (norm == 0.0) continue; // all-zero column stays as zeros
            for (std::size_t i = 0; i < rows; ++i) out[i][j] = matrix[i][j] / norm;
        } else {
            double lo = matrix[0][j];
            double hi = matrix[0][j];
            for (std::size_t i = 1; i < rows; ++i) {
                lo = std::min(lo, matrix[i][j]);
                hi = std::max(hi, matrix[i][j]);
            }
            if (hi == lo) {
                for (std::size_t i = 0; i < rows; ++i) out[i][j] = 0.0;
                continue;
            }
            for (std::size_t i = 0; i < rows; ++i) out[i][j] = (matrix[i][j] - lo) / (hi - lo);
        }
    }
    return out;
}

DecisionAnalysis rank_rows(const std::vector<std::vector<double>>& matrix,
                           const std::vector<bool>& feasible_mask, Normalization normalization) {
    DecisionAnalysis analysis;
    analysis.raw = matrix;
    analysis.normalized = normalize_columns(matrix, normalization);
    analysis.feasible = feasible_mask;
    if (feasible_mask.size() != matrix.size())
        throw InvalidMatrix("feasibility mask size does not match row count");

    const std::size_t rows = matrix.size();
    const std::size_t cols = matrix.front().size();
    analysis.feasible_rows =
        static_cast<std::size_t>(std::count(feasible_mask.begin(), feasible_mask.end(), true));
    if (analysis.feasible_rows == 0)
        throw NoFeasibleSolution("no row satisfies the constraints");

    analysis.ideal.assign(cols, std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < rows; ++i) {
        if (!feasible_mask[i]) continue;
        for (std::size_t j = 0; j < cols; ++j)
            analysis.ideal[j] = std::min(analysis.ideal[j], analysis.normalized[i][j]);
    }

    analysis.distance.assign(rows, std::numeric_limits<double>::infinity());
    bool have_best = false;
    for (std::size_t i = 0; i < rows; ++i) {
        if (!feasible_mask[i]) continue;
        double sum_sq = 0.0;
        for (std::size_t j = 0; j < cols; ++j) {
            const double gap = analysis.normalized[i][j] - analysis.ideal[j];
            sum_sq += gap * gap;
        }
        analysis.distance[i] = std::sqrt(sum_sq);
        if (!have_best || analysis.distance[i] < analysis.distance[analysis.best_row]) {
            analysis.best_row = i;
            have_best = true;
        }
    }
    return analysis;
}

std::pair<Individual, DecisionAnalysis> select_best_traced(const ParetoSet& pareto,
                                                           const ProblemInstance& instance,
                                                           Normalization normalization) {
    if (pareto.empty()) throw NoFeasibleSolution("empty Pareto set");

    // Rows ordered by ascending l1 so the lowest-index tie-break lands on the
    // smaller client share.
    auto members = pareto.members;
    std::stable_sort(members.begin(), members.end(), [](const Individual& a, const Individual& b) {
        return a.candidate.l1 < b.candidate.l1;
    });

    std::vector<std::vector<double>> matrix;
    std::vector<bool> mask;
    matrix.reserve(members.size());
    mask.reserve(members.size());
    for (const Individual& member : members) {
        matrix.push_back({member.objectives.f1, member.objectives.f2, member.objectives.f3});
        mask.push_back(check_feasible(instance, member.candidate).ok);
    }

    DecisionAnalysis analysis = rank_rows(matrix, mask, normalization);
    return {members[analysis.best_row], std::move(analysis)};
}

Individual select_best(const ParetoSet& pareto, const ProblemInstance& instance,
                       Normalization normalization) {
    return select_best_traced(pareto, instance, normalization).first;
}

} // namespace splitplan
