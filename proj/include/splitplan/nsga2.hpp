#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "splitplan/problem.hpp"

namespace splitplan {

struct GaConfig {
    int population_size = 40;
    int generations = 50;
    double mutation_rate = 0.3;
    double crossover_rate = 0.9;
    std::uint64_t seed = 0;

    /// Throws ValidationError unless population_size >= 4 and even,
    /// generations >= 1 and both rates are in [0, 1].
    void validate() const;
};

struct Individual {
    SplitCandidate candidate;
    ObjectiveVector objectives;
    int rank = 0;
    double crowding = 0.0;
};

/// Final non-dominated front, deduplicated by l1 and sorted by l1.
struct ParetoSet {
    std::vector<Individual> members;

    [[nodiscard]] bool empty() const { return members.empty(); }
    [[nodiscard]] std::size_t size() const { return members.size(); }
};

/// Strict Pareto dominance: a <= b in every objective and a < b in at least one.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

/// Fast non-dominated sort. Returns fronts of indices into `population`;
/// front i holds exactly the individuals dominated only by fronts 0..i-1.
/// Also writes each individual's rank.
std::vector<std::vector<std::size_t>> non_dominated_sort(std::vector<Individual>& population);

/// Crowding distance over one front (indices into `population`). Boundary
/// individuals per objective get +inf, interior ones accumulate the
/// normalized gap between their neighbours; objectives with max == min are
/// skipped. Fronts of size <= 2 are all +inf.
void crowding_distance(std::vector<Individual>& population, const std::vector<std::size_t>& front);

using GenerationObserver =
    std::function<void(int generation, const std::vector<Individual>& population)>;

/// NSGA-II over split indices in [1, L-1]: binary-tournament mating
/// (rank, then crowding, then a coin flip), midpoint crossover on l1,
/// +-{1,2} step mutation, elitist mu+lambda survival by rank then crowding.
/// Candidates are ranked on raw objectives regardless of feasibility; the
/// decision-analysis stage filters on constraints. Deterministic per seed.
/// The observer, when set, sees the surviving population each generation.
ParetoSet evolve(const ProblemInstance& instance, const GaConfig& config,
                 const GenerationObserver& observer = {});

} // namespace splitplan
