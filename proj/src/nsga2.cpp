#include "splitplan/nsga2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "splitplan/rng.hpp"

namespace splitplan {

void GaConfig::validate() const {
    if (population_size < 4 || population_size % 2 != 0)
        throw ValidationError("population size must be even and >= 4, got " +
                              std::to_string(population_size));
    if (generations < 1)
        throw ValidationError("generations must be >= 1, got " + std::to_string(generations));
    if (mutation_rate < 0.0 || mutation_rate > 1.0)
        throw ValidationError("mutation rate must be in [0, 1]");
    if (crossover_rate < 0.0 || crossover_rate > 1.0)
        throw ValidationError("crossover rate must be in [0, 1]");
}

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    bool strictly_better = false;
    for (int j = 0; j < kObjectiveCount; ++j) {
        const double x = objective(a, j);
        const double y = objective(b, j);
        if (x > y) return false;
        if (x < y) strictly_better = true;
    }
    return strictly_better;
}

std::vector<std::vector<std::size_t>> non_dominated_sort(std::vector<Individual>& population) {
    const std::size_t n = population.size();
    std::vector<std::vector<std::size_t>> dominated_by(n); // individuals i dominates
    std::vector<int> domination_count(n, 0);               // how many dominate i

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dominates(population[i].objectives, population[j].objectives)) {
                dominated_by[i].push_back(j);
                ++domination_count[j];
            } else if (dominates(population[j].objectives, population[i].objectives)) {
                dominated_by[j].push_back(i);
                ++domination_count[i];
            }
        }
    }

    std::vector<std::vector<std::size_t>> fronts;
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i)
        if (domination_count[i] == 0) current.push_back(i);

    while (!current.empty()) {
        for (std::size_t i : current) population[i].rank = static_cast<int>(fronts.size());
        std::vector<std::size_t> next;
        for (std::size_t i : current) {
            for (std::size_t j : dominated_by[i]) {
                if (--domination_count[j] == 0) next.push_back(j);
            }
        }
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

void crowding_distance(std::vector<Individual>& population, const std::vector<std::size_t>& front) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (front.size() <= 2) {
        for (std::size_t i : front) population[i].crowding = inf;
        return;
    }

    for (std::size_t i : front) population[i].crowding = 0.0;

    std::vector<std::size_t> order(front);
    for (int j = 0; j < kObjectiveCount; ++j) {
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return objective(population[a].objectives, j) < objective(population[b].objectives, j);
        });
        const double lo = objective(population[order.front()].objectives, j);
        const double hi = objective(population[order.back()].objectives, j);
        population[order.front()].crowding = inf;
        population[order.back()].crowding = inf;
        if (hi == lo) continue; // degenerate column: no spread information
        for (std::size_t pos = 1; pos + 1 < order.size(); ++pos) {
            const double prev = objective(population[order[pos - 1]].objectives, j);
            const double next = objective(population[order[pos + 1]].objectives, j);
            population[order[pos]].crowding += (next - prev) / (hi - lo);
        }
    }
}

namespace {

void rank_population(std::vector<Individual>& population) {
    const auto fronts = non_dominated_sort(population);
    for (const auto& front : fronts) crowding_distance(population, front);
}

// Rank first, wider crowding second, coin flip on a full tie.
std::size_t tournament(const std::vector<Individual>& population, Rng& rng) {
    const auto a = static_cast<std::size_t>(rng.next_int(0, static_cast<std::int64_t>(population.size()) - 1));
    const auto b = static_cast<std::size_t>(rng.next_int(0, static_cast<std::int64_t>(population.size()) - 1));
    if (population[a].rank != population[b].rank)
        return population[a].rank < population[b].rank ? a : b;
    if (population[a].crowding != population[b].crowding)
        return population[a].crowding > population[b].crowding ? a : b;
    return rng.next_bool() ? a : b;
}

} // namespace

ParetoSet evolve(const ProblemInstance& instance, const GaConfig& config,
                 const GenerationObserver& observer) {
    config.validate();
    const int total = instance.total_layers();
    const int lo = 1;
    const int hi = total - 1;

    // The decision variable is one bounded integer, so every objective vector
    // is precomputable. Keeps the engine deterministic and evaluation O(1).
    std::vector<ObjectiveVector> table(static_cast<std::size_t>(hi) + 1);
    for (int l1 = lo; l1 <= hi; ++l1)
        table[static_cast<std::size_t>(l1)] = evaluate(instance, make_split(l1, total));

    const auto make_individual = [&](int l1) {
        Individual ind;
        ind.candidate = make_split(l1, total);
        ind.objectives = table[static_cast<std::size_t>(l1)];
        return ind;
    };

    Rng rng(config.seed);
    std::vector<Individual> population;
    population.reserve(static_cast<std::size_t>(config.population_size));
    for (int i = 0; i < config.population_size; ++i)
        population.push_back(make_individual(static_cast<int>(rng.next_int(lo, hi))));
    rank_population(population);

    for (int gen = 0; gen < config.generations; ++gen) {
        std::vector<Individual> combined = population;
        combined.reserve(population.size() * 2);

        for (int i = 0; i < config.population_size; ++i) {
            const Individual& parent_a = population[tournament(population, rng)];
            const Individual& parent_b = population[tournament(population, rng)];

            int child = parent_a.candidate.l1;
            if (rng.chance(config.crossover_rate))
                child = static_cast<int>(
                    std::llround((parent_a.candidate.l1 + parent_b.candidate.l1) / 2.0));
            if (rng.chance(config.mutation_rate)) {
                static constexpr int steps[] = {-2, -1, 1, 2};
                child += steps[rng.next_int(0, 3)];
            }
            child = std::clamp(child, lo, hi);
            combined.push_back(make_individual(child));
        }

        rank_population(combined);
        std::stable_sort(combined.begin(), combined.end(), [](const Individual& a, const Individual& b) {
            if (a.rank != b.rank) return a.rank < b.rank;
            return a.crowding > b.crowding;
        });
        combined.resize(static_cast<std::size_t>(config.population_size));
        population = std::move(combined);
        rank_population(population);
        if (observer) observer(gen, population);
    }

    ParetoSet result;
    for (const Individual& ind : population)
        if (ind.rank == 0) result.members.push_back(ind);
    std::stable_sort(result.members.begin(), result.members.end(),
                     [](const Individual& a, const Individual& b) {
                         return a.candidate.l1 < b.candidate.l1;
                     });
    result.members.erase(std::unique(result.members.begin(), result.members.end(),
                                     [](const Individual& a, const Individual& b) {
                                         return a.candidate.l1 == b.candidate.l1;
                                     }),
                         result.members.end());
    return result;
}

} // namespace splitplan
