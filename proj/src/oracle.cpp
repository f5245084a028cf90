#include "splitplan/oracle.hpp"

#include "splitplan/nsga2.hpp"

namespace splitplan {

std::vector<SweepEntry> enumerate_splits(const ProblemInstance& instance) {
    const int total = instance.total_layers();
    std::vector<SweepEntry> entries;
    entries.reserve(static_cast<std::size_t>(total - 1));
    for (int l1 = 1; l1 <= total - 1; ++l1) {
        SweepEntry entry;
        entry.candidate = make_split(l1, total);
        entry.objectives = evaluate(instance, entry.candidate);
        entry.feasible = check_feasible(instance, entry.candidate).ok;
        entries.push_back(entry);
    }
    return entries;
}

TrueSelection true_selection(const ProblemInstance& instance, Normalization normalization) {
    const std::vector<SweepEntry> entries = enumerate_splits(instance);

    std::vector<SweepEntry> feasible;
    for (const SweepEntry& entry : entries)
        if (entry.feasible) feasible.push_back(entry);
    if (feasible.empty()) throw NoFeasibleSolution("no feasible split");

    TrueSelection selection;
    for (const SweepEntry& entry : feasible) {
        bool dominated = false;
        for (const SweepEntry& other : feasible) {
            if (dominates(other.objectives, entry.objectives)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) selection.pareto.push_back(entry);
    }

    ParetoSet pareto;
    for (const SweepEntry& entry : selection.pareto)
        pareto.members.push_back({entry.candidate, entry.objectives, 0, 0.0});
    const Individual best = select_best(pareto, instance, normalization);
    selection.choice = best.candidate;
    selection.choice_objectives = best.objectives;
    return selection;
}

} // namespace splitplan
