#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "splitplan/baselines.hpp"
#include "splitplan/nsga2.hpp"
#include "splitplan/oracle.hpp"
#include "splitplan/topsis.hpp"

namespace splitplan {

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

/// Full enumeration as CSV with the fixed schema
/// l1,l2,f1_s,f2_mJ,f3_bytes,feasible,pareto,chosen.
/// Floats are round-trip exact; f3 is printed as an integer byte count.
std::string sweep_csv(const std::vector<SweepEntry>& entries, const TrueSelection& selection);

nlohmann::json sweep_json(const std::vector<SweepEntry>& entries, const TrueSelection& selection);

/// The optimize plan document.
nlohmann::json plan_json(const ProblemInstance& instance, const ParetoSet& pareto,
                         const DecisionAnalysis& analysis, const Individual& chosen,
                         const GaConfig& config, Normalization normalization);

std::string plan_table(const nlohmann::json& plan);

struct ComparisonRow {
    std::string algorithm;
    int l1 = 0;
    ObjectiveVector objectives;
    bool within_split_set = true;
};

nlohmann::json compare_json(const std::vector<ComparisonRow>& rows);
std::string compare_table(const std::vector<ComparisonRow>& rows);
std::string compare_csv(const std::vector<ComparisonRow>& rows);

nlohmann::json profile_json(const ModelProfile& model);
std::string profile_table(const ModelProfile& model);

} // namespace splitplan
